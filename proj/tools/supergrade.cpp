/// \file supergrade.cpp
/// Batch command-line front end.  Ingests algebra/cochain JSON files, runs
/// identity checks, gradation analysis, catalog access and classification
/// scenarios, and emits human-readable or JSON reports.
///
/// Exit codes: 0 = all verdicts pass / outcome matches; 1 = a verdict fails;
/// 2 = usage, file, parse or construction error.

#include <supergrade/catalog.hpp>
#include <supergrade/classify.hpp>
#include <supergrade/gradation.hpp>
#include <supergrade/json_io.hpp>
#include <supergrade/version.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace {

using supergrade::Json;
using supergrade::SuperAlgebra;

// ---------------------------------------------------------------------------
// output helpers
// ---------------------------------------------------------------------------

bool color_enabled() {
    const char* env = std::getenv("SUPERGRADE_COLOR");
    std::string v = env ? env : "auto";
    if (v == "never") return false;
    return isatty(fileno(stdout)) != 0;
}

std::string paint(const std::string& s, const char* code, bool color) {
    if (!color) return s;
    return std::string("\033[") + code + "m" + s + "\033[0m";
}
std::string pass_fail(bool ok, bool color) {
    return ok ? paint("PASS", "32", color) : paint("FAIL", "31", color);
}
std::string yes_no(bool ok, bool color) {
    return ok ? paint("yes", "32", color) : paint("no", "31", color);
}

/// Report scaffold shared by every subcommand: command echo, tool version,
/// verdict payload, timing.
struct Report {
    Json j;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    explicit Report(std::string echo) {
        j["tool"] = "supergrade";
        j["version"] = supergrade::version_string;
        j["command"] = std::move(echo);
    }
    void stamp() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        j["timing_ms"] = static_cast<long long>(ms);
    }
};

// ---------------------------------------------------------------------------
// file loading with line/column parse diagnostics
// ---------------------------------------------------------------------------

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json_text(const std::string& path, const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t pos = e.byte > 0 ? e.byte - 1 : 0;
        if (pos > text.size()) pos = text.size();
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < pos; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        // strip nlohmann's "[json.exception...]" prefix; keep the substance
        if (auto sp = what.find("] "); sp != std::string::npos) what = what.substr(sp + 2);
        // drop the library's own position clause: the path:line:col prefix carries it
        if (auto at = what.find("parse error at line "); at != std::string::npos)
            if (auto colon = what.find(": ", at); colon != std::string::npos)
                what = "parse error: " + what.substr(colon + 2);
        throw std::invalid_argument(path + ":" + std::to_string(line) + ":" +
                                    std::to_string(col) + ": " + what);
    }
}

SuperAlgebra load_algebra(const std::string& path, int max_dim) {
    Json j = parse_json_text(path, slurp(path));
    SuperAlgebra g = [&] {
        try {
            return supergrade::algebra_from_json(j);
        } catch (const std::exception& e) {
            throw std::invalid_argument(path + ": " + e.what());
        }
    }();
    if (static_cast<int>(g.dim()) > max_dim)
        throw std::invalid_argument(path + ": total dimension " + std::to_string(g.dim()) +
                                    " exceeds the safety cap (--max-dim " +
                                    std::to_string(max_dim) + ")");
    return g;
}

// ---------------------------------------------------------------------------
// JSON serialization of library report types
// ---------------------------------------------------------------------------

Json algebra_summary(const SuperAlgebra& g) {
    Json a;
    a["name"] = g.name();
    a["kind"] = supergrade::kind_name(g.kind());
    a["dim_even"] = g.dim_even();
    a["dim_odd"] = g.dim_odd();
    a["parameters"] = g.parameters();
    return a;
}

Json identity_violations(const SuperAlgebra& g, const supergrade::IdentityReport& r) {
    Json arr = Json::array();
    for (const auto& v : r.violations)
        arr.push_back(Json{{"args", {g.basis_name(v.x), g.basis_name(v.y), g.basis_name(v.z)}},
                           {"defect", g.vec_str(v.diff)}});
    return arr;
}

/// Pairwise super skew-symmetry defects [a,b] + (-1)^{|a||b|}[b,a].
Json skew_violations(const SuperAlgebra& g) {
    Json arr = Json::array();
    for (supergrade::Bv a : g.basis())
        for (supergrade::Bv b : g.basis()) {
            int sgn = (a.parity * b.parity) % 2 == 0 ? 1 : -1;
            supergrade::Vec v = g.product_basis(a, b);
            supergrade::vec_add_scaled(v, g.product_basis(b, a), supergrade::Poly(sgn));
            if (!supergrade::vec_is_zero(v))
                arr.push_back(Json{{"args", {g.basis_name(a), g.basis_name(b)}},
                                   {"defect", g.vec_str(v)}});
        }
    return arr;
}

Json layers_to_json(const SuperAlgebra& g, const supergrade::NaturalLayers& nl) {
    Json arr = Json::array();
    for (const auto& layer : nl.layers) {
        Json even = Json::array(), odd = Json::array();
        for (const auto& v : layer.even) even.push_back(g.vec_str(v));
        for (const auto& v : layer.odd) odd.push_back(g.vec_str(v));
        arr.push_back(Json{{"even", std::move(even)}, {"odd", std::move(odd)}});
    }
    return arr;
}

Json graded_violation_to_json(const SuperAlgebra& g, const supergrade::GradedViolation& v) {
    Json j;
    j["layer_left"] = v.layer_left;
    j["layer_right"] = v.layer_right;
    j["left"] = g.vec_str(v.left);
    j["right"] = g.vec_str(v.right);
    j["product"] = g.vec_str(v.product);
    j["lands_in_layer"] = v.lands_in_layer ? Json(*v.lands_in_layer) : Json(nullptr);
    j["note"] = v.note;
    return j;
}

Json block_to_json(const supergrade::MatrixQ& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Serializes a linear map as its two blocks plus readable per-generator
/// images ("X0 -> X0 + 2*X1").
Json map_to_json(const supergrade::LinearMap& f) {
    Json j;
    j["source"] = f.source.name();
    j["target"] = f.target.name();
    j["even_block"] = block_to_json(f.even_block);
    j["odd_block"] = block_to_json(f.odd_block);
    Json images = Json::array();
    for (int parity : {0, 1}) {
        const auto& block = parity == 0 ? f.even_block : f.odd_block;
        for (std::size_t r = 0; r < block.rows(); ++r) {
            supergrade::Vec img;
            for (std::size_t c = 0; c < block.cols(); ++c)
                if (!block.at(r, c).is_zero())
                    img[supergrade::Bv{parity, int(c)}] = block.at(r, c);
            images.push_back(f.source.basis_name(supergrade::Bv{parity, int(r)}) + " -> " +
                             f.target.vec_str(img));
        }
    }
    j["images"] = std::move(images);
    return j;
}

Json subspace_to_json(const SuperAlgebra& g, const supergrade::Subspace& s) {
    Json j;
    j["dim_even"] = s.dim_even();
    j["dim_odd"] = s.dim_odd();
    Json even = Json::array(), odd = Json::array();
    for (const auto& v : s.vectors(0)) even.push_back(g.vec_str(v));
    for (const auto& v : s.vectors(1)) odd.push_back(g.vec_str(v));
    j["even"] = std::move(even);
    j["odd"] = std::move(odd);
    return j;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

void render_check(const Json& j, bool color) {
    const Json& a = j.at("algebra");
    std::cout << "check: " << j.at("file").get<std::string>() << "\n";
    std::cout << "algebra '" << a.at("name").get<std::string>() << "' ("
              << a.at("kind").get<std::string>() << "), dim (" << a.at("dim_even")
              << "|" << a.at("dim_odd") << ")";
    if (!a.at("parameters").empty()) {
        std::cout << ", parameters:";
        for (const auto& p : a.at("parameters")) std::cout << " " << p.get<std::string>();
    }
    std::cout << "\n";
    for (const auto& v : j.at("verdicts")) {
        std::cout << "  " << v.at("check").get<std::string>() << ": "
                  << pass_fail(v.at("holds").get<bool>(), color);
        const Json& viols = v.at("violations");
        if (!viols.empty()) {
            std::cout << "  (" << viols.size() << " violation"
                      << (viols.size() == 1 ? "" : "s") << "; first: (";
            const Json& first = viols.front();
            bool sep = false;
            for (const auto& arg : first.at("args")) {
                if (sep) std::cout << ",";
                std::cout << arg.get<std::string>();
                sep = true;
            }
            std::cout << ") defect " << first.at("defect").get<std::string>() << ")";
        }
        std::cout << "\n";
    }
    const Json& ann = j.at("annihilator");
    if (ann.at("computed").get<bool>()) {
        std::cout << "  right annihilator: dim (" << ann.at("dim_even") << "|"
                  << ann.at("dim_odd") << ")";
        std::vector<std::string> gens;
        for (const auto& v : ann.at("even")) gens.push_back(v.get<std::string>());
        for (const auto& v : ann.at("odd")) gens.push_back(v.get<std::string>());
        if (!gens.empty()) {
            std::cout << ", spanned by {";
            for (std::size_t i = 0; i < gens.size(); ++i)
                std::cout << (i ? ", " : " ") << gens[i];
            std::cout << " }";
        }
        std::cout << "\n";
    } else {
        std::cout << "  right annihilator: skipped ("
                  << ann.at("reason").get<std::string>() << ")\n";
    }
    const Json& ni = j.at("nilindex");
    if (!ni.at("computed").get<bool>()) {
        std::cout << "  s-nilindex: skipped (" << ni.at("reason").get<std::string>() << ")\n";
    } else if (ni.at("nilpotent").get<bool>()) {
        std::cout << "  s-nilindex: (" << ni.at("s_nilindex").at(0) << ", "
                  << ni.at("s_nilindex").at(1) << "), nilpotent: " << yes_no(true, color)
                  << "\n";
    } else {
        std::cout << "  s-nilindex: undefined, nilpotent: " << yes_no(false, color) << "\n";
    }
    std::cout << "check: " << pass_fail(j.at("pass").get<bool>(), color) << "\n";
    std::cout << "elapsed: " << j.at("timing_ms") << " ms\n";
}

int run_check(const std::string& path, bool require_lie, bool require_leibniz, bool json_mode,
              int max_dim, const std::string& echo) {
    Report rep(echo);
    SuperAlgebra g = load_algebra(path, max_dim);
    rep.j["file"] = path;
    rep.j["algebra"] = algebra_summary(g);

    Json verdicts = Json::array();
    bool all = true;
    auto add = [&](const std::string& label, bool holds, Json viols) {
        verdicts.push_back(
            Json{{"check", label}, {"holds", holds}, {"violations", std::move(viols)}});
        all = all && holds;
    };
    bool lie_suite = g.kind() == supergrade::AlgKind::lie || require_lie;
    bool leibniz_suite = g.kind() == supergrade::AlgKind::leibniz || require_leibniz;
    if (lie_suite) {
        Json sk = skew_violations(g);
        add("super skew-symmetry", sk.empty(), std::move(sk));
        supergrade::IdentityReport r = supergrade::check_super_jacobi(g);
        add("super Jacobi identity", r.holds(), identity_violations(g, r));
    }
    if (leibniz_suite) {
        supergrade::IdentityReport r = supergrade::check_super_leibniz(g);
        add("super Leibniz identity", r.holds(), identity_violations(g, r));
    }
    rep.j["verdicts"] = std::move(verdicts);

    if (g.is_parameter_free()) {
        supergrade::Subspace ann = supergrade::right_annihilator(g);
        Json a;
        a["computed"] = true;
        Json sub = subspace_to_json(g, ann);
        for (auto& [k, v] : sub.items()) a[k] = std::move(v);
        rep.j["annihilator"] = std::move(a);
        supergrade::CentralSequences cs = supergrade::central_sequences(g);
        Json ni;
        ni["computed"] = true;
        ni["nilpotent"] = cs.nilpotent;
        if (cs.nilpotent) {
            auto [p, q] = supergrade::s_nilindex(g);
            ni["s_nilindex"] = Json::array({p, q});
        } else {
            ni["s_nilindex"] = nullptr;
        }
        rep.j["nilindex"] = std::move(ni);
    } else {
        Json skipped{{"computed", false}, {"reason", "algebra has free parameters"}};
        rep.j["annihilator"] = skipped;
        rep.j["nilindex"] = skipped;
    }

    rep.j["pass"] = all;
    rep.stamp();
    if (json_mode)
        std::cout << supergrade::emit(rep.j);
    else
        render_check(rep.j, color_enabled());
    return all ? 0 : 1;
}

// ---------------------------------------------------------------------------
// gr
// ---------------------------------------------------------------------------

void render_gr(const Json& j, bool color) {
    std::cout << "gr: " << j.at("file").get<std::string>() << "\n";
    const Json& a = j.at("algebra");
    std::cout << "algebra '" << a.at("name").get<std::string>() << "' ("
              << a.at("kind").get<std::string>() << "), dim (" << a.at("dim_even") << "|"
              << a.at("dim_odd") << ")\n";
    std::cout << "nilpotent: " << yes_no(j.at("nilpotent").get<bool>(), color) << "\n";
    const Json& layers = j.at("layers");
    if (!layers.empty()) {
        std::cout << "layers:\n";
        std::size_t k = 1;
        for (const auto& layer : layers) {
            std::cout << "  " << k++ << ": even {";
            bool sep = false;
            for (const auto& v : layer.at("even")) {
                std::cout << (sep ? ", " : " ") << v.get<std::string>();
                sep = true;
            }
            std::cout << (sep ? " }" : "}") << "  odd {";
            sep = false;
            for (const auto& v : layer.at("odd")) {
                std::cout << (sep ? ", " : " ") << v.get<std::string>();
                sep = true;
            }
            std::cout << (sep ? " }" : "}") << "\n";
        }
    }
    std::cout << "graded: " << yes_no(j.at("graded").get<bool>(), color) << "\n";
    for (const auto& v : j.at("violations"))
        std::cout << "  violation: " << v.at("note").get<std::string>() << "\n";
    std::cout << "naturally graded: " << yes_no(j.at("naturally_graded").get<bool>(), color)
              << "\n";
    if (!j.at("witness").is_null()) {
        std::cout << "witness (verified isomorphism onto gr):\n";
        for (const auto& img : j.at("witness").at("images"))
            std::cout << "  " << img.get<std::string>() << "\n";
    }
    std::cout << "elapsed: " << j.at("timing_ms") << " ms\n";
}

int run_gr(const std::string& path, bool json_mode, int max_dim, const std::string& echo) {
    Report rep(echo);
    SuperAlgebra g = load_algebra(path, max_dim);
    rep.j["file"] = path;
    rep.j["algebra"] = algebra_summary(g);
    if (!g.is_parameter_free())
        throw std::invalid_argument(path +
                                    ": gradation analysis requires a parameter-free algebra");

    supergrade::CentralSequences cs = supergrade::central_sequences(g);
    rep.j["nilpotent"] = cs.nilpotent;
    bool ok = false;
    if (!cs.nilpotent) {
        rep.j["layers"] = Json::array();
        rep.j["graded"] = false;
        rep.j["violations"] = Json::array(
            {Json{{"note",
                   "not nilpotent: the descending central sequence stabilizes at a nonzero "
                   "subspace"}}});
        rep.j["naturally_graded"] = false;
        rep.j["witness"] = nullptr;
        rep.j["gr_algebra"] = nullptr;
    } else {
        supergrade::GradednessReport gd = supergrade::is_graded(g);
        rep.j["layers"] = layers_to_json(g, gd.layers);
        rep.j["graded"] = gd.graded;
        Json viols = Json::array();
        if (gd.violation) viols.push_back(graded_violation_to_json(g, *gd.violation));
        rep.j["violations"] = std::move(viols);
        if (gd.graded) {
            supergrade::NatGradeReport ng = supergrade::is_naturally_graded(g);
            rep.j["naturally_graded"] = ng.naturally_graded;
            rep.j["witness"] = ng.witness ? map_to_json(*ng.witness) : Json(nullptr);
            rep.j["gr_algebra"] =
                supergrade::algebra_to_json(supergrade::associated_graded(g).algebra);
            ok = true;
        } else {
            rep.j["naturally_graded"] = false;
            rep.j["witness"] = nullptr;
            rep.j["gr_algebra"] = nullptr;
        }
    }
    rep.stamp();
    if (json_mode)
        std::cout << supergrade::emit(rep.j);
    else
        render_gr(rep.j, color_enabled());
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// natgrade
// ---------------------------------------------------------------------------

void render_natgrade(const Json& j, bool color) {
    std::cout << "natgrade: " << j.at("file").get<std::string>() << "\n";
    std::cout << "naturally graded: " << yes_no(j.at("naturally_graded").get<bool>(), color)
              << "\n";
    std::cout << "stage: " << j.at("stage").get<std::string>() << "\n";
    std::cout << "reason: " << j.at("evidence").get<std::string>() << "\n";
    const Json& dims = j.at("layer_dims");
    if (!dims.empty()) {
        std::cout << "layer dims:";
        for (const auto& d : dims) std::cout << " (" << d.at(0) << "|" << d.at(1) << ")";
        std::cout << "\n";
    }
    if (!j.at("witness").is_null()) {
        std::cout << "witness (verified isomorphism onto gr):\n";
        for (const auto& img : j.at("witness").at("images"))
            std::cout << "  " << img.get<std::string>() << "\n";
    }
    std::cout << "elapsed: " << j.at("timing_ms") << " ms\n";
}

int run_natgrade(const std::string& path, bool json_mode, int max_dim, const std::string& echo) {
    Report rep(echo);
    SuperAlgebra g = load_algebra(path, max_dim);
    rep.j["file"] = path;
    rep.j["algebra"] = algebra_summary(g);
    supergrade::NatGradeReport ng = [&] {
        try {
            return supergrade::is_naturally_graded(g);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(path + ": " + e.what());
        }
    }();
    rep.j["naturally_graded"] = ng.naturally_graded;
    rep.j["stage"] = ng.stage;
    rep.j["evidence"] = ng.evidence;
    Json dims = Json::array();
    for (const auto& [e, o] : ng.layer_dims) dims.push_back(Json::array({e, o}));
    rep.j["layer_dims"] = std::move(dims);
    rep.j["violation"] =
        ng.violation ? graded_violation_to_json(g, *ng.violation) : Json(nullptr);
    rep.j["witness"] = ng.witness ? map_to_json(*ng.witness) : Json(nullptr);
    rep.stamp();
    if (json_mode)
        std::cout << supergrade::emit(rep.j);
    else
        render_natgrade(rep.j, color_enabled());
    return ng.naturally_graded ? 0 : 1;
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

Json entry_to_json(const supergrade::CatalogEntry& e) {
    Json j;
    j["id"] = e.id;
    j["section"] = e.section;
    j["category"] = e.category;
    j["kind"] = supergrade::kind_name(e.kind);
    j["is_cochain"] = e.is_cochain;
    j["dims"] = e.dims;
    j["args"] = e.args;
    j["summary"] = e.summary;
    j["status"] = e.status;
    j["genuine_identity_holds"] = e.genuine_identity_holds;
    Json fd = Json::array();
    for (const auto& [n, m] : e.fixed_dims) fd.push_back(Json::array({n, m}));
    j["fixed_dims"] = std::move(fd);
    return j;
}

void render_catalog_list(const Json& j) {
    auto pad = [](std::string s, std::size_t w) {
        s += s.size() < w ? std::string(w - s.size(), ' ') : std::string(" ");
        return s;
    };
    std::cout << pad("ID", 16) << pad("SECTION", 9) << pad("CATEGORY", 12) << pad("KIND", 9)
              << pad("DIMS", 22) << "SUMMARY\n";
    for (const auto& e : j.at("entries"))
        std::cout << pad(e.at("id").get<std::string>(), 16)
                  << pad(e.at("section").get<std::string>(), 9)
                  << pad(e.at("category").get<std::string>(), 12)
                  << pad(e.at("kind").get<std::string>(), 9)
                  << pad(e.at("dims").get<std::string>(), 22)
                  << e.at("summary").get<std::string>() << "\n";
    std::cout << j.at("count") << " entries\n";
}

int run_catalog_list(const std::optional<std::string>& kind,
                     const std::optional<std::string>& section,
                     const std::optional<std::string>& category, const std::optional<int>& n,
                     const std::optional<int>& m, bool json_mode, const std::string& echo) {
    Report rep(echo);
    supergrade::EntryFilter f;
    if (kind) f.kind = supergrade::kind_from_name(*kind);
    if (section) f.section = *section;
    if (category) f.category = *category;
    if (n) f.n = *n;
    if (m) f.m = *m;
    std::vector<supergrade::CatalogEntry> es = supergrade::list_entries(f);
    Json entries = Json::array();
    for (const auto& e : es) entries.push_back(entry_to_json(e));
    rep.j["entries"] = std::move(entries);
    rep.j["count"] = es.size();
    rep.stamp();
    if (json_mode)
        std::cout << supergrade::emit(rep.j);
    else
        render_catalog_list(rep.j);
    return 0;
}

std::map<std::string, supergrade::Poly> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, supergrade::Poly> out;
    for (const std::string& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("--param expects key=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = supergrade::Poly::parse(kv.substr(eq + 1));
    }
    return out;
}

int run_catalog_show(const std::string& id, const std::optional<int>& n,
                     const std::optional<int>& m, const std::vector<std::string>& params,
                     int max_dim) {
    std::vector<supergrade::CatalogEntry> rows = supergrade::entries_for_id(id);
    if (rows.empty())
        throw std::invalid_argument("unknown catalog id '" + id +
                                    "' (see `supergrade catalog list`)");
    const supergrade::CatalogEntry& e = rows.front();
    if (e.is_cochain) {
        if (!n || !m)
            throw std::invalid_argument("'" + id +
                                        "' is a cochain over the chain model; pass --n and --m");
        if (!params.empty())
            throw std::invalid_argument("--param does not apply to cochain entries");
        supergrade::Cochain2 c = supergrade::make_cochain(id, *n, *m);
        if (static_cast<int>(c.base().dim()) > max_dim)
            throw std::invalid_argument("total dimension " + std::to_string(c.base().dim()) +
                                        " exceeds the safety cap (--max-dim " +
                                        std::to_string(max_dim) + ")");
        std::cout << supergrade::cochain_to_string(c);
        return 0;
    }
    supergrade::MakeArgs args;
    args.n = n;
    args.m = m;
    args.params = parse_params(params);
    SuperAlgebra g = supergrade::make_algebra(id, args);
    if (static_cast<int>(g.dim()) > max_dim)
        throw std::invalid_argument("total dimension " + std::to_string(g.dim()) +
                                    " exceeds the safety cap (--max-dim " +
                                    std::to_string(max_dim) + ")");
    std::cout << supergrade::algebra_to_string(g);
    return 0;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

void render_classify_list(const Json& j) {
    auto pad = [](std::string s, std::size_t w) {
        s += s.size() < w ? std::string(w - s.size(), ' ') : std::string(" ");
        return s;
    };
    std::cout << pad("ID", 16) << pad("KIND", 9) << pad("EXPECTED", 15) << "TITLE\n";
    for (const auto& s : j.at("scenarios"))
        std::cout << pad(s.at("id").get<std::string>(), 16)
                  << pad(s.at("kind").get<std::string>(), 9)
                  << pad(s.at("expected_outcome").get<std::string>(), 15)
                  << s.at("title").get<std::string>() << "\n";
    std::cout << j.at("count") << " scenarios\n";
}

int run_classify_list(bool json_mode, const std::string& echo) {
    Report rep(echo);
    Json scenarios = Json::array();
    for (const supergrade::Scenario& s : supergrade::scenarios()) {
        Json dims = Json::array();
        for (const auto& d : s.dims) dims.push_back(Json::array({d[0], d[1], d[2]}));
        scenarios.push_back(Json{{"id", s.id},
                                 {"title", s.title},
                                 {"kind", supergrade::kind_name(s.kind)},
                                 {"dims", std::move(dims)},
                                 {"expected_outcome", s.expected_outcome}});
    }
    rep.j["scenarios"] = std::move(scenarios);
    rep.j["count"] = supergrade::scenarios().size();
    rep.stamp();
    if (json_mode)
        std::cout << supergrade::emit(rep.j);
    else
        render_classify_list(rep.j);
    return 0;
}

Json move_to_json(const supergrade::NormalizationMove& mv) {
    Json j;
    j["kind"] = mv.kind;
    j["normalizes"] = mv.normalizes;
    j["to"] = mv.to.str();
    Json data = Json::object();
    for (const auto& [k, v] : mv.data) data[k] = v.str();
    j["data"] = std::move(data);
    j["note"] = mv.note;
    return j;
}

Json branch_to_json(const supergrade::Branch& b) {
    Json j;
    j["signature"] = supergrade::branch_signature(b);
    Json subs = Json::object();
    for (const auto& [k, v] : b.substitutions) subs[k] = v.str();
    j["substitutions"] = std::move(subs);
    Json eqs = Json::array(), ineqs = Json::array();
    for (const auto& p : b.residual.equations) eqs.push_back(p.str());
    for (const auto& p : b.residual.inequations) ineqs.push_back(p.str());
    j["residual_equations"] = std::move(eqs);
    j["residual_inequations"] = std::move(ineqs);
    j["flagged"] = b.flagged;
    return j;
}

void render_classify_run(const Json& j, bool color) {
    std::cout << "scenario " << j.at("id").get<std::string>() << ": "
              << j.at("title").get<std::string>() << "\n";
    std::cout << "outcome: " << j.at("outcome").get<std::string>() << " (expected: "
              << j.at("expected_outcome").get<std::string>() << ")\n";
    for (const auto& run : j.at("runs")) {
        const Json& d = run.at("dims");
        std::cout << "run (" << d.at(0) << "," << d.at(1);
        if (d.at(2).get<int>() != 0) std::cout << "," << d.at(2);
        std::cout << "):\n";
        std::cout << "  constraints:";
        if (run.at("constraints").empty()) std::cout << " (none)";
        for (const auto& c : run.at("constraints")) std::cout << " " << c.get<std::string>();
        std::cout << "\n";
        if (!run.at("global_inequations").empty()) {
            std::cout << "  non-degeneracy:";
            for (const auto& c : run.at("global_inequations"))
                std::cout << " " << c.get<std::string>() << " != 0";
            std::cout << "\n";
        }
        std::cout << "  branches (" << run.at("branches").size() << "):\n";
        for (const auto& b : run.at("branches"))
            std::cout << "    " << b.at("signature").get<std::string>() << "\n";
    }
    if (!j.at("laws").empty()) {
        std::cout << "laws:\n";
        for (const auto& l : j.at("laws")) {
            const Json& d = l.at("dims");
            std::cout << "  " << l.at("law_id").get<std::string>() << " at (" << d.at(0) << ","
                      << d.at(1) << ")"
                      << (l.at("family").get<bool>() ? " [one-parameter family]" : "")
                      << " on branch " << l.at("branch").get<std::string>()
                      << "; exact at canonical point: "
                      << yes_no(l.at("exact_at_canonical_point").get<bool>(), color)
                      << ", move map verified: "
                      << yes_no(l.at("move_map_verified").get<bool>(), color) << "\n";
            for (const auto& mv : l.at("moves"))
                std::cout << "      move: " << mv.at("note").get<std::string>() << "\n";
        }
    }
    if (!j.at("contradiction").is_null())
        std::cout << "contradiction: " << j.at("contradiction").get<std::string>() << "\n";
    std::cout << "checks:\n";
    for (const auto& c : j.at("checks")) {
        std::cout << "  [" << pass_fail(c.at("pass").get<bool>(), color) << "] "
                  << c.at("name").get<std::string>();
        if (!c.at("note").get<std::string>().empty())
            std::cout << " — " << c.at("note").get<std::string>();
        std::cout << "\n";
    }
    std::cout << "matches expected: " << yes_no(j.at("matches_expected").get<bool>(), color)
              << "\n";
    std::cout << "elapsed: " << j.at("timing_ms") << " ms\n";
}

int run_classify_run(const std::string& id, unsigned seed, bool json_mode,
                     const std::string& echo) {
    Report rep(echo);
    supergrade::ScenarioReport r = supergrade::run_scenario(id, seed);
    rep.j["id"] = r.id;
    rep.j["title"] = r.title;
    rep.j["outcome"] = r.outcome;
    rep.j["expected_outcome"] = supergrade::scenario_by_id(id).expected_outcome;
    Json runs = Json::array();
    for (const auto& run : r.runs) {
        Json rj;
        rj["dims"] = Json::array({run.dims[0], run.dims[1], run.dims[2]});
        Json cs = Json::array(), gs = Json::array(), bs = Json::array();
        for (const auto& p : run.constraints) cs.push_back(p.str());
        for (const auto& p : run.global_inequations) gs.push_back(p.str());
        for (const auto& b : run.branches) bs.push_back(branch_to_json(b));
        rj["constraints"] = std::move(cs);
        rj["global_inequations"] = std::move(gs);
        rj["branches"] = std::move(bs);
        runs.push_back(std::move(rj));
    }
    rep.j["runs"] = std::move(runs);
    Json laws = Json::array();
    for (const auto& l : r.laws) {
        Json lj;
        lj["law_id"] = l.law_id;
        lj["instance"] = l.instance_name;
        lj["dims"] = Json::array({l.dims[0], l.dims[1], l.dims[2]});
        lj["branch"] = l.branch;
        lj["family"] = l.family;
        lj["exact_at_canonical_point"] = l.exact_at_canonical_point;
        lj["move_map_verified"] = l.move_map_verified;
        Json mvs = Json::array();
        for (const auto& mv : l.moves) mvs.push_back(move_to_json(mv));
        lj["moves"] = std::move(mvs);
        laws.push_back(std::move(lj));
    }
    rep.j["laws"] = std::move(laws);
    rep.j["contradiction"] = r.contradiction.empty() ? Json(nullptr) : Json(r.contradiction);
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"note", c.note}});
    rep.j["checks"] = std::move(checks);
    rep.j["matches_expected"] = r.matches_expected;
    rep.stamp();
    if (json_mode)
        std::cout << supergrade::emit(rep.j);
    else
        render_classify_run(rep.j, color_enabled());
    return r.matches_expected ? 0 : 1;
}

} // namespace

// ---------------------------------------------------------------------------
// main
// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    std::string echo = "supergrade";  // normalized program name for determinism
    for (int i = 1; i < argc; ++i) echo += std::string(" ") + argv[i];

    CLI::App app{"supergrade " + std::string(supergrade::version_string) +
                 " — exact identity checks, natural gradations, catalog access and "
                 "classification scenarios for nilpotent Lie/Leibniz superalgebras"};
    app.require_subcommand(1);
    bool json_mode = false;
    int max_dim = 24;
    app.add_flag("--json", json_mode, "emit the JSON report instead of human-readable text");
    app.add_option("--max-dim", max_dim,
                   "safety cap on the total dimension of handled algebras")
        ->capture_default_str();

    int rc = 0;

    // check
    std::string check_path;
    bool require_lie = false, require_leibniz = false;
    CLI::App* check = app.add_subcommand(
        "check", "run the kind-appropriate identity suite, annihilator and s-nilindex");
    check->fallthrough();
    check->add_option("file", check_path, "algebra JSON file")->required();
    check->add_flag("--require-lie", require_lie,
                    "additionally require super skew-symmetry + super Jacobi");
    check->add_flag("--require-leibniz", require_leibniz,
                    "additionally require the super Leibniz identity");
    check->callback(
        [&] { rc = run_check(check_path, require_lie, require_leibniz, json_mode, max_dim, echo); });

    // gr
    std::string gr_path;
    CLI::App* gr = app.add_subcommand(
        "gr", "natural gradation layers, gradedness and the associated graded algebra");
    gr->fallthrough();
    gr->add_option("file", gr_path, "algebra JSON file")->required();
    gr->callback([&] { rc = run_gr(gr_path, json_mode, max_dim, echo); });

    // natgrade
    std::string ng_path;
    CLI::App* ng = app.add_subcommand(
        "natgrade", "decide natural gradedness with a verified witness or a violation");
    ng->fallthrough();
    ng->add_option("file", ng_path, "algebra JSON file")->required();
    ng->callback([&] { rc = run_natgrade(ng_path, json_mode, max_dim, echo); });

    // catalog {list, show}
    CLI::App* cat = app.add_subcommand("catalog", "browse the built-in algebra/cochain catalog");
    cat->require_subcommand(1);
    cat->fallthrough();
    std::optional<std::string> cl_kind, cl_section, cl_category;
    std::optional<int> cl_n, cl_m;
    CLI::App* cat_list = cat->add_subcommand("list", "list catalog entries");
    cat_list->fallthrough();
    cat_list->add_option("--kind", cl_kind, "filter by kind: lie | leibniz");
    cat_list->add_option("--section", cl_section, "filter by section tag, e.g. 4.3");
    cat_list->add_option("--category", cl_category,
                         "filter by category: definition | law | family | cochain");
    cat_list->add_option("--n", cl_n, "with --m: restrict to laws present at dims (n,m)");
    cat_list->add_option("--m", cl_m, "with --n: restrict to laws present at dims (n,m)");
    cat_list->callback([&] {
        rc = run_catalog_list(cl_kind, cl_section, cl_category, cl_n, cl_m, json_mode, echo);
    });

    std::string show_id;
    std::optional<int> show_n, show_m;
    std::vector<std::string> show_params;
    CLI::App* cat_show = cat->add_subcommand("show", "emit one catalog entry as canonical JSON");
    cat_show->fallthrough();
    cat_show->add_option("id", show_id, "catalog id, e.g. NG, L, 4.6/2, phi_1_2")->required();
    cat_show->add_option("--n", show_n, "dimension argument n");
    cat_show->add_option("--m", show_m, "dimension argument m");
    cat_show->add_option("--param", show_params,
                         "named scalar parameter key=value (repeatable), e.g. t=1/2");
    cat_show->callback([&] { rc = run_catalog_show(show_id, show_n, show_m, show_params, max_dim); });

    // classify {list, run}
    CLI::App* cls = app.add_subcommand("classify", "run classification scenarios");
    cls->require_subcommand(1);
    cls->fallthrough();
    CLI::App* cls_list = cls->add_subcommand("list", "list scenario ids and expected outcomes");
    cls_list->fallthrough();
    cls_list->callback([&] { rc = run_classify_list(json_mode, echo); });

    std::string run_id;
    unsigned seed = 1;
    CLI::App* cls_run = cls->add_subcommand(
        "run", "run one scenario; exit 0 iff the outcome matches the expectation");
    cls_run->fallthrough();
    cls_run->add_option("id", run_id, "scenario id, e.g. 4.6 (see `classify list`)")->required();
    cls_run->add_option("--seed", seed, "seed for sampled soundness/coverage checks")
        ->capture_default_str();
    cls_run->callback([&] { rc = run_classify_run(run_id, seed, json_mode, echo); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "supergrade: error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
