#pragma once

/// \file json_io.hpp
/// Canonical JSON serialization for superalgebras and 2-cochains.
///
/// The emitted form is canonical: fixed field order, products listed in
/// canonical pair order, result coordinates in basis order, coefficients in
/// the canonical scalar grammar.  parse(emit(x)) == x and re-emitting yields
/// byte-identical text.

#include "deform.hpp"
#include "superalgebra.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace supergrade {

using Json = nlohmann::ordered_json;

[[nodiscard]] inline Json vec_to_json(const SuperAlgebra& g, const Vec& v) {
    Json arr = Json::array();
    for (const auto& [b, c] : v) {
        if (c.is_zero()) continue;
        arr.push_back(Json{{"basis", g.basis_name(b)}, {"coeff", c.str()}});
    }
    return arr;
}

[[nodiscard]] inline Vec vec_from_json(const SuperAlgebra& g, const Json& arr) {
    Vec v;
    if (!arr.is_array()) throw std::invalid_argument("json_io: result must be an array");
    for (const auto& item : arr) {
        Bv b = g.basis_by_name(item.at("basis").get<std::string>());
        Poly c = Poly::parse(item.at("coeff").get<std::string>());
        auto [it, fresh] = v.emplace(b, c);
        if (!fresh) it->second += c;
    }
    vec_trim(v);
    return v;
}

[[nodiscard]] inline Json algebra_to_json(const SuperAlgebra& g) {
    Json j;
    j["name"] = g.name();
    j["kind"] = kind_name(g.kind());
    j["even_basis"] = g.even_basis();
    j["odd_basis"] = g.odd_basis();
    j["parameters"] = g.parameters();
    Json prods = Json::array();
    for (const auto& [key, v] : g.stored_products()) {
        if (vec_is_zero(v)) continue;
        prods.push_back(Json{{"left", g.basis_name(key.first)},
                             {"right", g.basis_name(key.second)},
                             {"result", vec_to_json(g, v)}});
    }
    j["products"] = std::move(prods);
    return j;
}

[[nodiscard]] inline SuperAlgebra algebra_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("json_io: algebra must be an object");
    for (const char* field : {"name", "kind", "even_basis", "odd_basis", "products"})
        if (!j.contains(field))
            throw std::invalid_argument(std::string("json_io: missing field '") + field + "'");
    SuperAlgebra g(j.at("name").get<std::string>(),
                   kind_from_name(j.at("kind").get<std::string>()),
                   j.at("even_basis").get<std::vector<std::string>>(),
                   j.at("odd_basis").get<std::vector<std::string>>());
    for (const auto& p : j.at("products")) {
        Bv a = g.basis_by_name(p.at("left").get<std::string>());
        Bv b = g.basis_by_name(p.at("right").get<std::string>());
        g.set_product(a, b, vec_from_json(g, p.at("result")));
    }
    if (j.contains("parameters")) {
        auto declared = j.at("parameters").get<std::vector<std::string>>();
        std::sort(declared.begin(), declared.end());
        if (declared != g.parameters())
            throw std::invalid_argument(
                "json_io: declared parameter list does not match the parameters appearing "
                "in the structure constants");
    }
    return g;
}

[[nodiscard]] inline Json cochain_to_json(const Cochain2& c) {
    Json j;
    j["name"] = c.name();
    if (c.declared_weight())
        j["declared_weight"] = *c.declared_weight();
    else
        j["declared_weight"] = nullptr;
    j["base"] = algebra_to_json(c.base());
    Json comps = Json::array();
    for (const auto& [key, v] : c.components()) {
        if (vec_is_zero(v)) continue;
        comps.push_back(Json{{"left", c.base().basis_name(key.first)},
                             {"right", c.base().basis_name(key.second)},
                             {"result", vec_to_json(c.base(), v)}});
    }
    j["components"] = std::move(comps);
    return j;
}

[[nodiscard]] inline Cochain2 cochain_from_json(const Json& j) {
    for (const char* field : {"name", "declared_weight", "base", "components"})
        if (!j.contains(field))
            throw std::invalid_argument(std::string("json_io: missing cochain field '") + field +
                                        "'");
    SuperAlgebra base = algebra_from_json(j.at("base"));
    std::optional<int> w;
    if (!j.at("declared_weight").is_null()) w = j.at("declared_weight").get<int>();
    Cochain2 c(base, j.at("name").get<std::string>(), w);
    for (const auto& p : j.at("components")) {
        Bv a = base.basis_by_name(p.at("left").get<std::string>());
        Bv b = base.basis_by_name(p.at("right").get<std::string>());
        c.set_component(a, b, vec_from_json(base, p.at("result")));
    }
    return c;
}

/// Canonical text form (2-space indent, trailing newline).
[[nodiscard]] inline std::string emit(const Json& j) { return j.dump(2) + "\n"; }

[[nodiscard]] inline std::string cochain_to_string(const Cochain2& c) {
    return emit(cochain_to_json(c));
}
[[nodiscard]] inline Cochain2 cochain_from_string(const std::string& text) {
    return cochain_from_json(Json::parse(text));
}

[[nodiscard]] inline std::string algebra_to_string(const SuperAlgebra& g) {
    return emit(algebra_to_json(g));
}

[[nodiscard]] inline SuperAlgebra algebra_from_string(const std::string& text) {
    return algebra_from_json(Json::parse(text));
}

[[nodiscard]] inline SuperAlgebra algebra_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("json_io: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return algebra_from_string(ss.str());
}

inline void algebra_to_file(const SuperAlgebra& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("json_io: cannot write '" + path + "'");
    out << algebra_to_string(g);
}

} // namespace supergrade
