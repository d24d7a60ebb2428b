/// Acceptance suite: seven top-level verdicts, one [PASS]/[FAIL] line each,
/// with indented evidence notes.  The process exit code equals the number of
/// failed criteria, so a fully green run exits 0.
///
/// Every check is exact (rational / polynomial arithmetic); no tolerances
/// appear anywhere.  Criterion 1 is expected to stay red: six catalog laws
/// fail the genuine super Jacobi identity while satisfying the
/// infinitesimal-cocycle + quadratic-composition criterion their constraint
/// sets were derived from.  The suite prints both facts for each of the six
/// instead of hiding either; see docs/conventions.md for the full table.

#include <supergrade/classify.hpp>
#include <supergrade/version.hpp>

#include <algorithm>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#ifndef SUPERGRADE_SOURCE_DIR
#define SUPERGRADE_SOURCE_DIR "."
#endif

using namespace supergrade;

namespace {

struct Result {
    bool pass = true;
    std::vector<std::string> notes;
    void note(std::string s) { notes.push_back(std::move(s)); }
    void fail(std::string s) {
        pass = false;
        notes.push_back("FAIL: " + std::move(s));
    }
    void require(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
};

struct Inst {
    std::string label;
    SuperAlgebra g;
};

std::string dims_label(const std::string& id, int n, int m) {
    return id + " @ (" + std::to_string(n) + "," + std::to_string(m) + ")";
}

/// Instance label up to the " @ ..." dimension suffix = the catalog id.
std::string law_id_of(const std::string& label) {
    auto pos = label.find(" @");
    return pos == std::string::npos ? label : label.substr(0, pos);
}

/// Every classified law at its tabulated dimensions; symbolic parameters
/// (alpha, t) are kept so the identity checks run over them symbolically.
std::vector<Inst> law_instances_symbolic() {
    std::vector<Inst> out;
    auto add = [&](const std::string& id, MakeArgs a = {}, std::string label = "") {
        out.push_back({label.empty() ? id : std::move(label), make_algebra(id, a)});
    };
    for (const char* id :
         {"4.1/2,1", "4.1/2,2", "4.1/2,3", "4.1/2,4", "4.1/3,2-1", "4.1/3,2-2", "4.1/4,2",
          "4.1/3,3-1", "4.1/3,3-2", "4.3/1", "4.3/2", "4.3/3", "4.6/1", "4.6/2", "4.6/3",
          "4.6/4", "4.7/5,3", "4.8/6,3"})
        add(id);
    for (int m : {5, 6, 7}) {
        add("4.2/2,m", {.m = m}, "4.2/2,m @ m=" + std::to_string(m));
        add("4.4/3,m-1", {.m = m}, "4.4/3,m-1 @ m=" + std::to_string(m));
        add("4.4/3,m-2", {.m = m}, "4.4/3,m-2 @ m=" + std::to_string(m));
    }
    add("mu1_alpha", {.n = 2, .m = 2});
    add("mu2", {.n = 3, .m = 2});
    add("mu3", {.n = 3, .m = 2}, dims_label("mu3", 3, 2));
    add("mu1", {.n = 2, .m = 3}, dims_label("mu1", 2, 3));
    add("mu3", {.n = 2, .m = 3}, dims_label("mu3", 2, 3));
    add("mu1", {.n = 3, .m = 3}, dims_label("mu1", 3, 3));
    add("mu8", {.n = 3, .m = 3});
    add("mu9", {.n = 4, .m = 3});
    add("mu12", {.n = 4, .m = 3});
    for (int m : {4, 5, 6, 7, 8}) {
        add("mu_m_minus_1", {.n = 2, .m = m}, "mu_m_minus_1 @ m=" + std::to_string(m));
        add("mu_m_plus_1", {.n = 2, .m = m}, "mu_m_plus_1 @ m=" + std::to_string(m));
    }
    return out;
}

/// Parameter-free law instances: the symbolic entries are replaced by sample
/// instantiations of their parameter.
std::vector<Inst> law_instances_concrete() {
    std::vector<Inst> out;
    for (auto& inst : law_instances_symbolic())
        if (inst.g.is_parameter_free()) out.push_back(std::move(inst));
    for (int t : {1, 2})
        out.push_back({"4.6/3 @ t=" + std::to_string(t),
                       make_algebra("4.6/3", {.params = {{"t", Poly(t)}}})});
    for (int a : {1, 2, -3})
        out.push_back(
            {"mu1_alpha @ alpha=" + std::to_string(a),
             make_algebra("mu1_alpha", {.n = 2, .m = 2, .params = {{"alpha", Poly(a)}}})});
    return out;
}

/// Chain definition blocks at desk-scale dimensions.
std::vector<Inst> definition_instances() {
    std::vector<Inst> out;
    for (int n : {5, 7, 9}) {
        out.push_back({"L @ n=" + std::to_string(n), make_algebra("L", {.n = n})});
        out.push_back({"Q @ n=" + std::to_string(n), make_algebra("Q", {.n = n})});
    }
    for (int n = 1; n <= 8; ++n)
        out.push_back({"NF @ n=" + std::to_string(n), make_algebra("NF", {.n = n})});
    for (int n = 2; n <= 8; ++n)
        for (int m = 1; m <= 8; ++m)
            out.push_back({dims_label("Lnm", n, m), make_algebra("Lnm", {.n = n, .m = m})});
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; m <= 8; ++m)
            if (n <= m + 1)
                out.push_back({dims_label("NG", n, m), make_algebra("NG", {.n = n, .m = m})});
    return out;
}

/// The gamma-family member with every free gamma set to 1 (dependent gammas
/// stay solved from the relations).
SuperAlgebra family_member_at_one(int n, int m) {
    std::map<std::string, Poly> vals;
    for (const auto& name : family_free_gammas(n, m)) vals[name] = Poly(1);
    return leibniz_family(n, m, vals);
}

/// Difference cochain (law products minus chain-model products) over the
/// law's chain model, for re-deriving the classifier-criterion facts.
Cochain2 deformation_cochain(const SuperAlgebra& law) {
    int n = static_cast<int>(law.dim_even()) - 1;
    int m = static_cast<int>(law.dim_odd());
    SuperAlgebra model = make_algebra("Lnm", {.n = n, .m = m});
    Cochain2 c(model);
    for (Bv a : model.basis())
        for (Bv b : model.basis()) {
            if (a.parity == 0 && b.parity == 0 && a.index >= b.index) continue;
            if (a.parity == 1 && b.parity == 0) continue;
            if (a.parity == 1 && b.parity == 1 && a.index > b.index) continue;
            Vec d = law.product_basis(a, b);
            vec_add_scaled(d, model.product_basis(a, b), Poly(-1));
            vec_trim(d);
            if (!d.empty()) c.set_component(a, b, d);
        }
    return c;
}

std::string triple_str(const SuperAlgebra& g, const Violation& v) {
    return "(" + g.basis_name(v.x) + "," + g.basis_name(v.y) + "," + g.basis_name(v.z) +
           ") -> " + g.vec_str(v.diff);
}

bool contains_poly(const std::vector<Poly>& v, const Poly& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
}

// ---------------------------------------------------------------------------
// criterion 1: catalog identity suite
// ---------------------------------------------------------------------------

Result criterion1() {
    Result r;
    auto insts = law_instances_symbolic();
    {
        auto defs = definition_instances();
        insts.insert(insts.end(), std::make_move_iterator(defs.begin()),
                     std::make_move_iterator(defs.end()));
    }
    struct FailRow {
        Inst inst;
        IdentityReport rep;
    };
    std::vector<FailRow> failing;
    int passed = 0;
    bool metadata_consistent = true;
    for (auto& inst : insts) {
        IdentityReport rep = inst.g.kind() == AlgKind::lie ? check_super_jacobi(inst.g)
                                                           : check_super_leibniz(inst.g);
        auto rows = entries_for_id(law_id_of(inst.label));
        if (!rows.empty() && rows.front().genuine_identity_holds != rep.holds())
            metadata_consistent = false;
        if (rep.holds())
            ++passed;
        else
            failing.push_back({std::move(inst), std::move(rep)});
    }
    r.note(std::to_string(passed + failing.size()) +
           " instances checked: all tabulated laws (parametric families symbolically) plus the "
           "chain definitions L, Q at n in {5,7,9}, NF^n for n <= 8, L^{n,m} and NG^{n,m} for "
           "n,m <= 8");
    r.note(std::to_string(passed) + " pass their kind identity with zero violations; " +
           std::to_string(failing.size()) + " fail");

    std::set<std::string> failing_ids;
    std::map<std::string, std::vector<const FailRow*>> by_id;
    for (const auto& f : failing) {
        failing_ids.insert(law_id_of(f.inst.label));
        by_id[law_id_of(f.inst.label)].push_back(&f);
    }
    for (const auto& [id, rows] : by_id) {
        const FailRow& f = *rows.front();
        std::string instances = f.inst.label;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            auto at = rows[i]->inst.label.find(" @ ");
            instances += ", " + (at == std::string::npos ? rows[i]->inst.label
                                                         : rows[i]->inst.label.substr(at + 3));
        }
        r.note("law " + instances + ":");
        r.note("  super Jacobi: FAIL (first triple " + triple_str(f.inst.g, f.rep.violations[0]) +
               "; " + std::to_string(f.rep.violations.size()) + " violating triples)");
        Cochain2 c = deformation_cochain(f.inst.g);
        bool crit = is_infinitesimal_deformation(c).is_cocycle && psi_compose_psi_vanishes(c);
        r.note(std::string("  classifier criterion (cocycle + Psi o Psi = 0): ") +
               (crit ? "PASS" : "FAIL"));
        if (!crit)
            r.fail("law " + id + " unexpectedly violates the classifier criterion as well");
    }
    const std::set<std::string> documented = {"4.1/3,2-2", "4.1/3,3-2", "4.3/3",
                                              "4.4/3,m-2", "4.6/2",     "4.6/4"};
    if (failing_ids == documented)
        r.note("the failing set is exactly the six documented divergent laws "
               "(docs/conventions.md); every other instance is clean");
    else
        r.fail("failing law set differs from the six documented divergent laws");
    if (!metadata_consistent)
        r.fail("catalog identity-status metadata disagrees with the computed results");
    r.pass = failing.empty() && r.pass && metadata_consistent;
    return r;
}

// ---------------------------------------------------------------------------
// criterion 2: natural gradedness with verified witnesses
// ---------------------------------------------------------------------------

Result criterion2() {
    Result r;
    int verified = 0;
    for (const auto& inst : law_instances_concrete()) {
        NatGradeReport rep = is_naturally_graded(inst.g);
        bool ok = rep.naturally_graded && rep.stage == "witness" && rep.witness.has_value() &&
                  verify_homomorphism(*rep.witness).is_isomorphism();
        if (ok)
            ++verified;
        else
            r.fail(inst.label + ": naturally_graded=" + (rep.naturally_graded ? "true" : "false") +
                   " at stage '" + rep.stage + "'");
    }
    r.note(std::to_string(verified) +
           " classified law instances naturally graded; every base-change witness re-verified "
           "as an isomorphism independently of the search");
    NatGradeReport rr = is_naturally_graded(make_algebra("remark_3_1"));
    r.require(!rr.naturally_graded, "the filtration counterexample must not be naturally graded");
    r.require(rr.stage == "gradedness",
              "the filtration counterexample must fail at the gradedness stage, got '" +
                  rr.stage + "'");
    if (!rr.naturally_graded && rr.stage == "gradedness")
        r.note("nilpotent counterexample rejected at stage 'gradedness' (" + rr.evidence + ")");
    return r;
}

// ---------------------------------------------------------------------------
// criterion 3: scenario constraint reproduction
// ---------------------------------------------------------------------------

Result criterion3() {
    Result r;
    auto expect_match = [&](const ScenarioReport& rep) {
        r.require(rep.matches_expected,
                  "scenario " + rep.id + " must match its registered outcome");
    };

    {  // 2-even laws: b = 0 forced, then the generator shear removes a
        ScenarioReport rep = run_scenario("4.2");
        expect_match(rep);
        bool facts = !rep.runs.empty() && !rep.laws.empty();
        for (const auto& run : rep.runs)
            facts = facts && contains_poly(run.constraints, Poly::parse("b")) &&
                    run.branches.size() == 1 && run.branches[0].substitutions.size() == 1 &&
                    run.branches[0].substitutions.count("b") &&
                    run.branches[0].substitutions.at("b") == Poly(0);
        for (const auto& l : rep.laws) {
            bool shear = false;
            for (const auto& mv : l.moves)
                shear = shear || (mv.normalizes == "a" && mv.to == Poly(0));
            facts = facts && shear && l.law_id == "4.2/2,m";
        }
        r.require(facts, "scenario 4.2: expected b = 0 on the unique branch and the shear "
                         "removing a on every mapped law");
        if (facts) r.note("4.2: b = 0 forced, shear removes a, laws map onto 4.2/2,m");
    }

    {  // (3,4): constraints {a2, a1*a3 - 2*a2^2 + a2*a3}, two branches, 3 laws
        ScenarioReport rep = run_scenario("4.3");
        expect_match(rep);
        bool facts = rep.runs.size() == 1;
        if (facts) {
            const auto& run = rep.runs[0];
            facts = contains_poly(run.constraints, Poly::parse("a2")) &&
                    contains_poly(run.constraints, Poly::parse("a1*a3-2*a2^2+a2*a3")) &&
                    run.branches.size() == 2;
        }
        std::set<std::string> ids;
        for (const auto& l : rep.laws) ids.insert(l.law_id);
        facts = facts && ids == std::set<std::string>{"4.3/1", "4.3/2", "4.3/3"};
        r.require(facts, "scenario 4.3: expected constraints {a2, a1*a3 (cocycle-normalized)} "
                         "splitting into two branches and exactly the three tabulated laws");
        if (facts)
            r.note("4.3: a2 = 0 and a1*a3 - 2*a2^2 + a2*a3 = 0 (equal to a1*a3 once a2 = 0), "
                   "branches {a1=0,a2=0} and {a2=0,a3=0}, laws 4.3/1..3");
    }

    {  // (3,m): a2 = 0 then a3 = 0 at each m in {5,6,7}, two laws
        ScenarioReport rep = run_scenario("4.4");
        expect_match(rep);
        bool facts = rep.runs.size() == 3;
        std::set<std::string> ids;
        for (const auto& run : rep.runs)
            facts = facts && contains_poly(run.constraints, Poly::parse("a2")) &&
                    contains_poly(run.constraints, Poly::parse("a3")) &&
                    run.branches.size() == 1 && run.branches[0].substitutions.size() == 2 &&
                    run.branches[0].substitutions.count("a2") &&
                    run.branches[0].substitutions.count("a3");
        for (const auto& l : rep.laws) ids.insert(l.law_id);
        facts = facts && ids == std::set<std::string>{"4.4/3,m-1", "4.4/3,m-2"};
        r.require(facts, "scenario 4.4: expected a2 = 0 and a3 = 0 on a single branch at each "
                         "m in {5,6,7} and exactly the two tabulated laws");
        if (facts) r.note("4.4: a2 = 0, a3 = 0 at m = 5, 6, 7; laws 4.4/3,m-1 and 4.4/3,m-2");
    }

    {  // (4,3): the two nontrivial branches and four printed outcomes
        ScenarioReport rep = run_scenario("4.6");
        expect_match(rep);
        bool facts = rep.runs.size() == 1 && rep.runs[0].branches.size() == 3;
        const Branch* c_zero = nullptr;
        const Branch* c_four_d = nullptr;
        if (facts)
            for (const auto& b : rep.runs[0].branches) {
                if (b.substitutions.count("c") && b.substitutions.at("c") == Poly(0) &&
                    b.substitutions.count("a1"))
                    c_zero = &b;
                if (b.substitutions.count("c") &&
                    b.substitutions.at("c") == Poly::parse("4*d") &&
                    b.substitutions.count("a2"))
                    c_four_d = &b;
            }
        facts = facts && c_zero && c_four_d;
        if (facts) {
            // branch {c = 0}: a2 = 2*a1 holds and d is forced nonzero
            facts = Poly::parse("a2-2*a1").subst(c_zero->substitutions) == Poly(0) &&
                    contains_poly(c_zero->residual.inequations, Poly::parse("d"));
            // branch {c = 4d}: a2 = 0, 4*a1*d = a1*c, and c stays nonzero via d != 0
            facts = facts &&
                    c_four_d->substitutions.at("a2") == Poly(0) &&
                    Poly::parse("4*a1*d-a1*c").subst(c_four_d->substitutions) == Poly(0) &&
                    contains_poly(c_four_d->residual.inequations, Poly::parse("d^2"));
        }
        int families = 0;
        for (const auto& l : rep.laws) families += l.family ? 1 : 0;
        facts = facts && rep.laws.size() == 4 && families == 1;
        r.require(facts, "scenario 4.6: expected the branches {c=0, a2=2a1, d!=0} and "
                         "{c=4d!=0, a2=0} plus four mapped outcomes, one a t-family");
        if (facts)
            r.note("4.6: branch {c=0}: a2 = 2*a1 with d != 0; branch {c=4*d}: a2 = 0 with "
                   "4*a1*d = a1*c and c != 0; 4 outcomes mapped, one a t-family");
    }

    {  // (5,3): a1 = 0, a2 = 0 on the chain model; contradiction on the Q-type model
        ScenarioReport rep = run_scenario("4.7");
        expect_match(rep);
        bool facts = !rep.runs.empty() && rep.runs[0].branches.size() == 1;
        if (facts) {
            const auto& subs = rep.runs[0].branches[0].substitutions;
            facts = subs.size() == 2 && subs.count("a1") && subs.at("a1") == Poly(0) &&
                    subs.count("a2") && subs.at("a2") == Poly(0);
        }
        facts = facts && rep.laws.size() == 1 && rep.laws[0].law_id == "4.7/5,3";
        r.require(facts, "scenario 4.7: expected the single branch {a1=0, a2=0} and one law");

        ScenarioReport q = run_scenario("4.7-Q5");
        expect_match(q);
        bool qf = q.outcome == "contradiction" && q.laws.empty() &&
                  q.contradiction.find("[X_1,X_4]=0") != std::string::npos;
        r.require(qf, "scenario 4.7-Q5: expected a printed contradiction erasing the even "
                      "product and no surviving law");
        if (facts && qf)
            r.note("4.7: a1 = 0, a2 = 0 on the chain model; Q-type model contradicts: " +
                   q.contradiction);
    }

    {  // (6,3): a2 = 0, a1 = 0, one law
        ScenarioReport rep = run_scenario("4.8");
        expect_match(rep);
        bool facts = !rep.runs.empty() && rep.runs[0].branches.size() == 1;
        if (facts) {
            const auto& subs = rep.runs[0].branches[0].substitutions;
            facts = subs.size() == 2 && subs.count("a1") && subs.at("a1") == Poly(0) &&
                    subs.count("a2") && subs.at("a2") == Poly(0);
        }
        facts = facts && rep.laws.size() == 1 && rep.laws[0].law_id == "4.8/6,3";
        r.require(facts, "scenario 4.8: expected the single branch {a2=0, a1=0} and one law");
        if (facts) r.note("4.8: a2 = 0, a1 = 0; the unique law survives");
    }
    return r;
}

// ---------------------------------------------------------------------------
// criterion 4: cochain gradation weights
// ---------------------------------------------------------------------------

Result criterion4() {
    Result r;
    struct PsiSpec {
        const char* id;
        int k, s;
    };
    for (PsiSpec p : {PsiSpec{"psi2_1_1", 1, 2}, PsiSpec{"psi3_2_1", 2, 3},
                      PsiSpec{"psi4_3_1", 3, 4}}) {
        int checked = 0, clipped = 0;
        for (int n = 2; n <= 8; ++n)
            for (int m = 1; m <= 8; ++m) {
                Cochain2 c = make_cochain(p.id, n, m);
                if (c.components().empty()) {
                    ++clipped;
                    continue;
                }
                auto w = weight(c);
                if (!w || *w != p.s - p.k - 1)
                    r.fail(dims_label(p.id, n, m) + ": weight " +
                           (w ? std::to_string(*w) : std::string("inhomogeneous")) +
                           " != " + std::to_string(p.s - p.k - 1));
                else
                    ++checked;
            }
        r.note(std::string(p.id) + ": weight s-k-1 = " + std::to_string(p.s - p.k - 1) +
               " on " + std::to_string(checked) + " chain models with n,m <= 8" +
               (clipped ? " (" + std::to_string(clipped) + " clipped-to-zero skipped)" : ""));
    }
    for (const char* id : {"phi_1_2", "phi_2_4", "phibar_2_4", "phibar_3_6", "phi_3_6"}) {
        int checked = 0;
        for (int n = 2; n <= 8; ++n)
            for (int m = 1; m <= 8; ++m) {
                Cochain2 c;
                try {
                    c = make_cochain(id, n, m);
                } catch (const std::exception&) {
                    continue;  // outside the cochain's home dimensions
                }
                if (c.components().empty()) continue;
                auto w = weight(c);
                if (!w || *w != 0)
                    r.fail(dims_label(id, n, m) + ": weight " +
                           (w ? std::to_string(*w) : std::string("inhomogeneous")) + " != 0");
                else
                    ++checked;
            }
        r.require(checked > 0, std::string(id) + ": no home dimensions found");
        if (checked > 0)
            r.note(std::string(id) + ": weight 0 on all " + std::to_string(checked) +
                   " home instantiations");
    }
    return r;
}

// ---------------------------------------------------------------------------
// criterion 5: gamma-family identities and degenerate sub-cases
// ---------------------------------------------------------------------------

Result criterion5() {
    Result r;
    int case1 = 0, case2 = 0;
    for (int n = 2; n <= 7; ++n)
        for (int m = n; m <= 7; ++m) {
            if (check_super_leibniz(leibniz_family(n, m)).holds())
                ++case1;
            else
                r.fail("gamma-family (" + std::to_string(n) + "," + std::to_string(m) +
                       "), n <= m: symbolic super Leibniz residual is nonzero");
        }
    for (int n = 3; n <= 7; ++n)
        for (int m = 2; m < n; ++m) {
            if (check_super_leibniz(leibniz_family(n, m)).holds())
                ++case2;
            else
                r.fail("gamma-family (" + std::to_string(n) + "," + std::to_string(m) +
                       "), m < n: symbolic super Leibniz residual is nonzero");
        }
    r.note("symbolic super Leibniz residuals vanish identically on " + std::to_string(case1) +
           " dimension pairs with n <= m <= 7 and " + std::to_string(case2) +
           " with m < n <= 7 (free gammas symbolic, dependent gammas solved)");

    ScenarioReport c11 = run_scenario("5.3-case1.1");
    r.require(c11.matches_expected, "scenario 5.3-case1.1 must match its registered outcome");
    bool landing = !c11.laws.empty();
    bool sq33 = false, sq44 = false;
    for (const auto& l : c11.laws) {
        landing = landing && l.law_id == "NG";
        sq33 = sq33 || (l.dims[0] == 3 && l.dims[1] == 3);
        sq44 = sq44 || (l.dims[0] == 4 && l.dims[1] == 4);
    }
    r.require(landing && sq33 && sq44,
              "scenario 5.3-case1.1 must land on NG, including the square instantiations");
    if (landing && sq33 && sq44)
        r.note("5.3-case1.1: the gammas coincide and every instance rescales onto NG "
               "(square dims (3,3) and (4,4) included)");

    for (const char* id :
         {"5.3-case1.2b1", "5.3-case1.2b2", "5.3-case1.2b3", "5.3-case2.2b"}) {
        ScenarioReport rep = run_scenario(id);
        bool ok = rep.matches_expected && rep.outcome == "degenerated";
        r.require(ok, std::string("scenario ") + id + " must terminate 'degenerated'");
        if (ok) r.note(std::string(id) + ": degenerated (no surviving branch)");
    }
    return r;
}

// ---------------------------------------------------------------------------
// criterion 6: structural suite
// ---------------------------------------------------------------------------

std::vector<Inst> leibniz_structural_instances() {
    std::vector<Inst> out;
    for (int n : {1, 2, 5, 8})
        out.push_back({"NF @ n=" + std::to_string(n), make_algebra("NF", {.n = n})});
    for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {4, 3}, {5, 5}, {8, 7}})
        out.push_back({dims_label("NG", n, m), make_algebra("NG", {.n = n, .m = m})});
    out.push_back({"remark_3_1", make_algebra("remark_3_1")});
    for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 3}, {4, 5}, {5, 4}})
        out.push_back({dims_label("leibniz_family", n, m), family_member_at_one(n, m)});
    for (auto& inst : law_instances_concrete())
        if (inst.g.kind() == AlgKind::leibniz) out.push_back(std::move(inst));
    return out;
}

std::vector<Inst> lie_structural_instances() {
    std::vector<Inst> out;
    for (int n : {5, 9}) {
        out.push_back({"L @ n=" + std::to_string(n), make_algebra("L", {.n = n})});
        out.push_back({"Q @ n=" + std::to_string(n), make_algebra("Q", {.n = n})});
    }
    for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 4}, {4, 3}, {2, 5}, {8, 8}, {5, 2}})
        out.push_back({dims_label("Lnm", n, m), make_algebra("Lnm", {.n = n, .m = m})});
    for (auto& inst : law_instances_concrete())
        if (inst.g.kind() == AlgKind::lie) out.push_back(std::move(inst));
    return out;
}

Result criterion6() {
    Result r;
    int ann_checked = 0, closure_checked = 0;
    auto lz = leibniz_structural_instances();
    for (const auto& inst : lz) {
        const SuperAlgebra& g = inst.g;
        Subspace ann = right_annihilator(g);
        bool ideal = true;
        for (int parity : {0, 1})
            for (const Vec& v : ann.vectors(parity))
                for (Bv b : g.basis()) {
                    Vec unit{{b, Poly(1)}};
                    ideal = ideal && ann.contains(g.product(v, unit)) &&
                            ann.contains(g.product(unit, v));
                }
        r.require(ideal, inst.label + ": the annihilator must absorb products on both sides");
        r.require(ann.contains(skew_ideal(g)),
                  inst.label + ": the skew-defect ideal must lie inside the annihilator");
        ++ann_checked;
        if (g.dim_even() + g.dim_odd() <= 10) {
            r.require(right_mult_closure(g).closed(),
                      inst.label + ": right-multiplication closure must report no escapes");
            ++closure_checked;
        }
    }
    r.note("annihilator two-sided-ideal + skew-ideal containment verified on " +
           std::to_string(ann_checked) + " right-table instances; right-multiplication closure "
           "empty on the " + std::to_string(closure_checked) + " of them with n+m <= 10");

    int retagged = 0, divergent_skipped = 0;
    auto lies = lie_structural_instances();
    for (const auto& inst : lies) {
        const SuperAlgebra& g = inst.g;
        if (!check_super_jacobi(g).holds()) {
            ++divergent_skipped;  // implication is vacuous for the six divergent laws
            continue;
        }
        SuperAlgebra h(g.name() + " (as right-Leibniz table)", AlgKind::leibniz,
                       g.even_basis(), g.odd_basis());
        for (Bv a : g.basis())
            for (Bv b : g.basis()) {
                Vec v = g.product_basis(a, b);
                if (!v.empty()) h.set_product(a, b, v);
            }
        r.require(check_super_leibniz(h).holds(),
                  inst.label + ": the re-tagged product table must satisfy super Leibniz");
        ++retagged;
    }
    r.note("every bracket table passing super Jacobi also passes super Leibniz when re-tagged "
           "as a right-product table: " + std::to_string(retagged) + " instances (" +
           std::to_string(divergent_skipped) + " divergent laws skipped, implication vacuous)");

    int layouts = 0, layout_skipped = 0;
    auto check_layout = [&](const Inst& inst) {
        const SuperAlgebra& g = inst.g;
        bool lie = g.kind() == AlgKind::lie;
        bool qualifies = g.dim_odd() == 0 ||
                         (lie ? is_filiform(g) : is_max_nilindex_leibniz(g));
        if (!qualifies) {
            ++layout_skipped;
            return;
        }
        std::size_t n = lie ? g.dim_even() - 1 : g.dim_even();
        auto expected = expected_natural_layout(g.kind(), n, g.dim_odd());
        if (natural_layers(g).dims() == expected)
            ++layouts;
        else
            r.fail(inst.label + ": gr layer layout differs from the three-case table");
    };
    for (const auto& inst : lz) check_layout(inst);
    for (const auto& inst : lies) check_layout(inst);
    r.note("gr layer layouts match the three-case tables (first layer, matched middles, "
           "parity tail) on " + std::to_string(layouts) + " generator-determined instances (" +
           std::to_string(layout_skipped) + " outside the class skipped)");
    return r;
}

// ---------------------------------------------------------------------------
// criterion 7: documented out-of-scope items
// ---------------------------------------------------------------------------

Result criterion7() {
    Result r;
    r.note("item 1: the general lower bound on admissible cochain weights is quoted from the "
           "literature, not re-derived; the suite instead computes and checks every "
           "implemented cochain's weight exactly (criterion 4)");
    r.note("item 2: base changes whose scale factors are non-rational (roots of rational "
           "equations) are validated at rational instantiation points only; all arithmetic "
           "stays exact over the rationals");
    std::ifstream in(std::string(SUPERGRADE_SOURCE_DIR) + "/docs/conventions.md");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string conv = ss.str();
    r.require(in.good() || !conv.empty(), "docs/conventions.md must exist and be readable");
    r.require(conv.find("weight lower bound") != std::string::npos,
              "docs/conventions.md must record the quoted weight lower bound as out of scope");
    r.require(conv.find("rational instantiation") != std::string::npos,
              "docs/conventions.md must record the rational-instantiation-only validation of "
              "non-rational scale factors");
    if (r.pass) r.note("both items recorded in docs/conventions.md");
    return r;
}

}  // namespace

int main() {
    std::cout << "supergrade acceptance suite (exact arithmetic, no tolerances)\n"
              << "library version " << version_string << "\n\n";
    struct Row {
        const char* name;
        Result (*fn)();
    };
    const Row rows[] = {
        {"criterion 1: catalog identity suite, zero violations", &criterion1},
        {"criterion 2: natural gradedness with verified witnesses", &criterion2},
        {"criterion 3: scenario constraint and branch reproduction", &criterion3},
        {"criterion 4: cochain gradation weights", &criterion4},
        {"criterion 5: symbolic gamma-family identities and degenerate sub-cases", &criterion5},
        {"criterion 6: structural suite (annihilator, closure, re-tag, gr layouts)",
         &criterion6},
        {"criterion 7: out-of-scope items documented", &criterion7},
    };
    int failed = 0;
    for (const Row& row : rows) {
        Result res;
        try {
            res = row.fn();
        } catch (const std::exception& e) {
            res.pass = false;
            res.notes.push_back(std::string("unhandled error: ") + e.what());
        }
        std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << row.name << "\n";
        for (const auto& n : res.notes) std::cout << "    " << n << "\n";
        std::cout << "\n";
        if (!res.pass) ++failed;
    }
    std::cout << (7 - failed) << " of 7 criteria passed";
    if (failed > 0) std::cout << " (" << failed << " failed; details above)";
    std::cout << "\n";
    return failed;
}
