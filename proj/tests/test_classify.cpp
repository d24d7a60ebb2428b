// Unit tests for the classification machinery: constraint extraction from
// identities and from the quadratic composition criterion, the exact branch
// solver (propagation, splitting, disjoint inequations, contradiction
// pruning, flagged fallback), normalization moves and their induced maps,
// the generator-image isomorphism search, and the scenario runners.
#include <doctest.h>

#include <supergrade/classify.hpp>

#include <set>

using namespace supergrade;

namespace {

Poly P(const std::string& s) { return Poly::parse(s).normalized(); }

std::set<Poly> parse_set(const std::vector<std::string>& es) {
    std::set<Poly> out;
    for (const auto& e : es) out.insert(P(e));
    return out;
}

std::set<Poly> as_set(const std::vector<Poly>& v) { return {v.begin(), v.end()}; }

ConstraintSystem sys_of(std::vector<std::string> eqs, std::vector<std::string> ineqs = {}) {
    ConstraintSystem s;
    for (const auto& e : eqs) s.equations.push_back(Poly::parse(e));
    for (const auto& q : ineqs) s.inequations.push_back(Poly::parse(q));
    return s;
}

// substitution map of a branch as {var -> parsed poly} for comparisons
std::map<std::string, Poly> subs_of(std::initializer_list<std::pair<std::string, std::string>> kv) {
    std::map<std::string, Poly> out;
    for (const auto& [k, v] : kv) out[k] = Poly::parse(v);
    return out;
}

const Scenario& sc(const std::string& id) { return scenario_by_id(id); }

}  // namespace

// ---------------------------------------------------------------------------
// solver unit behavior
// ---------------------------------------------------------------------------

TEST_CASE("solver propagates linear pivots, including into earlier values") {
    // x - y = 0 and y - 2 = 0: after pivoting x = y, the later pivot y = 2
    // must rewrite the stored value of x as well.
    auto branches = solve(sys_of({"x - y", "y - 2"}));
    REQUIRE(branches.size() == 1);
    CHECK_FALSE(branches[0].flagged);
    CHECK(branches[0].substitutions == subs_of({{"x", "2"}, {"y", "2"}}));
    CHECK(branches[0].residual.inequations.empty());
}

TEST_CASE("solver splits on linear factors with disjoint inequations") {
    auto branches = solve(sys_of({"x*y"}));
    REQUIRE(branches.size() == 2);
    // sorted by signature: {x -> 0} before {y -> 0 | x != 0}
    CHECK(branches[0].substitutions == subs_of({{"x", "0"}}));
    CHECK(branches[0].residual.inequations.empty());
    CHECK(branches[1].substitutions == subs_of({{"y", "0"}}));
    REQUIRE(branches[1].residual.inequations.size() == 1);
    CHECK(branches[1].residual.inequations[0] == P("x"));
}

TEST_CASE("solver prunes contradictions") {
    // constant nonzero equation: no branches at all
    CHECK(solve(ConstraintSystem{{Poly(1)}, {}}).empty());
    // identically zero inequation: contradiction
    CHECK(solve(ConstraintSystem{{}, {Poly(0)}}).empty());
    // x = 0 forced while x != 0 required
    CHECK(solve(sys_of({"x"}, {"x"})).empty());
    // x*(x - 1) = 0 with x != 0 leaves only x = 1
    auto branches = solve(sys_of({"x^2 - x"}, {"x"}));
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].substitutions == subs_of({{"x", "1"}}));
    CHECK(branches[0].residual.inequations.empty());  // 1 != 0 is dropped as trivial
}

TEST_CASE("solver collapses repeated factors f^k = 0 to f = 0") {
    auto branches = solve(sys_of({"x^2"}));
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].substitutions == subs_of({{"x", "0"}}));
}

TEST_CASE("solver flags what it cannot split instead of dividing by parameters") {
    auto branches = solve(sys_of({"x^2 + y^2 - 1"}));
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].flagged);
    REQUIRE(branches[0].residual.equations.size() == 1);
    CHECK(branches[0].residual.equations[0] == P("x^2 + y^2 - 1"));
    CHECK(branch_signature(branches[0]).find("flagged") != std::string::npos);
}

TEST_CASE("zero equations are dropped, duplicates are merged") {
    auto branches = solve(ConstraintSystem{{Poly(0), Poly::parse("x"), Poly::parse("2*x")}, {}});
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].substitutions == subs_of({{"x", "0"}}));
}

TEST_CASE("gamma-family relations at (7,3) force every gamma to zero") {
    auto branches = solve(family_relations(7, 3));
    REQUIRE(branches.size() == 1);
    CHECK_FALSE(branches[0].flagged);
    for (const auto& [v, val] : branches[0].substitutions) CHECK(val.is_zero());
    // g1..g3 live in the (7,3) family and all are pinned
    CHECK(branches[0].substitutions.size() == 3);
}

// ---------------------------------------------------------------------------
// extraction
// ---------------------------------------------------------------------------

TEST_CASE("identity extraction is empty exactly on identity-satisfying algebras") {
    CHECK(extract_constraints(make_algebra("remark_3_1")).equations.empty());
    CHECK(extract_constraints(detail::make_NG(4, 3)).equations.empty());
    // the case 1.1 ansatz is genuinely constrained
    CHECK_FALSE(extract_constraints(detail::build_case11(3, 3)).equations.empty());
}

TEST_CASE("cochain extraction requires an infinitesimal cocycle") {
    // phi_3_6 alone is not a cocycle on the (6,3) model
    CHECK_THROWS_AS((void)extract_constraints(make_cochain("phi_3_6", 6, 3).scaled(
                        Poly::variable("c"))),
                    std::domain_error);
}

TEST_CASE("quadratic composition values on key triples") {
    // (2,5) ansatz: composition on (X1, X2, Y1) is 2*b^2 * Y4
    Cochain2 psi42 = scenario_cochain(sc("4.2"), 2, 5);
    Vec v = psi_compose_psi(psi42, Bv{0, 1}, Bv{0, 2}, Bv{1, 0});
    REQUIRE(v.size() == 1);
    CHECK(v.at(Bv{1, 3}) == Poly::parse("2*b^2"));

    // (3,4) ansatz: composition on (Y1, Y1, Y1) is 3*a2 * Y3
    Cochain2 psi43 = scenario_cochain(sc("4.3"), 3, 4);
    Vec w = psi_compose_psi(psi43, Bv{1, 0}, Bv{1, 0}, Bv{1, 0});
    REQUIRE(w.size() == 1);
    CHECK(w.at(Bv{1, 2}) == Poly::parse("3*a2"));
    // and on (X1, X2, Y1) it carries the quadratic invariant
    Vec u = psi_compose_psi(psi43, Bv{0, 1}, Bv{0, 2}, Bv{1, 0});
    REQUIRE(u.size() == 1);
    CHECK(u.at(Bv{1, 3}).normalized() == P("a1*a3 - 2*a2^2 + a2*a3"));
}

TEST_CASE("frozen constraint sets per scenario") {
    auto constraints = [](const std::string& id, int n, int m) {
        return as_set(extract_constraints(scenario_cochain(sc(id), n, m)).equations);
    };
    for (int m : {5, 6, 7})
        CHECK(constraints("4.2", 2, m) == parse_set({"b", "b^2"}));

    CHECK(constraints("4.3", 3, 4) == parse_set({"a2", "a1*a3 - 2*a2^2 + a2*a3"}));

    const std::vector<std::string> c44_m5 = {
        "a2",
        "a3",
        "a2 - 2*a3",
        "a2*a3 - a3^2",
        "a1*a3 - 2*a2^2 + a2*a3",
        "a1*a3 - 2*a2^2 + 4*a2*a3 - 3*a3^2"};
    std::vector<std::string> c44_m6 = c44_m5;
    c44_m6.insert(c44_m6.end(), {"a2 - 3*a3", "a2*a3 - 2*a3^2", "a3^2",
                                 "a1*a3 - 2*a2^2 + 7*a2*a3 - 9*a3^2"});
    std::vector<std::string> c44_m7 = c44_m6;
    c44_m7.insert(c44_m7.end(),
                  {"a2 - 4*a3", "a2*a3 - 3*a3^2", "a1*a3 - 2*a2^2 + 10*a2*a3 - 18*a3^2"});
    CHECK(constraints("4.4", 3, 5) == parse_set(c44_m5));
    CHECK(constraints("4.4", 3, 6) == parse_set(c44_m6));
    CHECK(constraints("4.4", 3, 7) == parse_set(c44_m7));

    CHECK(constraints("4.6", 4, 3) ==
          parse_set({"a2*c", "a1*c - 4*a1*d - a2*c + 2*a2*d"}));
    CHECK(constraints("4.7", 5, 3) == parse_set({"a1*c", "a2*c", "a1*c + a2*c"}));
    CHECK(constraints("4.7-Q5", 5, 3) ==
          parse_set({"c*q", "a2*c", "a1*c - c*q", "a1*c + c*q", "a1*c + a2*c",
                     "a2*c - 3*c*q", "a2*c + 3*c*q"}));
    CHECK(constraints("4.8", 6, 3) ==
          parse_set({"a1*c", "a2*c", "a1*c - a2*c", "a1*c + a2*c"}));
}

// ---------------------------------------------------------------------------
// frozen branch structures
// ---------------------------------------------------------------------------

namespace {

std::vector<Branch> scenario_branches(const std::string& id, int n, int m, int k = 0) {
    const Scenario& s = sc(id);
    ConstraintSystem cs;
    if (s.ansatz == AnsatzKind::cochain_combo) {
        cs = extract_constraints(scenario_cochain(s, n, m));
        for (const auto& q : s.inequations) cs.inequations.push_back(Poly::parse(q));
    } else {
        SuperAlgebra a = scenario_algebra(s, n, m, k);
        cs = extract_constraints(a);
        cs.inequations.push_back(detail::gamma_nondegeneracy(a));
        if (s.ansatz != AnsatzKind::leibniz_case11)
            cs.inequations.push_back(Poly::parse("a + 1"));
    }
    return solve(cs);
}

}  // namespace

TEST_CASE("branch structures: Lie scenarios") {
    for (int m : {5, 6, 7}) {
        auto b42 = scenario_branches("4.2", 2, m);
        REQUIRE(b42.size() == 1);
        CHECK(b42[0].substitutions == subs_of({{"b", "0"}}));
        CHECK(b42[0].residual.inequations.empty());
    }

    auto b43 = scenario_branches("4.3", 3, 4);
    REQUIRE(b43.size() == 2);
    CHECK(b43[0].substitutions == subs_of({{"a1", "0"}, {"a2", "0"}}));
    CHECK(b43[0].residual.inequations.empty());
    CHECK(b43[1].substitutions == subs_of({{"a2", "0"}, {"a3", "0"}}));
    CHECK(b43[1].residual.inequations == std::vector<Poly>{P("a1")});

    for (int m : {5, 6, 7}) {
        auto b44 = scenario_branches("4.4", 3, m);
        REQUIRE(b44.size() == 1);
        CHECK(b44[0].substitutions == subs_of({{"a2", "0"}, {"a3", "0"}}));
        CHECK(b44[0].residual.inequations.empty());
    }

    auto b46 = scenario_branches("4.6", 4, 3);
    REQUIRE(b46.size() == 3);
    CHECK(b46[0].substitutions == subs_of({{"a1", "0"}, {"a2", "0"}}));
    CHECK(b46[0].residual.inequations == std::vector<Poly>{P("c^2 + d^2")});
    CHECK(b46[1].substitutions == subs_of({{"a1", "1/2*a2"}, {"c", "0"}}));
    CHECK(b46[1].residual.inequations == std::vector<Poly>{P("a2"), P("d"), P("d^2")});
    CHECK(b46[2].substitutions == subs_of({{"a2", "0"}, {"c", "4*d"}}));
    CHECK(b46[2].residual.inequations == std::vector<Poly>{P("a1"), P("d^2")});
    for (const Branch& b : b46) CHECK_FALSE(b.flagged);

    auto b47 = scenario_branches("4.7", 5, 3);
    REQUIRE(b47.size() == 1);
    CHECK(b47[0].substitutions == subs_of({{"a1", "0"}, {"a2", "0"}}));
    CHECK(b47[0].residual.inequations == std::vector<Poly>{P("c")});

    CHECK(scenario_branches("4.7-Q5", 5, 3).empty());

    auto b48 = scenario_branches("4.8", 6, 3);
    REQUIRE(b48.size() == 1);
    CHECK(b48[0].substitutions == subs_of({{"a1", "0"}, {"a2", "0"}}));
    CHECK(b48[0].residual.inequations == std::vector<Poly>{P("c")});
}

TEST_CASE("branch structures: Leibniz scenarios") {
    auto b11_33 = scenario_branches("5.3-case1.1", 3, 3);
    REQUIRE(b11_33.size() == 1);
    CHECK(b11_33[0].substitutions == subs_of({{"b1", "0"}, {"b2", "0"}, {"g1", "g2"}}));
    CHECK(b11_33[0].residual.inequations == std::vector<Poly>{P("g2^2")});

    auto b11_44 = scenario_branches("5.3-case1.1", 4, 4);
    REQUIRE(b11_44.size() == 1);
    CHECK(b11_44[0].substitutions ==
          subs_of({{"b1", "0"}, {"b2", "0"}, {"b3", "0"}, {"g1", "g3"}, {"g2", "g3"}}));
    CHECK(b11_44[0].residual.inequations == std::vector<Poly>{P("g3^2")});

    auto b11_45 = scenario_branches("5.3-case1.1", 4, 5);
    REQUIRE(b11_45.size() == 1);
    CHECK(b11_45[0].substitutions == subs_of({{"b1", "0"},
                                              {"b2", "0"},
                                              {"b3", "0"},
                                              {"b4", "0"},
                                              {"g1", "g3"},
                                              {"g2", "g3"}}));
    CHECK(b11_45[0].residual.inequations == std::vector<Poly>{P("g3^2")});

    CHECK(scenario_branches("5.3-case1.2b1", 3, 6, 3).empty());
    CHECK(scenario_branches("5.3-case1.2b2", 3, 5, 3).empty());
    CHECK(scenario_branches("5.3-case1.2b3", 4, 5, 3).empty());
    CHECK(scenario_branches("5.3-case2.2b", 5, 4, 3).empty());
}

// ---------------------------------------------------------------------------
// branch predicates and normalization moves
// ---------------------------------------------------------------------------

TEST_CASE("branch predicates are semantic, not presentation-bound") {
    auto b46 = scenario_branches("4.6", 4, 3);
    REQUIRE(b46.size() == 3);
    // on the c = 4d branch, a1*c - 4*a1*d vanishes and a1, d are nonzero
    CHECK(branch_satisfies(b46[2], Poly::parse("4*a1*d - a1*c")));
    CHECK(branch_forces_nonzero(b46[2], Poly::parse("a1")));
    CHECK(branch_forces_nonzero(b46[2], Poly::parse("d")));
    // c + d rewrites to 5d on this branch and is therefore forced nonzero
    CHECK(branch_forces_nonzero(b46[2], Poly::parse("c + d")));
    // a1 + d stays a sum of two atoms and could vanish (a1 = -d)
    CHECK_FALSE(branch_forces_nonzero(b46[2], Poly::parse("a1 + d")));
    // on the a1 = a2/2 branch, a2 - 2*a1 vanishes
    CHECK(branch_satisfies(b46[1], Poly::parse("a2 - 2*a1")));
    CHECK(branch_forces_nonzero(b46[1], Poly::parse("a2")));
    // the first branch pins neither c nor d individually
    CHECK_FALSE(branch_forces_nonzero(b46[0], Poly::parse("c")));
    CHECK(branch_forces_nonzero(b46[0], Poly::parse("c^2 + d^2")));
    // products of known-nonzero atoms are nonzero
    CHECK(branch_forces_nonzero(b46[2], Poly::parse("a1*d")));
}

TEST_CASE("normalize_branch records moves and rejects inapplicable ones") {
    auto b46 = scenario_branches("4.6", 4, 3);
    NormalizationMove fix_d{"graded_scale", "d", Poly(1),
                            {{"lambda", Rational(4)}, {"mu", Rational(1)}, {"nu", Rational(1)}},
                            "fix d = 1"};
    Branch nb = normalize_branch(b46[0], {fix_d});
    CHECK(nb.substitutions.at("d") == Poly(1));
    CHECK(nb.trace.size() == 1);
    CHECK(nb.trace[0].normalizes == "d");
    // inequation c^2 + d^2 survives as c^2 + 1 (never zero but not constant)
    REQUIRE(nb.residual.inequations.size() == 1);
    CHECK(nb.residual.inequations[0] == P("c^2 + 1"));

    // a1 is pinned to 0 on this branch; fixing it to 1 must throw
    NormalizationMove bad{"graded_scale", "a1", Poly(1), {}, ""};
    CHECK_THROWS_AS((void)normalize_branch(b46[0], {bad}), std::domain_error);
}

TEST_CASE("move-induced maps are verified isomorphisms at validation points") {
    // graded scale lambda=4, mu=1, nu=2 maps the normalized (3,4) law with
    // the top-weight coefficient 1 onto the deformed instance with a3 = 4
    SuperAlgebra model = detail::lie_model(3, 4);
    Cochain2 psi = scenario_cochain(sc("4.3"), 3, 4);
    SuperAlgebra target = make_algebra("4.3/2");
    SuperAlgebra deformed = deform(
        model, psi.subst_params({{"a1", Poly(0)}, {"a2", Poly(0)}, {"a3", Poly(4)}}));
    NormalizationMove scalemv{
        "graded_scale", "a3", Poly(1),
        {{"lambda", Rational(4)}, {"mu", Rational(1)}, {"nu", Rational(2)}}, ""};
    LinearMap f = move_map({scalemv}, target, deformed);
    CHECK(verify_homomorphism(f).is_isomorphism());

    // the shear X1' = X1 - a*X0 maps the normalized (2,m) law onto any a != 0
    for (int m : {5, 6}) {
        SuperAlgebra model2 = detail::lie_model(2, m);
        Cochain2 psi2 = scenario_cochain(sc("4.2"), 2, m);
        SuperAlgebra t2 = make_algebra("4.2/2,m", {.m = m});
        SuperAlgebra d2 =
            deform(model2, psi2.subst_params({{"a", Poly(3)}, {"b", Poly(0)}}));
        NormalizationMove shear{"shear", "a", Poly(0), {{"a", Rational(3)}}, ""};
        LinearMap g = move_map({shear}, t2, d2);
        CHECK(verify_homomorphism(g).is_isomorphism());
    }

    // odd rescale s=2 maps NG^{3,3} onto the gamma = 4 instance
    SuperAlgebra ng = detail::make_NG(3, 3);
    SuperAlgebra inst = detail::build_case11(3, 3).subst_params(
        {{"b1", Poly(0)}, {"b2", Poly(0)}, {"g1", Poly(4)}, {"g2", Poly(4)}});
    NormalizationMove rescale{"odd_rescale", "gamma", Poly(1), {{"s", Rational(2)}}, ""};
    LinearMap h = move_map({rescale}, ng, inst);
    CHECK(verify_homomorphism(h).is_isomorphism());

    CHECK_THROWS_AS((void)move_map({NormalizationMove{"unknown", "", Poly(1), {}, ""}}, ng, inst),
                    std::invalid_argument);
}

// ---------------------------------------------------------------------------
// generator-image isomorphism search
// ---------------------------------------------------------------------------

TEST_CASE("generator-image search finds the identity-like map onto gr for graded laws") {
    SuperAlgebra ng = detail::make_NG(4, 3);
    ProjectedQuotientComparison cmp = compare_with_projected_quotient(ng);
    CHECK(cmp.isomorphism_found);
    REQUIRE(cmp.iso.has_value());
    CHECK(verify_homomorphism(*cmp.iso).is_isomorphism());
}

TEST_CASE("generator-image search rejects the non-graded law against its gr") {
    SuperAlgebra r31 = make_algebra("remark_3_1");
    CHECK_FALSE(is_naturally_graded(r31).naturally_graded);
    ProjectedQuotientComparison cmp = compare_with_projected_quotient(r31);
    CHECK_FALSE(cmp.isomorphism_found);
    CHECK(cmp.note.find("no generator-image isomorphism") != std::string::npos);
}

TEST_CASE("generator-image search refuses parametric input and mismatched shapes") {
    CHECK_THROWS_AS(
        (void)find_generator_isomorphism(detail::build_case11(3, 3), detail::make_NG(3, 3)),
        std::invalid_argument);
    CHECK_FALSE(
        find_generator_isomorphism(detail::make_NG(3, 3), detail::make_NG(4, 3)).has_value());
}

// ---------------------------------------------------------------------------
// coverage sampling
// ---------------------------------------------------------------------------

TEST_CASE("coverage sampling confirms branch completeness on the (3,4) system") {
    ConstraintSystem cs = extract_constraints(scenario_cochain(sc("4.3"), 3, 4));
    auto branches = solve(cs);
    auto [on_variety, covered] =
        coverage_sample(cs.equations, cs.inequations, branches, {"a1", "a2", "a3"}, 200, 7);
    CHECK(on_variety > 0);
    CHECK(on_variety == covered);
}

TEST_CASE("coverage sampling detects an incomplete branch list") {
    ConstraintSystem cs = extract_constraints(scenario_cochain(sc("4.3"), 3, 4));
    auto branches = solve(cs);
    branches.pop_back();  // drop the a3 = 0 side on purpose
    auto [on_variety, covered] =
        coverage_sample(cs.equations, cs.inequations, branches, {"a1", "a2", "a3"}, 200, 7);
    CHECK(covered < on_variety);
}

// ---------------------------------------------------------------------------
// scenario registry and end-to-end runs
// ---------------------------------------------------------------------------

TEST_CASE("scenario registry lists the documented case analyses") {
    std::vector<std::string> ids = scenario_ids();
    std::vector<std::string> expected = {
        "4.2",          "4.3",           "4.4",           "4.6",
        "4.7",          "4.7-Q5",        "4.8",           "5.3-case1.1",
        "5.3-case1.2b1", "5.3-case1.2b2", "5.3-case1.2b3", "5.3-case2.2b"};
    CHECK(ids == expected);
    CHECK_THROWS_AS((void)scenario_by_id("nope"), std::invalid_argument);
    CHECK_THROWS_AS((void)scenario_cochain(sc("5.3-case1.1"), 3, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)scenario_algebra(sc("4.3"), 3, 4, 0), std::invalid_argument);
}

TEST_CASE("every scenario run matches its expected outcome") {
    for (const Scenario& s : scenarios()) {
        ScenarioReport rep = run_scenario(s.id);
        INFO("scenario ", s.id);
        for (const ScenarioCheck& c : rep.checks) {
            INFO("check '", c.name, "': ", c.pass ? "pass" : "FAIL", " ", c.note);
            CHECK(c.pass);
        }
        CHECK(rep.outcome == s.expected_outcome);
        CHECK(rep.matches_expected);
    }
}

TEST_CASE("the (3,4) scenario reaches exactly three laws") {
    ScenarioReport rep = run_scenario("4.3");
    REQUIRE(rep.laws.size() == 3);
    CHECK(rep.laws[0].law_id == "4.3/1");
    CHECK(rep.laws[1].law_id == "4.3/2");
    CHECK(rep.laws[2].law_id == "4.3/3");
    for (const MappedLaw& ml : rep.laws) {
        CHECK(ml.exact_at_canonical_point);
        CHECK(ml.move_map_verified);
        CHECK_FALSE(ml.family);
    }
    // the two laws on the first branch and the third on the a1 != 0 branch
    CHECK(rep.laws[0].branch == rep.laws[1].branch);
    CHECK(rep.laws[0].branch != rep.laws[2].branch);
}

TEST_CASE("the (4,3) two-cocycle scenario reaches four outcomes, one a family") {
    ScenarioReport rep = run_scenario("4.6");
    REQUIRE(rep.laws.size() == 4);
    int families = 0;
    std::set<std::string> branches;
    for (const MappedLaw& ml : rep.laws) {
        families += ml.family ? 1 : 0;
        branches.insert(ml.branch);
        CHECK(ml.exact_at_canonical_point);
        CHECK(ml.move_map_verified);
    }
    CHECK(families == 1);      // the t-family
    CHECK(branches.size() == 3);  // hosted on three solver branches
}

TEST_CASE("the multi-m scenarios map both chain laws at every odd length") {
    ScenarioReport rep = run_scenario("4.4");
    REQUIRE(rep.laws.size() == 6);  // two laws at m = 5, 6, 7
    for (const MappedLaw& ml : rep.laws) {
        CHECK(ml.exact_at_canonical_point);
        CHECK(ml.move_map_verified);
    }
    CHECK(rep.laws[0].instance_name.find("4.4/3,5") != std::string::npos);
    CHECK(rep.laws[5].instance_name.find("4.4/3,7") != std::string::npos);
}

TEST_CASE("the Q5-type scenario ends in the documented contradiction") {
    ScenarioReport rep = run_scenario("4.7-Q5");
    CHECK(rep.outcome == "contradiction");
    CHECK(rep.matches_expected);
    CHECK(rep.laws.empty());
    CHECK(rep.contradiction.find("[X_1,X_4]=0") != std::string::npos);
    for (const ScenarioRunResult& run : rep.runs) CHECK(run.branches.empty());
}

TEST_CASE("the single-column Leibniz scenario lands on NG at all three dims") {
    ScenarioReport rep = run_scenario("5.3-case1.1");
    CHECK(rep.matches_expected);
    REQUIRE(rep.laws.size() == 3);
    CHECK(rep.laws[0].instance_name == "NG^{3,3}");
    CHECK(rep.laws[1].instance_name == "NG^{4,4}");
    CHECK(rep.laws[2].instance_name == "NG^{4,5}");
    for (const MappedLaw& ml : rep.laws) {
        CHECK(ml.exact_at_canonical_point);
        CHECK(ml.move_map_verified);
        REQUIRE(ml.moves.size() == 1);
        CHECK(ml.moves[0].kind == "odd_rescale");
    }
}

TEST_CASE("the degenerate Leibniz sub-cases produce no admissible branch") {
    for (const char* id :
         {"5.3-case1.2b1", "5.3-case1.2b2", "5.3-case1.2b3", "5.3-case2.2b"}) {
        ScenarioReport rep = run_scenario(id);
        CHECK(rep.outcome == "degenerated");
        CHECK(rep.matches_expected);
        CHECK(rep.contradiction.find("degenerated") != std::string::npos);
    }
}
