// Unit tests for the exact-arithmetic layer: Rational, Poly (arithmetic,
// grammar round-trips, substitution, normalization), MatrixQ (RREF, kernel,
// parametric-rank refusal) and linear-factor extraction.
#include <doctest.h>

#include <supergrade/matrix.hpp>
#include <supergrade/poly.hpp>
#include <supergrade/rational.hpp>

#include <random>

using namespace supergrade;

extern unsigned long supergrade_test_seed;

TEST_CASE("Rational: canonical form and arithmetic") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
    CHECK((Rational(1, 2) * Rational(2, 3)).str() == "1/3");
    CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
    CHECK((Rational(3, 4) / Rational(3, 2)).str() == "1/2");
    CHECK(Rational(-5, 7).abs().str() == "5/7");
    CHECK(Rational(2, 3).pow(3).str() == "8/27");
    CHECK(Rational(2, 3).pow(-2).str() == "9/4");
    CHECK(Rational(5).pow(0).str() == "1");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("Rational: parsing and ordering") {
    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-3/4") == Rational(-3, 4));
    CHECK(Rational::from_string("12") == Rational(12));
    CHECK(Rational::from_string("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(0));
    CHECK(Rational::gcd(Rational(1, 2), Rational(1, 3)) == Rational(1, 6));
    CHECK(Rational::gcd(Rational(2, 3), Rational(4, 3)) == Rational(2, 3));
    CHECK(Rational::gcd(Rational(0), Rational(-5)) == Rational(5));
}

TEST_CASE("Poly: construction and arithmetic invariants") {
    Poly a = Poly::variable("a");
    Poly b = Poly::variable("b");
    Poly p = a * a + Poly(2) * a * b + b * b;
    CHECK(p.str() == "a^2 + 2*a*b + b^2");
    CHECK(p.total_degree() == 2);
    CHECK(p.term_count() == 3);
    CHECK((p - p).is_zero());
    CHECK((p - p).vars().empty());  // minimal-variable invariant
    Poly q = (a + b) * (a + b);
    CHECK(p == q);
    CHECK((a * b - b * a).is_zero());
    CHECK((-p).str() == "-a^2 - 2*a*b - b^2");
    CHECK(Poly(0).is_zero());
    CHECK(Poly(0).str() == "0");
    CHECK((a - a + Poly(3)).is_constant());
    CHECK(Poly(Rational(3, 2)).str() == "3/2");
}

TEST_CASE("Poly: variable sets stay sorted and minimal") {
    Poly z = Poly::variable("z");
    Poly a = Poly::variable("a");
    Poly p = z * a;  // built in unsorted order
    CHECK(p.vars() == std::vector<std::string>{"a", "z"});
    CHECK(p.str() == "a*z");
    Poly r = p - Poly::variable("a") * Poly::variable("z") + Poly::variable("m");
    CHECK(r.vars() == std::vector<std::string>{"m"});
}

TEST_CASE("Poly: grammar parse/serialize round-trip") {
    auto rt = [](const std::string& s) {
        Poly p = Poly::parse(s);
        Poly q = Poly::parse(p.str());
        CHECK(p == q);
        CHECK(p.str() == q.str());
        return p;
    };
    CHECK(rt("0").is_zero());
    CHECK(rt("-3/2").constant_value() == Rational(-3, 2));
    CHECK(rt("a1*a3 - 2*c").str() == "a1*a3 - 2*c");
    CHECK(rt("b^2 + 1/2").str() == "b^2 + 1/2");
    CHECK(rt("(a + b)^2").str() == "a^2 + 2*a*b + b^2");
    CHECK(rt("1/2*g1").str() == "1/2*g1");
    CHECK(rt("-(a - b)").str() == "-a + b");
    CHECK(rt("2^3").constant_value() == Rational(8));
    CHECK(rt("x_1*x_1").str() == "x_1^2");
    CHECK(Poly::parse(" a *  b ") == Poly::parse("a*b"));
    CHECK_THROWS_AS(Poly::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Poly::parse("a +"), std::invalid_argument);
    CHECK_THROWS_AS(Poly::parse("(a"), std::invalid_argument);
    CHECK_THROWS_AS(Poly::parse("3 4"), std::invalid_argument);
    CHECK_THROWS_AS(Poly::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Poly::parse("a^b"), std::invalid_argument);
    CHECK_THROWS_AS(Poly::parse("1/0"), std::invalid_argument);
}

TEST_CASE("Poly: random algebra/serialization consistency") {
    std::mt19937_64 rng(supergrade_test_seed);
    std::uniform_int_distribution<int> coeff(-4, 4), pick(0, 2), expo(0, 2);
    const char* names[] = {"a", "b2", "c_x"};
    for (int iter = 0; iter < 200; ++iter) {
        Poly p;
        for (int t = 0; t < 4; ++t) {
            Poly term{Rational(coeff(rng))};
            for (int v = 0; v < 3; ++v) term *= Poly::variable(names[v]).pow(unsigned(expo(rng)));
            p += term;
        }
        CHECK(Poly::parse(p.str()) == p);
        Poly q = Poly::variable(names[pick(rng)]) - Poly(coeff(rng));
        CHECK((p * q - q * p).is_zero());
        CHECK(((p + q) - q) == p);
    }
}

TEST_CASE("Poly: substitution and evaluation") {
    Poly p = Poly::parse("a^2*b - 3*b + 1");
    Poly s = p.subst({{"a", Poly::parse("x + 1")}});
    CHECK(s == Poly::parse("(x+1)^2*b - 3*b + 1"));
    // Simultaneous semantics: swap does not cascade.
    Poly swap = Poly::parse("a*b").subst({{"a", Poly::variable("b")}, {"b", Poly::variable("a")}});
    CHECK(swap == Poly::parse("a*b"));
    CHECK(p.eval({{"a", Rational(2)}, {"b", Rational(1, 2)}}) == Rational(2 * 2) * Rational(1, 2) - Rational(3, 2) + Rational(1));
    CHECK_THROWS_AS(p.eval({{"a", Rational(1)}}), std::invalid_argument);
    CHECK(p.coefficient_of("b", 1) == Poly::parse("a^2 - 3"));
    CHECK(p.coefficient_of("b", 0) == Poly(1));
    CHECK(p.degree_in("a") == 2);
    CHECK(p.degree_in("zz") == 0);
}

TEST_CASE("Poly: content and canonical normalization") {
    Poly p = Poly::parse("4/3*a - 2/3*b");
    CHECK(p.content() == Rational(2, 3));
    CHECK(p.normalized() == Poly::parse("2*a - b"));
    CHECK(Poly::parse("-2*a + b").normalized() == Poly::parse("2*a - b"));
    CHECK(Poly::parse("-6").normalized() == Poly(1));
    CHECK(Poly(0).normalized().is_zero());
    // leading term decided deg-lex w.r.t. name-sorted variables
    CHECK(Poly::parse("-b^2 + a").normalized() == Poly::parse("b^2 - a"));
    // the lex-greatest degree-2 monomial here is a1*a3 (exponents (1,0,1)),
    // already positive, so the sign is kept
    CHECK(Poly::parse("a1*a3 - 2*a2^2 + a2*a3").normalized() ==
          Poly::parse("a1*a3 - 2*a2^2 + a2*a3"));
    CHECK(Poly::parse("-a1*a3 + 2*a2^2 - a2*a3").normalized() ==
          Poly::parse("a1*a3 - 2*a2^2 + a2*a3"));
}

TEST_CASE("linear_factors: monomial and linear splitting") {
    auto lf = linear_factors(Poly::parse("a2*c"));
    REQUIRE(lf.factors.size() == 2);
    CHECK(lf.factors[0] == Poly::variable("a2"));
    CHECK(lf.factors[1] == Poly::variable("c"));
    CHECK(!lf.residual);

    lf = linear_factors(Poly::parse("b^2"));
    REQUIRE(lf.factors.size() == 1);
    CHECK(lf.factors[0] == Poly::variable("b"));
    CHECK(!lf.residual);

    lf = linear_factors(Poly::parse("2*a*b - 6*a"));
    REQUIRE(lf.factors.size() == 2);
    CHECK(lf.factors[0] == Poly::variable("a"));
    CHECK(lf.factors[1] == Poly::parse("b - 3"));
    CHECK(!lf.residual);

    lf = linear_factors(Poly::parse("a*(b^2 + c^2)"));
    REQUIRE(lf.factors.size() == 1);
    CHECK(lf.factors[0] == Poly::variable("a"));
    REQUIRE(lf.residual.has_value());
    CHECK(*lf.residual == Poly::parse("b^2 + c^2"));

    lf = linear_factors(Poly::parse("a^2 + b^2"));
    CHECK(lf.factors.empty());
    REQUIRE(lf.residual.has_value());
    CHECK(*lf.residual == Poly::parse("a^2 + b^2"));

    lf = linear_factors(Poly::parse("a - 1"));
    REQUIRE(lf.factors.size() == 1);
    CHECK(lf.factors[0] == Poly::parse("a - 1"));

    lf = linear_factors(Poly(5));
    CHECK(lf.factors.empty());
    CHECK(!lf.residual);
}

TEST_CASE("MatrixQ: RREF, rank, kernel") {
    MatrixQ m(3, 4);
    // rows: x + 2y + z = 0 pattern matrices
    m.at(0, 0) = Poly(1); m.at(0, 1) = Poly(2); m.at(0, 2) = Poly(1); m.at(0, 3) = Poly(0);
    m.at(1, 0) = Poly(2); m.at(1, 1) = Poly(4); m.at(1, 2) = Poly(0); m.at(1, 3) = Poly(2);
    m.at(2, 0) = Poly(1); m.at(2, 1) = Poly(2); m.at(2, 2) = Poly(3); m.at(2, 3) = Poly(-2);
    RowReduced rr = row_reduce(m);
    CHECK(rr.rank == 2);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 2});
    CHECK(rr.rref.at(0, 0) == Poly(1));
    CHECK(rr.rref.at(0, 2) == Poly(0));
    MatrixQ k = kernel(m);
    CHECK(k.rows() == 2);
    // verify M * k^T == 0
    MatrixQ prod = m * k.transpose();
    CHECK(prod.is_zero());
}

TEST_CASE("MatrixQ: parametric entries are eliminated but never pivoted") {
    Poly t = Poly::variable("t");
    MatrixQ ok(2, 2);
    ok.at(0, 0) = Poly(1); ok.at(0, 1) = t;
    ok.at(1, 0) = t;       ok.at(1, 1) = Poly(0);
    // column 0 has constant pivot 1; the parametric t below is eliminated,
    // leaving -t^2 in column 1: that pivot decision must refuse.
    CHECK_THROWS_AS(row_reduce(ok), ParametricRankError);

    MatrixQ fine(2, 2);
    fine.at(0, 0) = Poly(1); fine.at(0, 1) = t;
    fine.at(1, 0) = Poly(2); fine.at(1, 1) = Poly(2) * t;
    RowReduced rr = row_reduce(fine);  // second row is a multiple: rank 1
    CHECK(rr.rank == 1);
    CHECK(rr.rref.at(0, 1) == t);
}

TEST_CASE("MatrixQ: determinant") {
    MatrixQ m(3, 3);
    m.at(0, 0) = Poly(2); m.at(0, 1) = Poly(0); m.at(0, 2) = Poly(1);
    m.at(1, 0) = Poly(0); m.at(1, 1) = Poly(3); m.at(1, 2) = Poly(0);
    m.at(2, 0) = Poly(1); m.at(2, 1) = Poly(0); m.at(2, 2) = Poly(1);
    CHECK(det(m) == Poly(3));
    MatrixQ p(2, 2);
    p.at(0, 0) = Poly::variable("a"); p.at(0, 1) = Poly::variable("b");
    p.at(1, 0) = Poly::variable("c"); p.at(1, 1) = Poly::variable("d");
    CHECK(det(p) == Poly::parse("a*d - b*c"));
    CHECK(det(MatrixQ::identity(5)) == Poly(1));
}
