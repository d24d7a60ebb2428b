#pragma once
/// \file catalog.hpp
/// Named constructors for the algebras, cochains, and classified laws shipped
/// with the library: the chain models and naturally graded definition blocks,
/// the classified Lie laws (groups 4.1-4.8), the mu laws and gamma-families
/// (groups 5.2-5.3), and the named 2-cochains.  Constructors validate ranges,
/// solve dependent parameters exactly, and carry identity-status notes.

#include <supergrade/deform.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace supergrade {

/// Arguments for make_algebra: dimensions plus named scalar parameters
/// (e.g. {"alpha": 2} for mu1_alpha, {"t": 1/2} for the 4.6/3 family,
/// {"g1": 1} for gamma-family members).
struct MakeArgs {
    std::optional<int> n;
    std::optional<int> m;
    std::map<std::string, Poly> params;
};

/// One row of the catalog: a constructible algebra, law, family, or cochain.
struct CatalogEntry {
    std::string id;        ///< constructor id, e.g. "NG", "4.6/2", "phi_1_2"
    std::string section;   ///< grouping tag: "3.1", "4.1".."4.8", "5.1".."5.3"
    std::string category;  ///< "definition" | "law" | "family" | "cochain"
    AlgKind kind = AlgKind::lie;  ///< algebra kind (for cochains: the base kind)
    bool is_cochain = false;
    std::string dims;     ///< admissible dimensions, human-readable
    std::string args;     ///< constructor-argument notes
    std::string summary;  ///< one-line description of the structure
    std::string status;   ///< identity-status note
    /// False exactly on the six laws that fail the genuine super Jacobi
    /// identity while satisfying the cocycle + composition criterion.
    bool genuine_identity_holds = true;
    /// Fixed (n,m) pairs at which this entry is a law; empty when the dims
    /// are parametric (see entry_matches_dims) or the row is not a law.
    std::vector<std::pair<int, int>> fixed_dims;
};

namespace detail {

[[nodiscard]] inline Rational binom(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    Rational r(1);
    for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
    return r;
}

/// (Y_i,Y_j) -> sum_k coeff * X_k components, keyed (i,j) with i <= j.
using CComps = std::map<std::pair<int, int>, std::map<int, Poly>>;
/// [X_r,Y_i] -> sum_k coeff * Y_k components, keyed (r,i).
using BComps = std::map<std::pair<int, int>, std::map<int, Poly>>;

/// Lie chain model: even X0..Xn, odd Y1..Ym, [X0,Xi]=X_{i+1}, [X0,Yj]=Y_{j+1}.
[[nodiscard]] inline SuperAlgebra lie_model(int n, int m, std::string name = "") {
    if (n < 2) throw std::domain_error("lie model requires n >= 2 (chain [X0,X1]=X2)");
    if (m < 0) throw std::domain_error("lie model requires m >= 0");
    if (name.empty())
        name = m == 0 ? "L_" + std::to_string(n)
                      : "L^{" + std::to_string(n) + "," + std::to_string(m) + "}";
    std::vector<std::string> even, odd;
    for (int i = 0; i <= n; ++i) even.push_back("X" + std::to_string(i));
    for (int j = 1; j <= m; ++j) odd.push_back("Y" + std::to_string(j));
    SuperAlgebra g(name, AlgKind::lie, even, odd);
    for (int i = 1; i < n; ++i) g.set_product(Bv{0, 0}, Bv{0, i}, Vec{{Bv{0, i + 1}, Poly(1)}});
    for (int j = 1; j < m; ++j) g.set_product(Bv{0, 0}, Bv{1, j - 1}, Vec{{Bv{1, j}, Poly(1)}});
    return g;
}

/// Adds symmetric odd-odd components (Y_i,Y_j)=sum coeff*X_k to a Lie-model
/// algebra (even index k = X_k there).
inline void add_C(SuperAlgebra& g, const CComps& comps) {
    for (const auto& [ij, terms] : comps) {
        Vec v;
        for (const auto& [k, c] : terms) v[Bv{0, k}] = c;
        vec_trim(v);
        g.set_product(Bv{1, ij.first - 1}, Bv{1, ij.second - 1}, v);
    }
}

/// Adds even-odd components [X_r,Y_i]=sum coeff*Y_k to a Lie-model algebra.
inline void add_B(SuperAlgebra& g, const BComps& comps) {
    for (const auto& [ri, terms] : comps) {
        Vec v;
        for (const auto& [k, c] : terms) v[Bv{1, k - 1}] = c;
        vec_trim(v);
        g.set_product(Bv{0, ri.first}, Bv{1, ri.second - 1}, v);
    }
}

/// Leibniz chain skeleton: even X1..Xn, odd Y1..Ym, [Xi,X1]=X_{i+1},
/// [Yj,X1]=Y_{j+1} (explicit right-multiplication storage, no mirrors).
[[nodiscard]] inline SuperAlgebra lz_skeleton(int n, int m, std::string name = "") {
    if (n < 1 || m < 0) throw std::domain_error("leibniz skeleton requires n >= 1, m >= 0");
    if (name.empty())
        name = "skel^{" + std::to_string(n) + "," + std::to_string(m) + "}";
    std::vector<std::string> even, odd;
    for (int i = 1; i <= n; ++i) even.push_back("X" + std::to_string(i));
    for (int j = 1; j <= m; ++j) odd.push_back("Y" + std::to_string(j));
    SuperAlgebra g(name, AlgKind::leibniz, even, odd);
    for (int i = 1; i < n; ++i)
        g.set_product(Bv{0, i - 1}, Bv{0, 0}, Vec{{Bv{0, i}, Poly(1)}});
    for (int j = 1; j < m; ++j)
        g.set_product(Bv{1, j - 1}, Bv{0, 0}, Vec{{Bv{1, j}, Poly(1)}});
    return g;
}

/// Weight-0 symmetric odd-odd component table determined by its top level:
/// c_{i,j} for i+j = n given, lower levels via c_{i,j} = c_{i,j+1} + c_{i+1,j}
/// (indices beyond n or m read as zero).
[[nodiscard]] inline CComps weight0_from_top(int n, int m,
                                             const std::map<std::pair<int, int>, Rational>& top) {
    std::map<std::pair<int, int>, Rational> c;
    auto get = [&](int i, int j) -> Rational {
        if (i > j) std::swap(i, j);
        if (i < 1 || j > m || i + j > n) return Rational(0);
        auto it = c.find({i, j});
        return it == c.end() ? Rational(0) : it->second;
    };
    for (int s = n; s >= 2; --s)
        for (int i = 1; i <= std::min(m, s - 1); ++i) {
            int j = s - i;
            if (j < i || j > m) continue;
            if (s == n) {
                auto it = top.find({i, j});
                if (it != top.end()) c[{i, j}] = it->second;
            } else {
                c[{i, j}] = get(i, j + 1) + get(i + 1, j);
            }
        }
    CComps out;
    for (const auto& [ij, v] : c)
        if (!v.is_zero()) out[ij][ij.first + ij.second] = Poly(v);
    return out;
}

/// phi_{1,2} components on the model at (n,m): (Y1,Y1)=X2, then (Y1,Y2)=X3/2
/// for n>=3, m>=2, then (Y1,Y3)=X4/2 at the (4,3) home dimensions.
[[nodiscard]] inline CComps phi12_components(int n, int m) {
    CComps c;
    c[{1, 1}][2] = Poly(1);
    if (n >= 3 && m >= 2) c[{1, 2}][3] = Poly(Rational(1, 2));
    if (n >= 4 && m >= 3) c[{1, 3}][4] = Poly(Rational(1, 2));
    return c;
}

/// Psi^{k+1}_{k,1} components: [X_r,Y_i] = (-1)^{k-r} C(i-1,k-r) Y_{i+r},
/// 1 <= r <= k, clipped to the (n,m) model.
[[nodiscard]] inline BComps psi_k1_components(int k, int n, int m) {
    BComps b;
    for (int r = 1; r <= std::min(k, n); ++r)
        for (int i = 1; i + r <= m; ++i) {
            Rational c = binom(i - 1, k - r);
            if ((k - r) % 2 != 0) c = -c;
            if (!c.is_zero()) b[{r, i}][i + r] = Poly(c);
        }
    return b;
}

[[nodiscard]] inline std::string dims_tag(int n, int m) {
    return std::to_string(n) + "," + std::to_string(m);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// gamma-families (group 5.3)
// ---------------------------------------------------------------------------

/// Dependent-parameter relations of the (n,m) gamma-family: the diagonal
/// relations sum_s (-1)^s C(j-1,s) gamma_{j+1+s} = 0 for 2j+1 <= n, j+1 <= m,
/// and for n > m the top relations sum_{s=0}^{m-i} (-1)^s C(m,s) gamma_{i+s}=0
/// for 1 <= i <= n-m-1.  Linear and homogeneous in g1..g_{gmax}.
[[nodiscard]] inline std::vector<Poly> family_relations(int n, int m) {
    int gmax = std::min(n - 1, m);
    auto g = [&](int i) { return i >= 1 && i <= gmax ? Poly::variable("g" + std::to_string(i)) : Poly(0); };
    std::vector<Poly> rels;
    for (int j = 1; j <= gmax; ++j) {
        if (2 * j + 1 > n || j + 1 > m) continue;
        Poly r(0);
        for (int s = 0; s <= std::min(j - 1, gmax - (j + 1)); ++s) {
            Rational c = detail::binom(j - 1, s);
            if (s % 2 != 0) c = -c;
            r = r + g(j + 1 + s) * Poly(c);
        }
        if (!(r == Poly(0))) rels.push_back(r);
    }
    if (n > m)
        for (int i = 1; i <= n - m - 1; ++i) {
            Poly r(0);
            for (int s = 0; s <= m - i; ++s) {
                Rational c = detail::binom(m, s);
                if (s % 2 != 0) c = -c;
                r = r + g(i + s) * Poly(c);
            }
            if (!(r == Poly(0))) rels.push_back(r);
        }
    return rels;
}

namespace detail {

/// Solves the family relations exactly: returns gamma_i as a Poly in the free
/// g-variables, for i = 1..gmax.
[[nodiscard]] inline std::map<int, Poly> solved_family_gammas(int n, int m) {
    if (n < 2 || m < 2)
        throw std::domain_error("gamma-family requires n >= 2 and m >= 2");
    int gmax = std::min(n - 1, m);
    std::map<int, Poly> gamma;
    for (int i = 1; i <= gmax; ++i) gamma[i] = Poly::variable("g" + std::to_string(i));
    std::vector<Poly> rels = family_relations(n, m);
    if (rels.empty()) return gamma;
    MatrixQ M(rels.size(), gmax);
    for (std::size_t r = 0; r < rels.size(); ++r)
        for (int i = 1; i <= gmax; ++i)
            M.at(r, i - 1) = rels[r].coefficient_of("g" + std::to_string(i), 1);
    RowReduced rr = row_reduce(M);
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
        int p = static_cast<int>(rr.pivots[r]) + 1;
        Poly value(0);
        for (int ccol = 1; ccol <= gmax; ++ccol) {
            if (ccol == p) continue;
            Poly coeff = rr.rref.at(r, ccol - 1);
            if (!(coeff == Poly(0)))
                value = value - coeff * Poly::variable("g" + std::to_string(ccol));
        }
        gamma[p] = value;
    }
    return gamma;
}

}  // namespace detail

/// Names of the gamma-parameters that remain free in the (n,m) family after
/// solving the dependent relations; empty = only the degenerate member exists.
[[nodiscard]] inline std::vector<std::string> family_free_gammas(int n, int m) {
    std::map<int, Poly> gamma = detail::solved_family_gammas(n, m);
    std::vector<std::string> free_names;
    for (const auto& [i, value] : gamma)
        if (value == Poly::variable("g" + std::to_string(i)))
            free_names.push_back("g" + std::to_string(i));
    return free_names;
}

/// Builds the (n,m) gamma-family law: the Leibniz chain skeleton plus
/// [X1,Yj] = -Y_{j+1} and the binomial products
/// [Y_i,Y_j] = sum_s (-1)^s C(j-1,s) gamma_{i+s} X_{i+j}.  Dependent gammas
/// are solved, not taken as input; `gamma` may assign values to free g's
/// ("g1", "g3", ...) and explicit values for dependent g's are validated.
[[nodiscard]] inline SuperAlgebra leibniz_family(int n, int m,
                                                 const std::map<std::string, Poly>& gamma = {}) {
    std::map<int, Poly> gm = detail::solved_family_gammas(n, m);
    int gmax = std::min(n - 1, m);
    std::vector<std::string> free_names = family_free_gammas(n, m);
    std::map<std::string, Poly> subs;
    std::map<std::string, Poly> checks;
    for (const auto& [name, value] : gamma) {
        bool known = false;
        for (int i = 1; i <= gmax; ++i)
            if (name == "g" + std::to_string(i)) known = true;
        if (!known)
            throw std::invalid_argument("gamma-family(" + std::to_string(n) + "," +
                                        std::to_string(m) + "): no parameter named '" + name +
                                        "' (indices run 1.." + std::to_string(gmax) + ")");
        if (std::find(free_names.begin(), free_names.end(), name) != free_names.end())
            subs[name] = value;
        else
            checks[name] = value;
    }
    for (auto& [i, value] : gm) value = value.subst(subs);
    for (const auto& [name, value] : checks) {
        int i = std::stoi(name.substr(1));
        if (!(gm.at(i) == value))
            throw std::invalid_argument("gamma-family(" + std::to_string(n) + "," +
                                        std::to_string(m) + "): " + name +
                                        " is determined by the relations to " + gm.at(i).str() +
                                        ", got " + value.str());
    }
    SuperAlgebra g = detail::lz_skeleton(
        n, m, "leibniz_family(" + std::to_string(n) + "," + std::to_string(m) + ")");
    for (int j = 1; j < m; ++j)
        g.set_product(Bv{0, 0}, Bv{1, j - 1}, Vec{{Bv{1, j}, Poly(-1)}});
    for (int i = 1; i <= gmax; ++i)
        for (int j = 1; j <= gmax; ++j) {
            if (i + j > n) continue;
            Poly coeff(0);
            for (int s = 0; s <= std::min(j - 1, gmax - i); ++s) {
                Rational c = detail::binom(j - 1, s);
                if (s % 2 != 0) c = -c;
                coeff = coeff + gm.at(i + s) * Poly(c);
            }
            if (!(coeff == Poly(0)))
                g.set_product(Bv{1, i - 1}, Bv{1, j - 1}, Vec{{Bv{0, i + j - 1}, coeff}});
        }
    return g;
}

/// Positional form: gamma[0] = value for g1, gamma[1] for g2, ...
[[nodiscard]] inline SuperAlgebra leibniz_family(int n, int m, const std::vector<Poly>& gamma) {
    int gmax = std::min(n - 1, m);
    if (static_cast<int>(gamma.size()) > gmax)
        throw std::invalid_argument("gamma-family: " + std::to_string(gamma.size()) +
                                    " gamma values given but indices run 1.." +
                                    std::to_string(gmax));
    std::map<std::string, Poly> named;
    for (std::size_t i = 0; i < gamma.size(); ++i)
        named["g" + std::to_string(i + 1)] = gamma[i];
    return leibniz_family(n, m, named);
}

// ---------------------------------------------------------------------------
// definition blocks
// ---------------------------------------------------------------------------

namespace detail {

[[nodiscard]] inline SuperAlgebra make_L(int n) {  // filiform Lie chain
    return lie_model(n, 0);
}

[[nodiscard]] inline SuperAlgebra make_Q(int n) {
    if (n < 5 || n % 2 == 0)
        throw std::domain_error("Q_n requires odd n >= 5 (got n=" + std::to_string(n) + ")");
    SuperAlgebra g = lie_model(n, 0, "Q_" + std::to_string(n));
    for (int i = 1; 2 * i < n; ++i) {
        Rational c = (i % 2 == 0) ? Rational(1) : Rational(-1);
        g.set_product(Bv{0, i}, Bv{0, n - i}, Vec{{Bv{0, n}, Poly(c)}});
    }
    return g;
}

[[nodiscard]] inline SuperAlgebra make_NF(int n) {
    if (n < 1) throw std::domain_error("NF^n requires n >= 1");
    return lz_skeleton(n, 0, "NF^" + std::to_string(n));
}

[[nodiscard]] inline SuperAlgebra make_NG(int n, int m) {
    if (n < 1 || m < 1) throw std::domain_error("NG^{n,m} requires n >= 1 and m >= 1");
    if (n > m + 1)
        throw std::domain_error("NG^{" + std::to_string(n) + "," + std::to_string(m) +
                                "} does not satisfy the super Leibniz identity: n <= m+1 "
                                "is required ([Ym,X1,Y1] forces X_{m+2} = 0)");
    SuperAlgebra g = lz_skeleton(n, m, "NG^{" + std::to_string(n) + "," + std::to_string(m) + "}");
    for (int i = 1; i <= std::min(n - 1, m); ++i)
        g.set_product(Bv{1, i - 1}, Bv{1, 0}, Vec{{Bv{0, i}, Poly(1)}});
    return g;
}

/// The nilpotent Leibniz superalgebra that is not naturally graded:
/// X1..X4, Y1 with [X2,X1]=X3, [X3,X1]=X4, [X1,X2]=-X3, [X1,X3]=-X4,
/// [Y1,Y1]=X4 (stored Leibniz-kind; it is in fact a Lie superalgebra).
[[nodiscard]] inline SuperAlgebra make_remark_3_1() {
    SuperAlgebra g("remark_3_1", AlgKind::leibniz, {"X1", "X2", "X3", "X4"}, {"Y1"});
    g.set_product(Bv{0, 1}, Bv{0, 0}, Vec{{Bv{0, 2}, Poly(1)}});
    g.set_product(Bv{0, 2}, Bv{0, 0}, Vec{{Bv{0, 3}, Poly(1)}});
    g.set_product(Bv{0, 0}, Bv{0, 1}, Vec{{Bv{0, 2}, Poly(-1)}});
    g.set_product(Bv{0, 0}, Bv{0, 2}, Vec{{Bv{0, 3}, Poly(-1)}});
    g.set_product(Bv{1, 0}, Bv{1, 0}, Vec{{Bv{0, 3}, Poly(1)}});
    return g;
}

// ---------------------------------------------------------------------------
// classified Lie laws (groups 4.1-4.8)
// ---------------------------------------------------------------------------

[[nodiscard]] inline SuperAlgebra lie_law(const std::string& name, int n, int m,
                                          const CComps& c, const BComps& b = {}) {
    SuperAlgebra g = lie_model(n, m, name);
    add_C(g, c);
    add_B(g, b);
    return g;
}

[[nodiscard]] inline SuperAlgebra make_lie_law(const std::string& id, const MakeArgs& args) {
    const Rational half(1, 2);
    if (id == "4.1/2,1") return lie_law(id, 2, 1, {{{1, 1}, {{2, Poly(1)}}}});
    if (id == "4.1/2,2") return lie_law(id, 2, 2, {{{1, 1}, {{2, Poly(1)}}}});
    if (id == "4.1/2,3") return lie_law(id, 2, 3, {{{1, 1}, {{2, Poly(1)}}}});
    if (id == "4.1/2,4") return lie_law(id, 2, 4, {{{1, 1}, {{2, Poly(1)}}}});
    if (id == "4.1/3,2-1") return lie_law(id, 3, 2, phi12_components(3, 2));
    if (id == "4.1/3,2-2")
        return lie_law(id, 3, 2, phi12_components(3, 2), {{{1, 1}, {{2, Poly(1)}}}});
    if (id == "4.1/4,2") return lie_law(id, 4, 2, weight0_from_top(4, 2, {{{2, 2}, Rational(1)}}));
    if (id == "4.1/3,3-1") return lie_law(id, 3, 3, phi12_components(3, 3));
    if (id == "4.1/3,3-2")
        return lie_law(id, 3, 3, phi12_components(3, 3),
                       {{{1, 1}, {{2, Poly(1)}}}, {{1, 2}, {{3, Poly(1)}}}});
    if (id == "4.2/2,m") {
        if (!args.m || *args.m < 5)
            throw std::domain_error("law 4.2/2,m requires m >= 5 (m=1..4 are listed under 4.1)");
        return lie_law("4.2/2," + std::to_string(*args.m), 2, *args.m,
                       {{{1, 1}, {{2, Poly(1)}}}});
    }
    if (id == "4.3/1") return lie_law(id, 3, 4, phi12_components(3, 4));
    if (id == "4.3/2")
        return lie_law(id, 3, 4, phi12_components(3, 4),
                       {{{1, 3}, {{4, Poly(1)}}}, {{2, 2}, {{4, Poly(-1)}}}, {{3, 1}, {{4, Poly(1)}}}});
    if (id == "4.3/3")
        return lie_law(id, 3, 4, phi12_components(3, 4),
                       {{{1, 1}, {{2, Poly(1)}}}, {{1, 2}, {{3, Poly(1)}}}, {{1, 3}, {{4, Poly(1)}}}});
    if (id == "4.4/3,m-1" || id == "4.4/3,m-2") {
        if (!args.m || *args.m < 5)
            throw std::domain_error("laws 4.4/3,m-* require m >= 5");
        int m = *args.m;
        std::string name = "4.4/3," + std::to_string(m) + id.substr(id.size() - 2);
        if (id == "4.4/3,m-1") return lie_law(name, 3, m, phi12_components(3, m));
        BComps b;
        for (int j = 1; j < m; ++j) b[{1, j}][j + 1] = Poly(1);
        return lie_law(name, 3, m, phi12_components(3, m), b);
    }
    if (id == "4.6/1")
        return lie_law(id, 4, 3, {{{1, 3}, {{4, Poly(-1)}}}, {{2, 2}, {{4, Poly(1)}}}});
    if (id == "4.6/2")
        return lie_law(id, 4, 3, {{{1, 3}, {{4, Poly(-1)}}}, {{2, 2}, {{4, Poly(1)}}}},
                       {{{1, 1}, {{2, Poly(1)}}}, {{1, 2}, {{3, Poly(-1)}}}, {{2, 1}, {{3, Poly(2)}}}});
    if (id == "4.6/3") {
        Poly t = args.params.count("t") ? args.params.at("t") : Poly::variable("t");
        return lie_law(id, 4, 3,
                       {{{1, 1}, {{2, Poly(1)}}},
                        {{1, 2}, {{3, Poly(half)}}},
                        {{1, 3}, {{4, Poly(half) - t}}},
                        {{2, 2}, {{4, t}}}});
    }
    if (id == "4.6/4")
        return lie_law(id, 4, 3,
                       {{{1, 1}, {{2, Poly(4)}}},
                        {{1, 2}, {{3, Poly(2)}}},
                        {{1, 3}, {{4, Poly(1)}}},
                        {{2, 2}, {{4, Poly(1)}}}},
                       {{{1, 1}, {{2, Poly(1)}}}, {{1, 2}, {{3, Poly(1)}}}});
    if (id == "4.7/5,3")
        return lie_law(id, 5, 3, weight0_from_top(5, 3, {{{2, 3}, Rational(1, 2)}}));
    if (id == "4.8/6,3")
        return lie_law(id, 6, 3, weight0_from_top(6, 3, {{{3, 3}, Rational(1)}}));
    throw std::invalid_argument("unknown law id: " + id);
}

// ---------------------------------------------------------------------------
// mu laws (group 5.2), dims-disambiguated
// ---------------------------------------------------------------------------

[[nodiscard]] inline SuperAlgebra make_mu(const std::string& id, const MakeArgs& args) {
    int n = args.n.value_or(-1), m = args.m.value_or(-1);
    auto dims_are = [&](int en, int em) { return n == en && m == em; };
    auto require_dims = [&](std::initializer_list<std::pair<int, int>> allowed) {
        for (auto [en, em] : allowed)
            if (dims_are(en, em)) return;
        std::ostringstream os;
        os << id << " is not defined at dims (" << n << "," << m << ")";
        throw std::domain_error(os.str());
    };
    if (id == "mu1_alpha") {
        if ((args.n && *args.n != 2) || (args.m && *args.m != 2))
            throw std::domain_error("mu1_alpha is defined at dims (2,2) only");
        Poly alpha = args.params.count("alpha") ? args.params.at("alpha") : Poly::variable("alpha");
        SuperAlgebra g = lz_skeleton(2, 2, "mu1_alpha(2,2)");
        g.set_product(Bv{0, 0}, Bv{1, 0}, Vec{{Bv{1, 1}, alpha}});
        g.set_product(Bv{1, 0}, Bv{1, 0}, Vec{{Bv{0, 1}, Poly(1)}});
        return g;
    }
    if (id == "mu1") {
        require_dims({{2, 3}, {3, 3}});
        SuperAlgebra g = make_NG(n, m);
        g.set_name("mu1(" + dims_tag(n, m) + ")");
        return g;
    }
    if (id == "mu2") {
        require_dims({{3, 2}});
        SuperAlgebra g = make_NG(3, 2);
        g.set_name("mu2(3,2)");
        return g;
    }
    if (id == "mu3") {
        require_dims({{3, 2}, {2, 3}});
        if (n == 3) {
            SuperAlgebra g = lz_skeleton(3, 2, "mu3(3,2)");
            g.set_product(Bv{0, 0}, Bv{1, 0}, Vec{{Bv{1, 1}, Poly(-1)}});
            g.set_product(Bv{1, 0}, Bv{1, 1}, Vec{{Bv{0, 2}, Poly(1)}});
            g.set_product(Bv{1, 0}, Bv{1, 0}, Vec{{Bv{0, 1}, Poly(1)}});
            return g;
        }
        SuperAlgebra g = lz_skeleton(2, 3, "mu3(2,3)");
        g.set_product(Bv{0, 0}, Bv{1, 0}, Vec{{Bv{1, 1}, Poly(-1)}});
        g.set_product(Bv{0, 0}, Bv{1, 1}, Vec{{Bv{1, 2}, Poly(-1)}});
        g.set_product(Bv{1, 0}, Bv{1, 0}, Vec{{Bv{0, 1}, Poly(1)}});
        return g;
    }
    if (id == "mu8") {
        require_dims({{3, 3}});
        SuperAlgebra g = leibniz_family(3, 3, std::map<std::string, Poly>{{"g1", Poly(1)}});
        g.set_name("mu8(3,3)");
        return g;
    }
    if (id == "mu9") {
        require_dims({{4, 3}});
        SuperAlgebra g = leibniz_family(
            4, 3, std::map<std::string, Poly>{{"g1", Poly(0)}, {"g3", Poly(1)}});
        g.set_name("mu9(4,3)");
        return g;
    }
    if (id == "mu12") {
        require_dims({{4, 3}});
        SuperAlgebra g = make_NG(4, 3);
        g.set_name("mu12(4,3)");
        return g;
    }
    if (id == "mu_m_minus_1" || id == "mu_m_plus_1") {
        if (n != 2 || m < 4)
            throw std::domain_error(id + " requires dims (2,m) with m >= 4 "
                                         "(smaller m cases appear under their own mu ids)");
        if (id == "mu_m_minus_1") {
            SuperAlgebra g = make_NG(2, m);
            g.set_name("mu_m_minus_1(2," + std::to_string(m) + ")");
            return g;
        }
        SuperAlgebra g = leibniz_family(2, m, std::map<std::string, Poly>{{"g1", Poly(1)}});
        g.set_name("mu_m_plus_1(2," + std::to_string(m) + ")");
        return g;
    }
    throw std::invalid_argument("unknown mu id: " + id);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// cochains
// ---------------------------------------------------------------------------

/// Builds a named 2-cochain over the Lie model at (n,m).  phi cochains are
/// restricted to their home dimensions; psi cochains clip to the model.
[[nodiscard]] inline Cochain2 make_cochain(const std::string& id, int n, int m) {
    using detail::CComps;
    auto on_model = [&](const CComps& c, const detail::BComps& b) {
        Cochain2 out(detail::lie_model(n, m), id, 0);
        for (const auto& [ij, terms] : c) {
            Vec v;
            for (const auto& [k, coeff] : terms) v[Bv{0, k}] = coeff;
            out.set_component(Bv{1, ij.first - 1}, Bv{1, ij.second - 1}, v);
        }
        for (const auto& [ri, terms] : b) {
            Vec v;
            for (const auto& [k, coeff] : terms) v[Bv{1, k - 1}] = coeff;
            out.set_component(Bv{0, ri.first}, Bv{1, ri.second - 1}, v);
        }
        return out;
    };
    auto home = [&](bool ok, const std::string& where) {
        if (!ok)
            throw std::domain_error(id + " is defined at " + where + ", not (" +
                                    detail::dims_tag(n, m) + ")");
    };
    if (id == "phi_1_2") {
        home(n == 2 || n == 3 || (n == 4 && m == 3), "n=2, n=3, or (4,3)");
        return on_model(detail::phi12_components(n, m), {});
    }
    if (id == "phi_2_4") {
        home(n == 4 && m == 3, "(4,3)");
        return on_model({{{1, 3}, {{4, Poly(-1)}}}, {{2, 2}, {{4, Poly(1)}}}}, {});
    }
    if (id == "phibar_2_4") {
        home((n == 4 && m == 2) || (n == 5 && m == 3), "(4,2) or (5,3)");
        if (n == 4) return on_model(detail::weight0_from_top(4, 2, {{{2, 2}, Rational(1)}}), {});
        return on_model(detail::weight0_from_top(5, 3, {{{2, 3}, Rational(1, 2)}}), {});
    }
    if (id == "phibar_3_6") {
        home(n == 6 && m == 3, "(6,3)");
        return on_model(detail::weight0_from_top(6, 3, {{{3, 3}, Rational(1)}}), {});
    }
    if (id == "phi_3_6") {
        // phibar_3_6 - 6*phi_1_2 - 2*phi_2_4 with the (4,3) component lists
        // zero-extended; NOT a standalone cocycle (only phibar_3_6 is).
        home(n == 6 && m == 3, "(6,3)");
        return on_model({{{2, 3}, {{5, Poly(1)}}}, {{3, 3}, {{6, Poly(1)}}}}, {});
    }
    if (id == "psi2_1_1" || id == "psi3_2_1" || id == "psi4_3_1") {
        int k = id == "psi2_1_1" ? 1 : id == "psi3_2_1" ? 2 : 3;
        if (n < 2 || m < 1)
            throw std::domain_error(id + " requires a model with n >= 2, m >= 1");
        return on_model({}, detail::psi_k1_components(k, n, m));
    }
    throw std::invalid_argument("unknown cochain id: " + id);
}

// ---------------------------------------------------------------------------
// make_algebra dispatch
// ---------------------------------------------------------------------------

/// Builds a catalog algebra by id.  Definition blocks take dims arguments
/// ("L" n; "Q" odd n>=5; "Lnm" n,m; "NF" n; "NG" n<=m+1; "remark_3_1" none;
/// "leibniz_family" n,m plus g-parameters), mu ids take the dims printed in
/// their tables, law ids are fixed except "4.2/2,m" and "4.4/3,m-*" (m >= 5)
/// and the t-parameter of "4.6/3".
[[nodiscard]] inline SuperAlgebra make_algebra(const std::string& id, const MakeArgs& args = {}) {
    auto need_n = [&]() {
        if (!args.n) throw std::invalid_argument(id + " requires argument n");
        return *args.n;
    };
    auto need_m = [&]() {
        if (!args.m) throw std::invalid_argument(id + " requires argument m");
        return *args.m;
    };
    if (id == "L") return detail::make_L(need_n());
    if (id == "Q") return detail::make_Q(need_n());
    if (id == "Lnm") {
        int n = need_n(), m = need_m();
        if (m < 1) throw std::domain_error("Lnm requires m >= 1 (use L for the even chain)");
        return detail::lie_model(n, m);
    }
    if (id == "NF") return detail::make_NF(need_n());
    if (id == "NG") return detail::make_NG(need_n(), need_m());
    if (id == "remark_3_1") return detail::make_remark_3_1();
    if (id == "leibniz_family") return leibniz_family(need_n(), need_m(), args.params);
    if (id.rfind("mu", 0) == 0) return detail::make_mu(id, args);
    if (id.rfind("4.", 0) == 0) return detail::make_lie_law(id, args);
    throw std::invalid_argument("unknown catalog id: " + id);
}

// ---------------------------------------------------------------------------
// entry registry
// ---------------------------------------------------------------------------

namespace detail {

inline const char* six_law_status =
    "fails the genuine super Jacobi identity (documented divergence); "
    "satisfies the infinitesimal-cocycle + composition criterion";

[[nodiscard]] inline std::vector<CatalogEntry> build_entries() {
    std::vector<CatalogEntry> es;
    auto add = [&](CatalogEntry e) { es.push_back(std::move(e)); };
    // --- definitions ---
    add({"L", "3.1", "definition", AlgKind::lie, false, "n >= 2 (dim n+1)", "n",
         "filiform Lie chain X0..Xn with [X0,Xi]=X_{i+1}", "passes super Jacobi", true, {}});
    add({"Q", "3.1", "definition", AlgKind::lie, false, "odd n >= 5 (dim n+1)", "n",
         "filiform Lie chain plus [Xi,X_{n-i}]=(-1)^i Xn", "passes super Jacobi", true, {}});
    add({"Lnm", "4.1", "definition", AlgKind::lie, false, "n >= 2, m >= 1", "n, m",
         "chain model: [X0,Xi]=X_{i+1}, [X0,Yj]=Y_{j+1}", "passes super Jacobi", true, {}});
    add({"NF", "5.1", "definition", AlgKind::leibniz, false, "n >= 1", "n",
         "null-filiform Leibniz chain [Xi,X1]=X_{i+1}", "passes super Leibniz", true, {}});
    add({"NG", "5.2", "definition", AlgKind::leibniz, false, "1 <= n <= m+1", "n, m",
         "Leibniz chains plus [Yi,Y1]=X_{i+1}, i <= min(n-1,m)",
         "passes super Leibniz on its admissible range (n <= m+1)", true, {}});
    add({"remark_3_1", "3.1", "definition", AlgKind::leibniz, false, "(4,1) fixed", "none",
         "nilpotent but not naturally graded: chain X1..X4 with mirrored products, [Y1,Y1]=X4",
         "passes super Leibniz (and super Jacobi); gr is NOT graded", true, {}});
    // --- family ---
    add({"leibniz_family", "5.3", "family", AlgKind::leibniz, false,
         "n >= 2, m >= 2 (free gammas exist at tabulated dims)", "n, m, g-parameters",
         "skeleton + [X1,Yj]=-Y_{j+1} + binomial products [Yi,Yj]=sum (-1)^s C(j-1,s) g_{i+s} X_{i+j}",
         "passes super Leibniz symbolically after dependent-gamma solving", true, {}});
    // --- Lie laws, group 4.1 ---
    auto lie_law_entry = [&](std::string id, std::string section, int n, int m,
                             std::string summary, bool holds) {
        add({std::move(id), std::move(section), "law", AlgKind::lie, false, dims_tag(n, m), "",
             std::move(summary), holds ? "passes super Jacobi" : six_law_status, holds,
             {{n, m}}});
    };
    lie_law_entry("4.1/2,1", "4.1", 2, 1, "L^{2,1} + phi_1_2", true);
    lie_law_entry("4.1/2,2", "4.1", 2, 2, "L^{2,2} + phi_1_2", true);
    lie_law_entry("4.1/2,3", "4.1", 2, 3, "L^{2,3} + phi_1_2", true);
    lie_law_entry("4.1/2,4", "4.1", 2, 4, "L^{2,4} + phi_1_2", true);
    lie_law_entry("4.1/3,2-1", "4.1", 3, 2, "L^{3,2} + phi_1_2", true);
    lie_law_entry("4.1/3,2-2", "4.1", 3, 2, "L^{3,2} + phi_1_2 + psi2_1_1", false);
    lie_law_entry("4.1/4,2", "4.1", 4, 2, "L^{4,2} + phibar_2_4", true);
    lie_law_entry("4.1/3,3-1", "4.1", 3, 3, "L^{3,3} + phi_1_2", true);
    lie_law_entry("4.1/3,3-2", "4.1", 3, 3, "L^{3,3} + phi_1_2 + psi2_1_1", false);
    add({"4.2/2,m", "4.2", "law", AlgKind::lie, false, "(2,m), m >= 5", "m",
         "L^{2,m} + phi_1_2", "passes super Jacobi", true, {}});
    lie_law_entry("4.3/1", "4.3", 3, 4, "L^{3,4} + phi_1_2", true);
    lie_law_entry("4.3/2", "4.3", 3, 4, "L^{3,4} + phi_1_2 + psi4_3_1", true);
    lie_law_entry("4.3/3", "4.3", 3, 4, "L^{3,4} + phi_1_2 + psi2_1_1", false);
    add({"4.4/3,m-1", "4.4", "law", AlgKind::lie, false, "(3,m), m >= 5", "m",
         "L^{3,m} + phi_1_2", "passes super Jacobi", true, {}});
    add({"4.4/3,m-2", "4.4", "law", AlgKind::lie, false, "(3,m), m >= 5", "m",
         "L^{3,m} + phi_1_2 + psi2_1_1", six_law_status, false, {}});
    lie_law_entry("4.6/1", "4.6", 4, 3, "L^{4,3} + phi_2_4", true);
    lie_law_entry("4.6/2", "4.6", 4, 3, "L^{4,3} + phi_2_4 + psi2_1_1 + 2*psi3_2_1 "
                  "(coefficient 2 recovered from the label and cocycle condition)", false);
    {
        CatalogEntry e{"4.6/3", "4.6", "law", AlgKind::lie, false, dims_tag(4, 3), "t",
                       "L^{4,3} + phi_1_2 + t*phi_2_4 (one-parameter family, stored symbolic)",
                       "passes super Jacobi (symbolically in t)", true, {{4, 3}}};
        add(e);
    }
    lie_law_entry("4.6/4", "4.6", 4, 3, "L^{4,3} + 4*phi_1_2 + phi_2_4 + psi2_1_1", false);
    lie_law_entry("4.7/5,3", "4.7", 5, 3, "L^{5,3} + phibar_2_4", true);
    lie_law_entry("4.8/6,3", "4.8", 6, 3, "L^{6,3} + phibar_3_6", true);
    // --- mu laws, group 5.2 ---
    auto mu_entry = [&](std::string id, int n, int m, std::string summary,
                        std::string status = "passes super Leibniz") {
        add({std::move(id), "5.2", "law", AlgKind::leibniz, false, dims_tag(n, m), "n, m",
             std::move(summary), std::move(status), true, {{n, m}}});
    };
    mu_entry("mu1_alpha", 2, 2, "[X1,X1]=X2, [X1,Y1]=alpha*Y2, [Y1,X1]=Y2, [Y1,Y1]=X2 "
             "(alpha symbolic by default)", "passes super Leibniz symbolically in alpha");
    mu_entry("mu2", 3, 2, "NG^{3,2}");
    mu_entry("mu3", 3, 2, "skeleton + [X1,Y1]=-Y2, [Y1,Y1]=X2, [Y1,Y2]=X3");
    mu_entry("mu1", 2, 3, "NG^{2,3}");
    mu_entry("mu3", 2, 3, "skeleton + [X1,Y1]=-Y2, [X1,Y2]=-Y3, [Y1,Y1]=X2");
    mu_entry("mu1", 3, 3, "NG^{3,3} (reconstructed: the printed display is not a "
             "super Leibniz law; see docs)");
    mu_entry("mu8", 3, 3, "gamma-family(3,3) at g1=1 (printed display corrected by "
             "[X1,Y1]=-Y2; see docs)");
    mu_entry("mu9", 4, 3, "gamma-family(4,3) at g1=0, g3=1");
    mu_entry("mu12", 4, 3, "NG^{4,3}");
    add({"mu_m_minus_1", "5.2", "law", AlgKind::leibniz, false, "(2,m), m >= 4", "m",
         "NG^{2,m}", "passes super Leibniz", true, {}});
    add({"mu_m_plus_1", "5.2", "law", AlgKind::leibniz, false, "(2,m), m >= 4", "m",
         "gamma-family(2,m) at g1=1 (printed display corrected by [X1,Y1]=-Y2; see docs)",
         "passes super Leibniz", true, {}});
    // --- cochains ---
    auto cochain_entry = [&](std::string id, std::string section, std::string dims,
                             std::string summary, std::string status) {
        add({std::move(id), std::move(section), "cochain", AlgKind::lie, true, std::move(dims),
             "n, m", std::move(summary), std::move(status), true, {}});
    };
    cochain_entry("phi_1_2", "4.1", "n=2, n=3, or (4,3)",
                  "(Y1,Y1)=X2 [, (Y1,Y2)=X3/2 [, (Y1,Y3)=X4/2]]", "weight-0 cocycle");
    cochain_entry("phi_2_4", "4.6", "(4,3)", "(Y1,Y3)=-X4, (Y2,Y2)=X4", "weight-0 cocycle");
    cochain_entry("phibar_2_4", "4.1", "(4,2) or (5,3)",
                  "weight-0 table from top c_{2,2}=1 resp. c_{2,3}=1/2", "weight-0 cocycle");
    cochain_entry("phibar_3_6", "4.8", "(6,3)", "weight-0 table from top c_{3,3}=1",
                  "weight-0 cocycle");
    cochain_entry("phi_3_6", "4.8", "(6,3)", "(Y2,Y3)=X5, (Y3,Y3)=X6",
                  "weight 0 but NOT a standalone cocycle (only phibar_3_6 is)");
    cochain_entry("psi2_1_1", "4.1", "any model n >= 2, m >= 1", "[X1,Yi]=Y_{i+1}",
                  "weight-0 cocycle on models");
    cochain_entry("psi3_2_1", "4.6", "any model n >= 2, m >= 1",
                  "[X1,Yi]=-(i-1)Y_{i+1}, [X2,Yi]=Y_{i+2}", "weight-0 cocycle on models");
    cochain_entry("psi4_3_1", "4.3", "any model n >= 2, m >= 1",
                  "[X_r,Yi]=(-1)^{3-r} C(i-1,3-r) Y_{i+r}, r=1..3", "weight-0 cocycle on models");
    return es;
}

}  // namespace detail

/// The full registry, in deterministic order (definitions, family, Lie laws,
/// mu laws, cochains).
[[nodiscard]] inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = detail::build_entries();
    return entries;
}

/// All registry rows with the given id (mu ids can appear at several dims).
[[nodiscard]] inline std::vector<CatalogEntry> entries_for_id(const std::string& id) {
    std::vector<CatalogEntry> out;
    for (const auto& e : catalog_entries())
        if (e.id == id) out.push_back(e);
    return out;
}

/// True when the entry is a law/family present at dims (n,m).
[[nodiscard]] inline bool entry_matches_dims(const CatalogEntry& e, int n, int m) {
    if (e.category != "law" && e.category != "family") return false;
    if (!e.fixed_dims.empty())
        return std::find(e.fixed_dims.begin(), e.fixed_dims.end(), std::make_pair(n, m)) !=
               e.fixed_dims.end();
    if (e.id == "4.2/2,m") return n == 2 && m >= 5;
    if (e.id == "4.4/3,m-1" || e.id == "4.4/3,m-2") return n == 3 && m >= 5;
    if (e.id == "mu_m_minus_1" || e.id == "mu_m_plus_1") return n == 2 && m >= 4;
    if (e.id == "leibniz_family")
        return n >= 2 && m >= 2 && !family_free_gammas(n, m).empty();
    return false;
}

/// Filter for list_entries; all fields optional.
struct EntryFilter {
    std::optional<AlgKind> kind;
    std::optional<int> n;  ///< with m: restrict to laws/families at these dims
    std::optional<int> m;
    std::optional<std::string> section;
    std::optional<std::string> category;
};

/// Lists catalog entries in registry order.  When dims are given the result
/// contains exactly the classified laws/families present at those dims.
[[nodiscard]] inline std::vector<CatalogEntry> list_entries(const EntryFilter& f = {}) {
    std::vector<CatalogEntry> out;
    for (const auto& e : catalog_entries()) {
        if (f.kind && e.kind != *f.kind) continue;
        if (f.section && e.section != *f.section) continue;
        if (f.category && e.category != *f.category) continue;
        if (f.n || f.m) {
            if (!f.n || !f.m)
                throw std::invalid_argument("dims filter requires both n and m");
            if (!entry_matches_dims(e, *f.n, *f.m)) continue;
        }
        out.push_back(e);
    }
    return out;
}

}  // namespace supergrade
