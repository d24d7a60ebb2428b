#pragma once

/// \file superalgebra.hpp
/// Finite-dimensional super (Z/2-graded) algebras with exact polynomial
/// structure constants, the graded identity checkers (super skew-symmetry,
/// super Jacobi, super Leibniz), right-multiplication operator calculus,
/// subspaces, linear maps and homomorphism verification.
///
/// Conventions (fixed throughout the library):
///  * super skew-symmetry      [x,y] = -(-1)^{|x||y|} [y,x]
///  * super Jacobi             (-1)^{|z||x|}[x,[y,z]] + (-1)^{|x||y|}[y,[z,x]]
///                             + (-1)^{|y||z|}[z,[x,y]] = 0
///  * super Leibniz (right)    [x,[y,z]] = [[x,y],z] - (-1)^{|y||z|} [[x,z],y]
///  * right multiplication     R_b(x) = [x,b],  R_{[a,b]} = <R_b, R_a> where
///                             <A,B> = AB - (-1)^{|A||B|} BA
///
/// Lie-kind algebras store only canonical ordered pairs ((X_i,X_j) with i<j,
/// (X_i,Y_j), (Y_i,Y_j) with i<=j); the mirrored products are derived from
/// super skew-symmetry.  Leibniz-kind algebras store every ordered pair
/// explicitly.

#include "matrix.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace supergrade {

/// Structural kind: governs product storage and which identity `check` runs.
enum class AlgKind { lie, leibniz };

[[nodiscard]] inline std::string kind_name(AlgKind k) {
    return k == AlgKind::lie ? "lie" : "leibniz";
}
[[nodiscard]] inline AlgKind kind_from_name(const std::string& s) {
    if (s == "lie") return AlgKind::lie;
    if (s == "leibniz") return AlgKind::leibniz;
    throw std::invalid_argument("unknown algebra kind '" + s + "'");
}

/// Homogeneous basis vector handle: parity 0 (even) or 1 (odd) plus position
/// in the respective basis list.
struct Bv {
    int parity = 0;
    int index = 0;
    friend bool operator==(const Bv&, const Bv&) = default;
    friend bool operator<(const Bv& a, const Bv& b) {
        return a.parity != b.parity ? a.parity < b.parity : a.index < b.index;
    }
};

/// Sparse vector in the algebra: basis vector -> polynomial coefficient.
using Vec = std::map<Bv, Poly>;

inline void vec_trim(Vec& v) {
    for (auto it = v.begin(); it != v.end();)
        it = it->second.is_zero() ? v.erase(it) : std::next(it);
}
[[nodiscard]] inline bool vec_is_zero(const Vec& v) {
    for (const auto& [b, c] : v)
        if (!c.is_zero()) return false;
    return true;
}
inline void vec_add_scaled(Vec& into, const Vec& v, const Poly& s) {
    if (s.is_zero()) return;
    for (const auto& [b, c] : v) {
        auto [it, fresh] = into.emplace(b, c * s);
        if (!fresh) it->second += c * s;
    }
    vec_trim(into);
}
[[nodiscard]] inline Vec vec_neg(Vec v) {
    for (auto& [b, c] : v) c = -c;
    return v;
}
[[nodiscard]] inline Vec vec_sub(Vec a, const Vec& b) {
    vec_add_scaled(a, b, Poly(-1));
    return a;
}
/// True when every nonzero coordinate has the given parity.
[[nodiscard]] inline bool vec_has_parity(const Vec& v, int parity) {
    for (const auto& [b, c] : v)
        if (!c.is_zero() && b.parity != parity) return false;
    return true;
}

/// A single failure of a graded identity on a basis triple, carrying both
/// sides and their difference for diagnostics.
struct Violation {
    Bv x, y, z;
    Vec lhs, rhs, diff;
};

/// Outcome of an identity check: empty `violations` means the identity holds.
struct IdentityReport {
    std::vector<Violation> violations;
    [[nodiscard]] bool holds() const { return violations.empty(); }
};

/// Finite-dimensional superalgebra with named homogeneous basis and exact
/// polynomial structure constants.
class SuperAlgebra {
public:
    SuperAlgebra() = default;
    SuperAlgebra(std::string name, AlgKind kind, std::vector<std::string> even_basis,
                 std::vector<std::string> odd_basis)
        : name_(std::move(name)), kind_(kind), even_(std::move(even_basis)),
          odd_(std::move(odd_basis)) {
        std::set<std::string> seen;
        for (const auto& lists : {&even_, &odd_})
            for (const auto& n : *lists) {
                if (!Poly::valid_identifier(n))
                    throw std::invalid_argument("SuperAlgebra: invalid basis name '" + n + "'");
                if (!seen.insert(n).second)
                    throw std::invalid_argument("SuperAlgebra: duplicate basis name '" + n + "'");
            }
    }

    [[nodiscard]] const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    [[nodiscard]] AlgKind kind() const { return kind_; }
    [[nodiscard]] std::size_t dim_even() const { return even_.size(); }
    [[nodiscard]] std::size_t dim_odd() const { return odd_.size(); }
    [[nodiscard]] std::size_t dim() const { return even_.size() + odd_.size(); }
    [[nodiscard]] const std::vector<std::string>& even_basis() const { return even_; }
    [[nodiscard]] const std::vector<std::string>& odd_basis() const { return odd_; }

    [[nodiscard]] std::string basis_name(Bv b) const {
        const auto& list = b.parity == 0 ? even_ : odd_;
        return list.at(std::size_t(b.index));
    }
    /// Resolves a basis name; throws std::invalid_argument if unknown.
    [[nodiscard]] Bv basis_by_name(const std::string& n) const {
        for (std::size_t i = 0; i < even_.size(); ++i)
            if (even_[i] == n) return Bv{0, int(i)};
        for (std::size_t i = 0; i < odd_.size(); ++i)
            if (odd_[i] == n) return Bv{1, int(i)};
        throw std::invalid_argument("SuperAlgebra: no basis vector named '" + n + "'");
    }
    /// All basis handles, even part first.
    [[nodiscard]] std::vector<Bv> basis() const {
        std::vector<Bv> out;
        for (std::size_t i = 0; i < even_.size(); ++i) out.push_back(Bv{0, int(i)});
        for (std::size_t i = 0; i < odd_.size(); ++i) out.push_back(Bv{1, int(i)});
        return out;
    }

    /// Stores [a,b] = v.  For lie kind the pair must be canonical: (X_i,X_j)
    /// with i<j, (X_i,Y_j), or (Y_i,Y_j) with i<=j; mirrors are derived.
    /// The result must be homogeneous of parity |a|+|b|.
    void set_product(Bv a, Bv b, Vec v) {
        validate_bv(a);
        validate_bv(b);
        if (kind_ == AlgKind::lie && !is_canonical_pair(a, b))
            throw std::invalid_argument(
                "SuperAlgebra: non-canonical product pair for lie kind ([" + basis_name(a) +
                "," + basis_name(b) + "]); store the canonically ordered pair instead");
        vec_trim(v);
        int want = (a.parity + b.parity) % 2;
        for (const auto& [bvv, c] : v) {
            validate_bv(bvv);
            if (bvv.parity != want)
                throw std::invalid_argument("SuperAlgebra: product [" + basis_name(a) + "," +
                                            basis_name(b) + "] is not homogeneous of parity " +
                                            std::to_string(want));
        }
        if (v.empty())
            products_.erase({a, b});
        else
            products_[{a, b}] = std::move(v);
    }

    /// The stored product table (canonical pairs only for lie kind).
    [[nodiscard]] const std::map<std::pair<Bv, Bv>, Vec>& stored_products() const {
        return products_;
    }

    /// Product of two basis vectors with mirror resolution for lie kind.
    [[nodiscard]] Vec product_basis(Bv a, Bv b) const {
        if (kind_ == AlgKind::leibniz) return lookup(a, b);
        if (a.parity == 0 && b.parity == 0) {
            if (a.index == b.index) return {};
            if (a.index < b.index) return lookup(a, b);
            return vec_neg(lookup(b, a));
        }
        if (a.parity == 0) return lookup(a, b);           // (X,Y) canonical
        if (b.parity == 0) return vec_neg(lookup(b, a));  // (Y,X) = -(X,Y)
        if (a.index <= b.index) return lookup(a, b);
        return lookup(b, a);  // odd-odd is graded symmetric
    }

    /// Bilinear extension of the product.
    [[nodiscard]] Vec product(const Vec& u, const Vec& v) const {
        Vec out;
        for (const auto& [a, ca] : u)
            for (const auto& [b, cb] : v) vec_add_scaled(out, product_basis(a, b), ca * cb);
        return out;
    }

    /// Sorted list of all parameter names appearing in structure constants.
    [[nodiscard]] std::vector<std::string> parameters() const {
        std::set<std::string> s;
        for (const auto& [key, v] : products_)
            for (const auto& [b, c] : v)
                for (const auto& n : c.vars()) s.insert(n);
        return {s.begin(), s.end()};
    }
    [[nodiscard]] bool is_parameter_free() const { return parameters().empty(); }

    /// Substitutes polynomials for parameters in every structure constant.
    [[nodiscard]] SuperAlgebra subst_params(const std::map<std::string, Poly>& repl) const {
        SuperAlgebra out(name_, kind_, even_, odd_);
        for (const auto& [key, v] : products_) {
            Vec w;
            for (const auto& [b, c] : v) w[b] = c.subst(repl);
            out.set_product(key.first, key.second, std::move(w));
        }
        return out;
    }

    /// Renders a vector like "2*X3 - Y1" using this algebra's basis names.
    [[nodiscard]] std::string vec_str(const Vec& v) const {
        if (vec_is_zero(v)) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [b, c] : v) {
            if (c.is_zero()) continue;
            std::string cs = c.str();
            bool negated = cs.size() > 1 && cs[0] == '-';
            if (first) {
                if (negated) { os << '-'; cs = cs.substr(1); }
                first = false;
            } else if (negated) {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
            if (cs == "1")
                os << basis_name(b);
            else if (c.is_constant() || c.term_count() == 1)
                os << cs << '*' << basis_name(b);
            else
                os << '(' << cs << ")*" << basis_name(b);
        }
        return os.str();
    }

    friend bool operator==(const SuperAlgebra& a, const SuperAlgebra& b) {
        return a.kind_ == b.kind_ && a.even_ == b.even_ && a.odd_ == b.odd_ &&
               a.products_ == b.products_;
    }

private:
    std::string name_;
    AlgKind kind_ = AlgKind::lie;
    std::vector<std::string> even_, odd_;
    std::map<std::pair<Bv, Bv>, Vec> products_;

    void validate_bv(Bv b) const {
        const auto& list = b.parity == 0 ? even_ : odd_;
        if (b.parity < 0 || b.parity > 1 || b.index < 0 || std::size_t(b.index) >= list.size())
            throw std::invalid_argument("SuperAlgebra: basis handle out of range");
    }
    [[nodiscard]] static bool is_canonical_pair(Bv a, Bv b) {
        if (a.parity == 0 && b.parity == 0) return a.index < b.index;
        if (a.parity == 0 && b.parity == 1) return true;
        if (a.parity == 1 && b.parity == 0) return false;
        return a.index <= b.index;
    }
    [[nodiscard]] Vec lookup(Bv a, Bv b) const {
        auto it = products_.find({a, b});
        return it == products_.end() ? Vec{} : it->second;
    }
};

/// Super Jacobi check over all ordered basis triples; the `diff` of each
/// violation is the full graded Jacobi sum (lhs = sum, rhs = 0).
[[nodiscard]] inline IdentityReport check_super_jacobi(const SuperAlgebra& g) {
    IdentityReport rep;
    auto bs = g.basis();
    for (Bv x : bs)
        for (Bv y : bs)
            for (Bv z : bs) {
                int sx = ((z.parity * x.parity) % 2 == 0) ? 1 : -1;
                int sy = ((x.parity * y.parity) % 2 == 0) ? 1 : -1;
                int sz = ((y.parity * z.parity) % 2 == 0) ? 1 : -1;
                Vec sum;
                vec_add_scaled(sum, g.product(Vec{{x, Poly(1)}}, g.product_basis(y, z)),
                               Poly(sx));
                vec_add_scaled(sum, g.product(Vec{{y, Poly(1)}}, g.product_basis(z, x)),
                               Poly(sy));
                vec_add_scaled(sum, g.product(Vec{{z, Poly(1)}}, g.product_basis(x, y)),
                               Poly(sz));
                if (!vec_is_zero(sum)) rep.violations.push_back({x, y, z, sum, Vec{}, sum});
            }
    return rep;
}

/// Super Leibniz check over all ordered basis triples:
/// lhs = [x,[y,z]], rhs = [[x,y],z] - (-1)^{|y||z|}[[x,z],y].
[[nodiscard]] inline IdentityReport check_super_leibniz(const SuperAlgebra& g) {
    IdentityReport rep;
    auto bs = g.basis();
    for (Bv x : bs)
        for (Bv y : bs)
            for (Bv z : bs) {
                Vec lhs = g.product(Vec{{x, Poly(1)}}, g.product_basis(y, z));
                Vec rhs = g.product(g.product_basis(x, y), Vec{{z, Poly(1)}});
                int sgn = ((y.parity * z.parity) % 2 == 0) ? 1 : -1;
                vec_add_scaled(rhs, g.product(g.product_basis(x, z), Vec{{y, Poly(1)}}),
                               Poly(-sgn));
                Vec diff = vec_sub(lhs, rhs);
                if (!vec_is_zero(diff)) rep.violations.push_back({x, y, z, lhs, rhs, diff});
            }
    return rep;
}

/// Runs the identity appropriate to the algebra's kind.
[[nodiscard]] inline IdentityReport check_identity(const SuperAlgebra& g) {
    return g.kind() == AlgKind::lie ? check_super_jacobi(g) : check_super_leibniz(g);
}

/// True when the product is super skew-symmetric AND super Jacobi holds,
/// regardless of storage kind (a Leibniz-kind table can qualify).
[[nodiscard]] inline bool is_lie_superalgebra(const SuperAlgebra& g) {
    auto bs = g.basis();
    for (Bv a : bs)
        for (Bv b : bs) {
            int sgn = ((a.parity * b.parity) % 2 == 0) ? 1 : -1;
            Vec s = g.product_basis(a, b);
            vec_add_scaled(s, g.product_basis(b, a), Poly(sgn));
            if (!vec_is_zero(s)) return false;
        }
    return check_super_jacobi(g).holds();
}

/// Parity-graded subspace of a fixed superalgebra ambient space, kept in
/// reduced row-echelon form per parity for canonical comparisons.
class Subspace {
public:
    Subspace(std::size_t dim_even, std::size_t dim_odd)
        : ne_(dim_even), no_(dim_odd), even_(0, dim_even), odd_(0, dim_odd) {}

    static Subspace full(std::size_t ne, std::size_t no) {
        Subspace s(ne, no);
        s.even_ = MatrixQ::identity(ne);
        s.odd_ = MatrixQ::identity(no);
        return s;
    }

    [[nodiscard]] std::size_t dim_even() const { return even_.rows(); }
    [[nodiscard]] std::size_t dim_odd() const { return odd_.rows(); }
    [[nodiscard]] std::size_t dim() const { return dim_even() + dim_odd(); }
    [[nodiscard]] bool is_zero() const { return dim() == 0; }
    [[nodiscard]] const MatrixQ& even_rows() const { return even_; }
    [[nodiscard]] const MatrixQ& odd_rows() const { return odd_; }

    /// Adds a homogeneous vector to the span; returns true if the dimension
    /// grew.  The vector must be parameter-free and parity-pure.
    bool extend(const Vec& v) {
        if (vec_is_zero(v)) return false;
        int parity = v.begin()->first.parity;
        if (!vec_has_parity(v, parity))
            throw std::invalid_argument("Subspace::extend: vector mixes parities");
        MatrixQ& block = parity == 0 ? even_ : odd_;
        std::size_t ncols = parity == 0 ? ne_ : no_;
        std::vector<Poly> row(ncols);
        for (const auto& [b, c] : v) {
            if (!c.is_constant())
                throw std::invalid_argument("Subspace::extend: parametric coefficient");
            row.at(std::size_t(b.index)) = c;
        }
        MatrixQ trial = block;
        trial.append_row(row);
        RowReduced rr = row_reduce(trial);
        if (rr.rank == block.rows()) return false;
        MatrixQ nb(0, ncols);
        for (std::size_t r = 0; r < rr.rank; ++r) nb.append_row(rr.rref.row(r));
        block = std::move(nb);
        return true;
    }

    /// Membership test for a parameter-free vector (possibly mixed-parity:
    /// both parity components must lie in the span).
    [[nodiscard]] bool contains(const Vec& v) const {
        for (int parity : {0, 1}) {
            const MatrixQ& block = parity == 0 ? even_ : odd_;
            std::size_t ncols = parity == 0 ? ne_ : no_;
            std::vector<Poly> row(ncols);
            bool any = false;
            for (const auto& [b, c] : v)
                if (b.parity == parity && !c.is_zero()) {
                    row.at(std::size_t(b.index)) = c;
                    any = true;
                }
            if (!any) continue;
            MatrixQ trial = block;
            trial.append_row(row);
            if (row_reduce(trial).rank != block.rows()) return false;
        }
        return true;
    }

    [[nodiscard]] bool contains(const Subspace& other) const {
        for (int parity : {0, 1}) {
            const MatrixQ& rows = parity == 0 ? other.even_ : other.odd_;
            for (std::size_t r = 0; r < rows.rows(); ++r) {
                Vec v;
                for (std::size_t c = 0; c < rows.cols(); ++c)
                    if (!rows.at(r, c).is_zero()) v[Bv{parity, int(c)}] = rows.at(r, c);
                if (!contains(v)) return false;
            }
        }
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ne_ == b.ne_ && a.no_ == b.no_ && a.even_ == b.even_ && a.odd_ == b.odd_;
    }

    /// Rows of the given parity as sparse vectors.
    [[nodiscard]] std::vector<Vec> vectors(int parity) const {
        const MatrixQ& rows = parity == 0 ? even_ : odd_;
        std::vector<Vec> out;
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            Vec v;
            for (std::size_t c = 0; c < rows.cols(); ++c)
                if (!rows.at(r, c).is_zero()) v[Bv{parity, int(c)}] = rows.at(r, c);
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    std::size_t ne_, no_;
    MatrixQ even_, odd_;
};

/// Right annihilator Ann(L) = {x : [b,x] = 0 for every b}.  The solution
/// space is always parity-graded, so it is computed per parity.  Requires a
/// parameter-free algebra.
[[nodiscard]] inline Subspace right_annihilator(const SuperAlgebra& g) {
    if (!g.is_parameter_free())
        throw std::invalid_argument("right_annihilator: algebra has free parameters");
    Subspace out(g.dim_even(), g.dim_odd());
    auto bs = g.basis();
    for (int parity : {0, 1}) {
        std::size_t n = parity == 0 ? g.dim_even() : g.dim_odd();
        if (n == 0) continue;
        // rows: one per (left basis vector, output coordinate); cols: x coords
        MatrixQ m(0, n);
        for (Bv b : bs) {
            std::vector<Vec> cols;
            for (std::size_t j = 0; j < n; ++j)
                cols.push_back(g.product_basis(b, Bv{parity, int(j)}));
            for (Bv out_coord : bs) {
                std::vector<Poly> row(n);
                bool nonzero = false;
                for (std::size_t j = 0; j < n; ++j) {
                    auto it = cols[j].find(out_coord);
                    if (it != cols[j].end() && !it->second.is_zero()) {
                        row[j] = it->second;
                        nonzero = true;
                    }
                }
                if (nonzero) m.append_row(row);
            }
        }
        MatrixQ k = m.rows() == 0 ? MatrixQ::identity(n) : kernel(m);
        for (std::size_t r = 0; r < k.rows(); ++r) {
            Vec v;
            for (std::size_t c = 0; c < k.cols(); ++c)
                if (!k.at(r, c).is_zero()) v[Bv{parity, int(c)}] = k.at(r, c);
            out.extend(v);
        }
    }
    return out;
}

/// The two-sided ideal I generated by all graded skew defects
/// [a,b] + (-1)^{|a||b|}[b,a]; zero for genuinely super skew products.
[[nodiscard]] inline Subspace skew_ideal(const SuperAlgebra& g) {
    if (!g.is_parameter_free())
        throw std::invalid_argument("skew_ideal: algebra has free parameters");
    Subspace s(g.dim_even(), g.dim_odd());
    auto bs = g.basis();
    for (Bv a : bs)
        for (Bv b : bs) {
            int sgn = ((a.parity * b.parity) % 2 == 0) ? 1 : -1;
            Vec v = g.product_basis(a, b);
            vec_add_scaled(v, g.product_basis(b, a), Poly(sgn));
            s.extend(v);
        }
    // close under multiplication on both sides
    bool changed = true;
    while (changed) {
        changed = false;
        for (int parity : {0, 1})
            for (const Vec& v : s.vectors(parity))
                for (Bv e : bs) {
                    if (s.extend(g.product(v, Vec{{e, Poly(1)}}))) changed = true;
                    if (s.extend(g.product(Vec{{e, Poly(1)}}, v))) changed = true;
                }
    }
    return s;
}

/// Linear parity-preserving map between superalgebras, stored as one block
/// per parity; row r of a block holds the coordinates of the image of the
/// r-th source basis vector in the target basis.
struct LinearMap {
    SuperAlgebra source, target;
    MatrixQ even_block, odd_block;

    [[nodiscard]] Vec apply(const Vec& v) const {
        Vec out;
        for (const auto& [b, c] : v) {
            const MatrixQ& block = b.parity == 0 ? even_block : odd_block;
            for (std::size_t j = 0; j < block.cols(); ++j)
                if (!block.at(std::size_t(b.index), j).is_zero()) {
                    Poly add = c * block.at(std::size_t(b.index), j);
                    auto [it, fresh] = out.emplace(Bv{b.parity, int(j)}, add);
                    if (!fresh) it->second += add;
                }
        }
        vec_trim(out);
        return out;
    }

    /// Identity map on an algebra (to itself or a same-shaped target).
    static LinearMap identity(const SuperAlgebra& src, const SuperAlgebra& tgt) {
        if (src.dim_even() != tgt.dim_even() || src.dim_odd() != tgt.dim_odd())
            throw std::invalid_argument("LinearMap::identity: dimension mismatch");
        return LinearMap{src, tgt, MatrixQ::identity(src.dim_even()),
                         MatrixQ::identity(src.dim_odd())};
    }
};

/// One failed pair in a homomorphism check.
struct HomViolation {
    Bv a, b;
    Vec lhs;  ///< f([a,b]_source)
    Vec rhs;  ///< [f(a),f(b)]_target
    Vec diff;
};

/// Result of verify_homomorphism: product compatibility over all ordered
/// basis pairs plus block invertibility (decided only for parameter-free
/// blocks of square shape).
struct HomReport {
    std::vector<HomViolation> violations;
    bool invertibility_decided = false;
    bool even_invertible = false;
    bool odd_invertible = false;
    [[nodiscard]] bool holds() const { return violations.empty(); }
    [[nodiscard]] bool is_isomorphism() const {
        return holds() && invertibility_decided && even_invertible && odd_invertible;
    }
};

[[nodiscard]] inline HomReport verify_homomorphism(const LinearMap& f) {
    HomReport rep;
    auto bs = f.source.basis();
    for (Bv a : bs)
        for (Bv b : bs) {
            Vec lhs = f.apply(f.source.product_basis(a, b));
            Vec rhs = f.target.product(f.apply(Vec{{a, Poly(1)}}), f.apply(Vec{{b, Poly(1)}}));
            Vec diff = vec_sub(lhs, rhs);
            if (!vec_is_zero(diff)) rep.violations.push_back({a, b, lhs, rhs, diff});
        }
    bool square = f.even_block.rows() == f.even_block.cols() &&
                  f.odd_block.rows() == f.odd_block.cols();
    if (square && f.even_block.is_constant() && f.odd_block.is_constant()) {
        rep.invertibility_decided = true;
        rep.even_invertible = row_reduce(f.even_block).rank == f.even_block.rows();
        rep.odd_invertible = row_reduce(f.odd_block).rank == f.odd_block.rows();
    }
    return rep;
}

/// Failure records for the right-multiplication operator calculus.
struct RightMultPairFailure {
    Bv a, b;  ///< R_{[a,b]} != <R_b, R_a>
};
struct RightMultTripleFailure {
    Bv a, b, c;  ///< graded Jacobi fails on (R_a, R_b, R_c)
};
struct RightMultReport {
    std::vector<RightMultPairFailure> bracket_failures;
    std::vector<RightMultTripleFailure> jacobi_failures;
    [[nodiscard]] bool closed() const {
        return bracket_failures.empty() && jacobi_failures.empty();
    }
};

/// Verifies that right multiplications close under the graded operator
/// bracket according to R_{[a,b]} = <R_b, R_a> and that the graded Jacobi
/// identity holds for <.,.> on all operator triples.  Precondition: the
/// super Leibniz identity holds (throws std::logic_error otherwise).
[[nodiscard]] inline RightMultReport right_mult_closure(const SuperAlgebra& g) {
    if (!check_super_leibniz(g).holds())
        throw std::logic_error(
            "right_mult_closure precondition: the super Leibniz identity fails for '" +
            g.name() + "'");
    auto bs = g.basis();
    std::size_t N = bs.size();
    auto coord = [&](Bv b) -> std::size_t {
        return b.parity == 0 ? std::size_t(b.index) : g.dim_even() + std::size_t(b.index);
    };
    // M[b] = matrix of R_b acting on column coordinate vectors.
    std::vector<MatrixQ> M;
    for (Bv b : bs) {
        MatrixQ m(N, N);
        for (Bv e : bs) {
            Vec w = g.product_basis(e, b);
            for (const auto& [o, c] : w) m.at(coord(o), coord(e)) = c;
        }
        M.push_back(std::move(m));
    }
    // <A,B> = AB - (-1)^{|A||B|} BA
    auto bracket = [&](const MatrixQ& A, int pa, const MatrixQ& B, int pb) {
        MatrixQ ab = A * B;
        MatrixQ ba = B * A;
        return ((pa * pb) % 2 == 0) ? ab - ba : ab - ba.scaled(Poly(-1));
    };
    RightMultReport rep;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            Vec ab = g.product_basis(bs[i], bs[j]);
            MatrixQ lhs(N, N);  // R_{[a,b]} extended linearly over the coordinates of [a,b]
            for (const auto& [e, c] : ab) lhs = lhs - M[coord(e)].scaled(-c);
            MatrixQ rhs = bracket(M[j], bs[j].parity, M[i], bs[i].parity);
            if (!(lhs - rhs).is_zero()) rep.bracket_failures.push_back({bs[i], bs[j]});
        }
    // cache pairwise operator brackets
    std::vector<std::vector<MatrixQ>> pair(N, std::vector<MatrixQ>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            pair[i][j] = bracket(M[i], bs[i].parity, M[j], bs[j].parity);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t k = 0; k < N; ++k) {
                int pi = bs[i].parity, pj = bs[j].parity, pk = bs[k].parity;
                MatrixQ t1 = bracket(M[i], pi, pair[j][k], (pj + pk) % 2);
                MatrixQ t2 = bracket(M[j], pj, pair[k][i], (pk + pi) % 2);
                MatrixQ t3 = bracket(M[k], pk, pair[i][j], (pi + pj) % 2);
                MatrixQ sum = t1.scaled(Poly(((pk * pi) % 2 == 0) ? 1 : -1));
                sum = sum - t2.scaled(Poly(((pi * pj) % 2 == 0) ? -1 : 1));
                sum = sum - t3.scaled(Poly(((pj * pk) % 2 == 0) ? -1 : 1));
                if (!sum.is_zero()) rep.jacobi_failures.push_back({bs[i], bs[j], bs[k]});
            }
    return rep;
}

} // namespace supergrade
