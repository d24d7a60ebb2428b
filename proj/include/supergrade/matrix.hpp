#pragma once

/// \file matrix.hpp
/// Dense matrices with polynomial entries, exact Gauss-Jordan reduction over
/// the rationals, kernel computation and small determinants.
///
/// Row reduction refuses to guess: if deciding a pivot would require knowing
/// whether a non-constant entry vanishes, it throws ParametricRankError
/// instead of silently assuming genericity.

#include "poly.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace supergrade {

/// Raised when a rank decision depends on parameter values.
class ParametricRankError : public std::runtime_error {
public:
    ParametricRankError(std::size_t row, std::size_t col, const std::string& entry)
        : std::runtime_error("parametric rank: pivot decision at row " + std::to_string(row) +
                             ", column " + std::to_string(col) +
                             " depends on parameters (entry '" + entry + "')"),
          row_(row), col_(col) {}
    [[nodiscard]] std::size_t row() const { return row_; }
    [[nodiscard]] std::size_t col() const { return col_; }

private:
    std::size_t row_, col_;
};

/// Dense rows x cols matrix of Poly entries (rational scalars are the
/// variable-free case).
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static MatrixQ identity(std::size_t n) {
        MatrixQ m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly(1);
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] Poly& at(std::size_t r, std::size_t c) { return e_.at(r * cols_ + c); }
    [[nodiscard]] const Poly& at(std::size_t r, std::size_t c) const {
        return e_.at(r * cols_ + c);
    }

    [[nodiscard]] bool is_constant() const {
        for (const auto& p : e_)
            if (!p.is_constant()) return false;
        return true;
    }
    [[nodiscard]] bool is_zero() const {
        for (const auto& p : e_)
            if (!p.is_zero()) return false;
        return true;
    }

    friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    [[nodiscard]] MatrixQ transpose() const {
        MatrixQ t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("MatrixQ: shape mismatch in product");
        MatrixQ r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
                }
            }
        return r;
    }
    friend MatrixQ operator-(const MatrixQ& a, const MatrixQ& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("MatrixQ: shape mismatch in difference");
        MatrixQ r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    [[nodiscard]] MatrixQ scaled(const Poly& s) const {
        MatrixQ r = *this;
        for (auto& p : r.e_) p *= s;
        return r;
    }

    void append_row(const std::vector<Poly>& row) {
        if (rows_ == 0 && cols_ == 0) cols_ = row.size();
        if (row.size() != cols_) throw std::invalid_argument("MatrixQ: bad row length");
        e_.insert(e_.end(), row.begin(), row.end());
        ++rows_;
    }
    [[nodiscard]] std::vector<Poly> row(std::size_t r) const {
        return {e_.begin() + long(r * cols_), e_.begin() + long((r + 1) * cols_)};
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Poly> e_;
};

/// Result of exact Gauss-Jordan reduction.
struct RowReduced {
    MatrixQ rref;                     ///< reduced row-echelon form
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
    std::size_t rank = 0;
};

/// Reduced row-echelon form over the rationals.  Pivots must be decidable:
/// a column whose unresolved nonzero entries are all non-constant raises
/// ParametricRankError.  Non-constant entries are still eliminated exactly
/// once a constant pivot is available in their column.
[[nodiscard]] inline RowReduced row_reduce(MatrixQ m) {
    RowReduced out;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = m.rows();
        bool saw_parametric = false;
        std::size_t prow = 0;
        for (std::size_t i = r; i < m.rows(); ++i) {
            const Poly& p = m.at(i, col);
            if (p.is_zero()) continue;
            if (p.is_constant()) { pivot = i; break; }
            if (!saw_parametric) { saw_parametric = true; prow = i; }
        }
        if (pivot == m.rows()) {
            if (saw_parametric) throw ParametricRankError(prow, col, m.at(prow, col).str());
            continue;
        }
        if (pivot != r)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(r, c));
        Rational inv = m.at(r, col).constant_value().inverse();
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m.at(r, c).is_zero()) m.at(r, c) = m.at(r, c) * Poly(inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, col).is_zero()) continue;
            Poly f = m.at(i, col);
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!m.at(r, c).is_zero()) m.at(i, c) -= f * m.at(r, c);
        }
        out.pivots.push_back(col);
        ++r;
    }
    out.rank = r;
    out.rref = std::move(m);
    return out;
}

/// Basis of the right kernel {x : M x = 0}, one basis vector per row of the
/// result (cols(M) coordinates each, canonical RREF-based form).
[[nodiscard]] inline MatrixQ kernel(const MatrixQ& m) {
    RowReduced rr = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    MatrixQ out(0, m.cols());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Poly> v(m.cols());
        v[f] = Poly(1);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            v[rr.pivots[i]] = -rr.rref.at(i, f);
        out.append_row(v);
    }
    return out;
}

/// Inverse of a square matrix with constant entries, via RREF on [M | I].
/// Throws std::domain_error if singular, ParametricRankError if parametric.
[[nodiscard]] inline MatrixQ inverse(const MatrixQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    std::size_t n = m.rows();
    MatrixQ aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = Poly(1);
    }
    RowReduced rr = row_reduce(aug);
    for (std::size_t r = 0; r < n; ++r)
        if (rr.pivots.size() <= r || rr.pivots[r] != r)
            throw std::domain_error("inverse: matrix is singular");
    MatrixQ inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = rr.rref.at(r, n + c);
    return inv;
}

/// Determinant by memoized expansion over column subsets.  Intended for the
/// small blocks used in homomorphism searches; throws for n > 16.
[[nodiscard]] inline Poly det(const MatrixQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    std::size_t n = m.rows();
    if (n == 0) return Poly(1);
    if (n > 16) throw std::invalid_argument("det: dimension too large");
    std::map<unsigned long, Poly> memo;
    // det over rows [popcount(mask)..n) and the columns NOT in mask.
    auto rec = [&](auto&& self, unsigned long mask, std::size_t row) -> Poly {
        if (row == n) return Poly(1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        Poly d;
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (mask & (1ul << c)) continue;
            if (!m.at(row, c).is_zero()) {
                Poly sub = self(self, mask | (1ul << c), row + 1);
                Poly term = m.at(row, c) * sub;
                d = (sign > 0) ? d + term : d - term;
            }
            sign = -sign;
        }
        memo.emplace(mask, d);
        return d;
    };
    return rec(rec, 0ul, 0);
}

} // namespace supergrade
