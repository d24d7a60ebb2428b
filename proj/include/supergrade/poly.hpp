#pragma once

/// \file poly.hpp
/// Sparse multivariate polynomials over exact rationals, plus the scalar
/// expression grammar used throughout the library (parser and canonical
/// serializer) and linear-factor extraction for the branch solver.
///
/// Representation invariants:
///  * variable names are sorted and minimal (every variable occurs in a term),
///  * terms are kept in ascending degree-lexicographic order,
///  * no zero coefficients are stored; the zero polynomial has no terms.

#include "rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace supergrade {

/// Exponent vector aligned with a polynomial's sorted variable list.
using Expvec = std::vector<unsigned>;

/// Degree-lexicographic order: total degree first, then lexicographic
/// comparison of exponent vectors (both ascending).
struct DegLexLess {
    bool operator()(const Expvec& a, const Expvec& b) const {
        unsigned da = 0, db = 0;
        for (unsigned e : a) da += e;
        for (unsigned e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

/// Sparse multivariate polynomial with Rational coefficients.
class Poly {
public:
    using TermMap = std::map<Expvec, Rational, DegLexLess>;

    Poly() = default;
    Poly(const Rational& c) { // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_[Expvec{}] = c;
    }
    Poly(long n) : Poly(Rational(n)) {}        // NOLINT(google-explicit-constructor)
    Poly(int n) : Poly(Rational(long(n))) {}   // NOLINT(google-explicit-constructor)

    /// The polynomial consisting of a single variable.
    static Poly variable(const std::string& name) {
        if (!valid_identifier(name))
            throw std::invalid_argument("Poly: invalid variable name '" + name + "'");
        Poly p;
        p.vars_ = {name};
        p.terms_[Expvec{1}] = Rational(1);
        return p;
    }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const { return vars_.empty(); }
    /// Value of a constant polynomial; throws std::domain_error otherwise.
    [[nodiscard]] Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("Poly: not constant");
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }
    [[nodiscard]] const std::vector<std::string>& vars() const { return vars_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

    [[nodiscard]] unsigned total_degree() const {
        if (terms_.empty()) return 0;
        unsigned d = 0;
        for (unsigned e : terms_.rbegin()->first) d += e;
        return d;
    }
    [[nodiscard]] unsigned degree_in(const std::string& var) const {
        auto it = std::find(vars_.begin(), vars_.end(), var);
        if (it == vars_.end()) return 0;
        std::size_t k = std::size_t(it - vars_.begin());
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
        return d;
    }

    /// Deg-lex leading coefficient (of the greatest term); 0 for the zero poly.
    [[nodiscard]] Rational leading_coefficient() const {
        return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
    }

    [[nodiscard]] Poly operator-() const {
        Poly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        TermMap ta, tb;
        align(a, b, r.vars_, ta, tb);
        r.terms_ = std::move(ta);
        for (const auto& [e, c] : tb) {
            auto [it, fresh] = r.terms_.emplace(e, c);
            if (!fresh) it->second += c;
        }
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        if (a.is_zero() || b.is_zero()) return r;
        TermMap ta, tb;
        align(a, b, r.vars_, ta, tb);
        for (const auto& [ea, ca] : ta)
            for (const auto& [eb, cb] : tb) {
                Expvec e(r.vars_.size(), 0);
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                auto [it, fresh] = r.terms_.emplace(std::move(e), ca * cb);
                if (!fresh) it->second += ca * cb;
            }
        r.trim();
        return r;
    }
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    /// Exact division by a nonzero rational constant.
    [[nodiscard]] Poly divided_by(const Rational& c) const {
        if (c.is_zero()) throw std::domain_error("Poly: division by zero");
        Poly r(*this);
        for (auto& [e, v] : r.terms_) v /= c;
        return r;
    }

    [[nodiscard]] Poly pow(unsigned e) const {
        Poly r(1), b(*this);
        while (e > 0) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1u;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    /// Deterministic total order (by canonical string); for use as map keys.
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
        return a.str() < b.str();
    }

    /// Simultaneous substitution of polynomials for variables.
    [[nodiscard]] Poly subst(const std::map<std::string, Poly>& repl) const {
        bool touched = false;
        for (const auto& v : vars_)
            if (repl.count(v)) { touched = true; break; }
        if (!touched) return *this;
        Poly out;
        for (const auto& [e, c] : terms_) {
            Poly term{c};
            for (std::size_t k = 0; k < vars_.size(); ++k) {
                if (e[k] == 0) continue;
                auto it = repl.find(vars_[k]);
                Poly base = (it != repl.end()) ? it->second : variable(vars_[k]);
                term *= base.pow(e[k]);
            }
            out += term;
        }
        return out;
    }

    /// Full evaluation; every variable must be bound.
    [[nodiscard]] Rational eval(const std::map<std::string, Rational>& vals) const {
        Rational out(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t k = 0; k < vars_.size(); ++k) {
                if (e[k] == 0) continue;
                auto it = vals.find(vars_[k]);
                if (it == vals.end())
                    throw std::invalid_argument("Poly::eval: unbound variable '" + vars_[k] + "'");
                t *= it->second.pow(long(e[k]));
            }
            out += t;
        }
        return out;
    }

    /// Coefficient of var^k, as a polynomial in the remaining variables.
    [[nodiscard]] Poly coefficient_of(const std::string& var, unsigned k) const {
        auto it = std::find(vars_.begin(), vars_.end(), var);
        if (it == vars_.end()) return k == 0 ? *this : Poly();
        std::size_t vi = std::size_t(it - vars_.begin());
        Poly out;
        out.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            if (e[vi] != k) continue;
            Expvec f = e;
            f[vi] = 0;
            auto [jt, fresh] = out.terms_.emplace(std::move(f), c);
            if (!fresh) jt->second += c;
        }
        out.trim();
        return out;
    }

    /// Content: positive rational g with p/g having coprime integer
    /// coefficients; 0 for the zero polynomial.
    [[nodiscard]] Rational content() const {
        Rational g(0);
        for (const auto& [e, c] : terms_) g = Rational::gcd(g, c);
        return g;
    }

    /// Primitive part with positive deg-lex leading coefficient (canonical
    /// scalar-free representative); the zero polynomial maps to itself.
    [[nodiscard]] Poly normalized() const {
        if (is_zero()) return *this;
        Rational g = content();
        Poly r = divided_by(g);
        if (r.leading_coefficient().sign() < 0) r = -r;
        return r;
    }

    /// Canonical serialization in the scalar grammar, e.g. "a1*a3 - 2*c",
    /// "b^2 + 1/2", "-3/2", "0".
    [[nodiscard]] std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rational& c = it->second;
            if (first) {
                if (c.sign() < 0) os << '-';
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            std::string mono = monomial_str(it->first);
            Rational a = c.abs();
            if (mono.empty()) {
                os << a.str();
            } else if (a.is_one()) {
                os << mono;
            } else {
                os << a.str() << '*' << mono;
            }
        }
        return os.str();
    }

    /// Parses the scalar grammar:
    ///   expr   := ['+'|'-'] term (('+'|'-') term)*
    ///   term   := factor (('*'|'/') factor)*      ('/' requires constant rhs)
    ///   factor := base ('^' UINT)?
    ///   base   := UINT | IDENT | '(' expr ')'
    /// Identifiers match [A-Za-z][A-Za-z0-9_]*.  Throws std::invalid_argument
    /// on malformed input.
    static Poly parse(const std::string& text) {
        Parser p(text);
        Poly r = p.parse_expr();
        p.skip_ws();
        if (!p.at_end())
            throw std::invalid_argument("Poly::parse: trailing input at position " +
                                        std::to_string(p.pos()) + " in '" + text + "'");
        return r;
    }

    static bool valid_identifier(const std::string& s) {
        if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0]))))
            return false;
        for (char ch : s)
            if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
        return true;
    }

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    std::string monomial_str(const Expvec& e) const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            if (e[k] == 0) continue;
            if (!first) os << '*';
            first = false;
            os << vars_[k];
            if (e[k] >= 2) os << '^' << e[k];
        }
        return os.str();
    }

    /// Re-establishes invariants: removes zero terms and unused variables.
    void trim() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        if (terms_.empty()) { vars_.clear(); return; }
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [e, c] : terms_)
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k] > 0) used[k] = true;
        if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
        std::vector<std::string> nv;
        std::vector<std::size_t> keep;
        for (std::size_t k = 0; k < vars_.size(); ++k)
            if (used[k]) { nv.push_back(vars_[k]); keep.push_back(k); }
        TermMap nt;
        for (const auto& [e, c] : terms_) {
            Expvec f(keep.size());
            for (std::size_t k = 0; k < keep.size(); ++k) f[k] = e[keep[k]];
            nt[std::move(f)] = c;
        }
        vars_ = std::move(nv);
        terms_ = std::move(nt);
    }

    /// Merges two polynomials' variable sets and re-expresses both term maps
    /// over the union (sorted) variable list.
    static void align(const Poly& a, const Poly& b, std::vector<std::string>& vars,
                      TermMap& ta, TermMap& tb) {
        vars.clear();
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                       std::back_inserter(vars));
        ta = remap(a, vars);
        tb = remap(b, vars);
    }

    static TermMap remap(const Poly& p, const std::vector<std::string>& vars) {
        TermMap out;
        std::vector<std::size_t> idx(p.vars_.size());
        for (std::size_t k = 0; k < p.vars_.size(); ++k)
            idx[k] = std::size_t(std::lower_bound(vars.begin(), vars.end(), p.vars_[k]) -
                                 vars.begin());
        for (const auto& [e, c] : p.terms_) {
            Expvec f(vars.size(), 0);
            for (std::size_t k = 0; k < e.size(); ++k) f[idx[k]] = e[k];
            out[std::move(f)] = c;
        }
        return out;
    }

    class Parser {
    public:
        explicit Parser(const std::string& s) : s_(s) {}
        [[nodiscard]] std::size_t pos() const { return i_; }
        [[nodiscard]] bool at_end() const { return i_ >= s_.size(); }
        void skip_ws() {
            while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        }
        Poly parse_expr() {
            skip_ws();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (get() == '-') sign = -1;
            }
            Poly r = parse_term();
            if (sign < 0) r = -r;
            for (;;) {
                skip_ws();
                char c = peek();
                if (c != '+' && c != '-') break;
                get();
                Poly t = parse_term();
                r = (c == '+') ? r + t : r - t;
            }
            return r;
        }

    private:
        const std::string& s_;
        std::size_t i_ = 0;

        [[nodiscard]] char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
        char get() { return i_ < s_.size() ? s_[i_++] : '\0'; }

        Poly parse_term() {
            Poly r = parse_factor();
            for (;;) {
                skip_ws();
                char c = peek();
                if (c != '*' && c != '/') break;
                get();
                Poly f = parse_factor();
                if (c == '*') {
                    r *= f;
                } else {
                    if (!f.is_constant() || f.is_zero())
                        throw std::invalid_argument(
                            "Poly::parse: '/' requires a nonzero constant divisor");
                    r = r.divided_by(f.constant_value());
                }
            }
            return r;
        }

        Poly parse_factor() {
            Poly b = parse_base();
            skip_ws();
            if (peek() == '^') {
                get();
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    throw std::invalid_argument("Poly::parse: '^' requires an integer exponent");
                unsigned e = 0;
                while (std::isdigit(static_cast<unsigned char>(peek())))
                    e = e * 10 + unsigned(get() - '0');
                return b.pow(e);
            }
            return b;
        }

        Poly parse_base() {
            skip_ws();
            char c = peek();
            if (c == '(') {
                get();
                Poly r = parse_expr();
                skip_ws();
                if (get() != ')')
                    throw std::invalid_argument("Poly::parse: expected ')' at position " +
                                                std::to_string(i_));
                return r;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num;
                while (std::isdigit(static_cast<unsigned char>(peek()))) num += get();
                return Poly(Rational::from_string(num));
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string id;
                while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                    id += get();
                return variable(id);
            }
            throw std::invalid_argument("Poly::parse: unexpected character '" +
                                        std::string(1, c) + "' at position " +
                                        std::to_string(i_));
        }
    };
};

/// Result of linear-factor extraction: `factors` are the degree-<=1 pieces in
/// deterministic order (common monomial variables by name, then a linear
/// residual if any); `residual` is a degree->=2 cofactor that could not be
/// split further, if one remains.  Factors are normalized; a repeated factor
/// appears once (f^k = 0 and f = 0 cut out the same set).
struct LinearFactors {
    std::vector<Poly> factors;
    std::optional<Poly> residual;
};

/// Extracts common monomial variable factors and a linear residual from p.
/// Constants yield no factors and no residual.
[[nodiscard]] inline LinearFactors linear_factors(const Poly& p) {
    LinearFactors out;
    if (p.is_constant()) return out;
    // Common monomial part: minimum exponent of each variable across terms.
    const auto& vars = p.vars();
    std::vector<unsigned> minexp(vars.size(), ~0u);
    for (const auto& [e, c] : p.terms())
        for (std::size_t k = 0; k < e.size(); ++k) minexp[k] = std::min(minexp[k], e[k]);
    Poly rem = p;
    bool any = false;
    for (std::size_t k = 0; k < vars.size(); ++k)
        if (minexp[k] > 0) {
            out.factors.push_back(Poly::variable(vars[k]));
            any = true;
        }
    if (any) {
        // Divide out the common monomial by shifting exponents.
        Poly q;
        for (const auto& [e, c] : p.terms()) {
            Poly term{c};
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k] > minexp[k])
                    term *= Poly::variable(vars[k]).pow(e[k] - minexp[k]);
            q += term;
        }
        rem = q;
    }
    if (rem.is_constant()) return out;
    if (rem.total_degree() == 1) {
        out.factors.push_back(rem.normalized());
        return out;
    }
    out.residual = rem.normalized();
    return out;
}

} // namespace supergrade
