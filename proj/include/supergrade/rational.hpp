#pragma once

/// \file rational.hpp
/// Exact rational arithmetic backed by GMP.  A Rational is always stored in
/// reduced form with a positive denominator; zero is canonically 0/1.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace supergrade {

/// Arbitrary-precision rational number with canonical (reduced, positive
/// denominator) representation.  All operations are exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {} // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "p" or "p/q" in base 10 (optional leading '-').  Throws
    /// std::invalid_argument on malformed input or zero denominator.
    static Rational from_string(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty string");
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        q.canonicalize();
        return Rational(std::move(q));
    }

    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_one() const { return v_ == 1; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    /// -1, 0 or +1.
    [[nodiscard]] int sign() const { return sgn(v_); }

    [[nodiscard]] Rational operator-() const { return Rational(mpq_class(-v_)); }
    [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    [[nodiscard]] Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    /// Integer power; negative exponents invert (throw on zero base).
    [[nodiscard]] Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational r(1), b(*this);
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    /// Canonical serialization: "p" for integers, "p/q" otherwise (q > 0).
    [[nodiscard]] std::string str() const { return v_.get_str(); }

    [[nodiscard]] const mpq_class& raw() const { return v_; }
    /// Numerator as Rational (keeps arbitrary precision).
    [[nodiscard]] Rational numerator() const { return Rational(mpq_class(v_.get_num())); }
    [[nodiscard]] Rational denominator() const { return Rational(mpq_class(v_.get_den())); }

    /// Exact conversion to long; throws if not an integer or out of range.
    [[nodiscard]] long to_long() const {
        if (!is_integer()) throw std::domain_error("Rational: not an integer");
        if (!v_.get_num().fits_slong_p()) throw std::domain_error("Rational: out of long range");
        return v_.get_num().get_si();
    }

    /// gcd of two rationals' numerators over lcm-free use: gcd(p1/q1, p2/q2)
    /// = gcd(p1*q2, p2*q1) / (q1*q2), the largest rational dividing both with
    /// integer quotients.  Used for polynomial content computation.
    static Rational gcd(const Rational& a, const Rational& b) {
        if (a.is_zero()) return b.abs();
        if (b.is_zero()) return a.abs();
        mpz_class num, den;
        mpz_gcd(num.get_mpz_t(), a.v_.get_num().get_mpz_t(), b.v_.get_num().get_mpz_t());
        mpz_lcm(den.get_mpz_t(), a.v_.get_den().get_mpz_t(), b.v_.get_den().get_mpz_t());
        Rational r(mpq_class(num, den));
        return r.abs();
    }

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace supergrade

#include <ostream>
namespace supergrade {
inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
} // namespace supergrade
