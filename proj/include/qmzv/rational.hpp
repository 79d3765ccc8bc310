#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "qmzv/errors.hpp"

namespace qmzv {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept canonical: denominator > 0,
/// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    explicit Rational(const BigInt& n) : v_(n) {}
    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p" or "p/q" with optional leading minus; rejects anything else.
    static Rational from_string(std::string_view text);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Multiplicative inverse; throws DivisionByZero on zero.
    Rational inverse() const;

    double to_double() const { return v_.get_d(); }

    /// "p" when integral, "p/q" otherwise.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    const mpq_class& raw() const { return v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// base^e for e >= 0 (0^0 = 1).
Rational pow(const Rational& base, unsigned long e);

/// (-1)^e as a rational.
inline Rational sign_pow(unsigned long e) { return Rational(e % 2 == 0 ? 1 : -1); }

/// Binomial coefficient C(m, k); zero when k > m, error when m < 0.
BigInt binomial(long m, unsigned long k);

} // namespace qmzv
