#pragma once

#include <vector>

#include "qmzv/rational.hpp"

namespace qmzv {

/// Dense univariate polynomial with integer coefficients; coefficient i is
/// the coefficient of x^i and the top coefficient is nonzero (the zero
/// polynomial stores no coefficients).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly x_power_minus_one(unsigned n);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const BigInt& coeff(std::size_t i) const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    IntPoly multiply(const IntPoly& other) const;

    /// Exact quotient; throws std::invalid_argument when the division
    /// leaves a remainder or a coefficient fails to divide.
    IntPoly divide_exact(const IntPoly& divisor) const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

private:
    std::vector<BigInt> c_;
};

/// n-th cyclotomic polynomial (exact integer coefficients), computed by
/// exact division of x^n - 1 by the lower cyclotomic factors and cached
/// for the life of the process.  n = 0 is invalid.
const IntPoly& cyclotomic_polynomial(unsigned n);

/// Euler totient.
unsigned euler_phi(unsigned n);

} // namespace qmzv
