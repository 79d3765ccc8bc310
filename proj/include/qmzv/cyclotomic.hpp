#pragma once

#include <complex>
#include <vector>

#include "qmzv/int_poly.hpp"
#include "qmzv/rational.hpp"

namespace qmzv {

class CyclotomicElement;

/// Exact arithmetic context for the cyclotomic field of order n >= 2.
/// Elements are written on the canonical power basis 1, z, ..., z^{d-1}
/// (d the degree of the minimal polynomial of a primitive n-th root z),
/// so equality of elements is equality of coefficient vectors.
///
/// Elements keep a pointer to their context; contexts obtained from
/// field_context() live for the whole process, and locally constructed
/// contexts must outlive their elements.
class FieldContext {
public:
    explicit FieldContext(unsigned order);

    unsigned order() const { return order_; }
    unsigned degree() const { return degree_; }
    const IntPoly& modulus() const { return modulus_; }

    CyclotomicElement zero() const;
    CyclotomicElement one() const;
    CyclotomicElement from_rational(const Rational& c) const;

    /// Element with the given power-basis coefficients; longer vectors are
    /// reduced through z^n = 1 and the minimal polynomial.
    CyclotomicElement from_coeffs(const std::vector<Rational>& poly) const;

    /// z^e for any integer exponent (reduced mod n).
    CyclotomicElement root_power(long long e) const;

    /// 1 - z.
    CyclotomicElement one_minus_root() const;

    /// Canonical integer coefficients of z^e for 0 <= e < n.
    const std::vector<BigInt>& root_power_coeffs(unsigned e) const { return root_pow_[e]; }

private:
    unsigned order_ = 0;
    unsigned degree_ = 0;
    IntPoly modulus_;
    std::vector<std::vector<BigInt>> root_pow_;
};

/// Process-wide cache of contexts, one per order; returned references stay
/// valid forever, so elements built on them can be stored freely.
const FieldContext& field_context(unsigned order);

/// Element of a cyclotomic field, canonical coefficient vector of length
/// equal to the field degree.  Default-constructed elements are detached
/// placeholders usable only as assignment targets.
class CyclotomicElement {
public:
    CyclotomicElement() = default;

    const FieldContext& context() const;
    unsigned order() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// True when every coefficient beyond the constant one vanishes.
    bool is_rational() const;
    /// The constant coefficient.
    Rational rational_part() const;

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the minimal polynomial; throws DivisionByZero on zero.
    CyclotomicElement inverse() const;

    /// Numeric value at the primitive root e^{2*pi*i/n}; evaluated in
    /// extended precision internally so that large cancelling coefficients
    /// still produce a correctly rounded double.
    std::complex<double> to_complex() const;

    CyclotomicElement& operator+=(const CyclotomicElement& o);
    CyclotomicElement& operator-=(const CyclotomicElement& o);
    CyclotomicElement& operator*=(const CyclotomicElement& o);
    CyclotomicElement& operator*=(const Rational& c);

    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
    friend CyclotomicElement operator*(CyclotomicElement a, const Rational& c) { return a *= c; }
    friend CyclotomicElement operator*(const Rational& c, CyclotomicElement a) { return a *= c; }
    friend CyclotomicElement operator-(const CyclotomicElement& a);

    /// Canonical equality; elements of different orders are simply unequal.
    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);
    friend bool operator!=(const CyclotomicElement& a, const CyclotomicElement& b) { return !(a == b); }

private:
    friend class FieldContext;
    CyclotomicElement(const FieldContext* ctx, std::vector<Rational> coeffs)
        : ctx_(ctx), coeffs_(std::move(coeffs)) {}

    const FieldContext* ctx_ = nullptr;
    std::vector<Rational> coeffs_;
};

/// base^e for any integer e (negative exponents via the inverse).
CyclotomicElement pow(const CyclotomicElement& base, long e);

} // namespace qmzv
