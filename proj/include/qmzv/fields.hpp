#pragma once

#include <complex>
#include <concepts>
#include <vector>

#include "qmzv/cyclotomic.hpp"
#include "qmzv/errors.hpp"

namespace qmzv {

/// The nested-sum engine is generic over an evaluation point q in a field.
/// An implementation provides exact (or floating) ring operations plus the
/// q-specific helpers:
///   q_power(e)       q^e for any integer e
///   q_integer(k)     [k]_q = 1 + q + ... + q^{k-1}, by direct summation
///   inv_q_integer(k) [k]_q^{-1}, memoized; throws SingularEvaluation when
///                    [k]_q vanishes at the point
template <typename F>
concept EvalField = requires(const F& f, const typename F::Element& a, long long e, long k) {
    typename F::Element;
    { f.zero() } -> std::same_as<typename F::Element>;
    { f.one() } -> std::same_as<typename F::Element>;
    { f.from_integer(e) } -> std::same_as<typename F::Element>;
    { f.add(a, a) } -> std::same_as<typename F::Element>;
    { f.sub(a, a) } -> std::same_as<typename F::Element>;
    { f.mul(a, a) } -> std::same_as<typename F::Element>;
    { f.invert(a) } -> std::same_as<typename F::Element>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.q_power(e) } -> std::same_as<typename F::Element>;
    { f.q_integer(k) } -> std::same_as<typename F::Element>;
    { f.inv_q_integer(k) } -> std::same_as<typename F::Element>;
};

/// Exact rational evaluation point.
class RationalPoint {
public:
    using Element = Rational;

    explicit RationalPoint(Rational q) : q_(std::move(q)) {}

    Element zero() const { return Rational(); }
    Element one() const { return Rational(1); }
    Element from_integer(long long v) const { return Rational(BigInt(static_cast<long>(v))); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element invert(const Element& a) const { return a.inverse(); }
    bool is_zero(const Element& a) const { return a.is_zero(); }

    Element q_power(long long e) const;
    Element q_integer(long k) const;
    Element inv_q_integer(long k) const;

    const Rational& q() const { return q_; }

private:
    void extend_tables(long k) const;

    Rational q_;
    mutable std::vector<Rational> qint_;    // qint_[k] = [k]_q
    mutable std::vector<Rational> inv_;     // inv_[k] = [k]_q^{-1} (unset slots empty)
    mutable std::vector<bool> inv_known_;
};

/// Exact evaluation at the primitive root z of a cyclotomic field.
class CyclotomicPoint {
public:
    using Element = CyclotomicElement;

    explicit CyclotomicPoint(const FieldContext& ctx) : ctx_(&ctx) {}

    Element zero() const { return ctx_->zero(); }
    Element one() const { return ctx_->one(); }
    Element from_integer(long long v) const { return ctx_->from_rational(Rational(BigInt(static_cast<long>(v)))); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element invert(const Element& a) const { return a.inverse(); }
    bool is_zero(const Element& a) const { return a.is_zero(); }

    Element q_power(long long e) const { return ctx_->root_power(e); }
    Element q_integer(long k) const;
    Element inv_q_integer(long k) const;

    const FieldContext& context() const { return *ctx_; }

private:
    void extend_tables(long k) const;

    const FieldContext* ctx_;
    mutable std::vector<Element> qint_;
    mutable std::vector<Element> inv_;
    mutable std::vector<bool> inv_known_;
};

/// Double-precision evaluation at e^{2*pi*i/n}.  Every power of the root
/// is read from a table built once per point with its own sine/cosine, so
/// repeated multiplication never accumulates drift.
class ComplexPoint {
public:
    using Element = std::complex<double>;

    explicit ComplexPoint(unsigned n);

    Element zero() const { return {0.0, 0.0}; }
    Element one() const { return {1.0, 0.0}; }
    Element from_integer(long long v) const { return {static_cast<double>(v), 0.0}; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element invert(const Element& a) const;
    bool is_zero(const Element& a) const { return a == Element{0.0, 0.0}; }

    Element q_power(long long e) const;
    Element q_integer(long k) const;
    Element inv_q_integer(long k) const;

    unsigned order() const { return n_; }

private:
    void extend_tables(long k) const;

    unsigned n_;
    std::vector<Element> roots_;
    mutable std::vector<Element> qint_;
};

} // namespace qmzv
