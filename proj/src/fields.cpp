#include "qmzv/fields.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmzv {

namespace {

void require_positive_index(long k) {
    if (k < 1) {
        throw std::invalid_argument("q-integer index must be positive");
    }
}

} // namespace

// ---------------------------------------------------------------- rational

void RationalPoint::extend_tables(long k) const {
    if (qint_.empty()) {
        qint_.push_back(Rational());  // [0] = 0
    }
    // [j] = [j-1] + q^{j-1}, accumulated by direct summation.
    while (static_cast<long>(qint_.size()) <= k) {
        const unsigned long j = qint_.size();
        qint_.push_back(qint_.back() + pow(q_, j - 1));
    }
    if (static_cast<long>(inv_.size()) <= k) {
        inv_.resize(k + 1);
        inv_known_.resize(k + 1, false);
    }
}

Rational RationalPoint::q_power(long long e) const {
    if (e >= 0) {
        return pow(q_, static_cast<unsigned long>(e));
    }
    return pow(q_.inverse(), static_cast<unsigned long>(-e));
}

Rational RationalPoint::q_integer(long k) const {
    require_positive_index(k);
    extend_tables(k);
    return qint_[k];
}

Rational RationalPoint::inv_q_integer(long k) const {
    require_positive_index(k);
    extend_tables(k);
    if (!inv_known_[k]) {
        if (qint_[k].is_zero()) {
            throw SingularEvaluation(k);
        }
        inv_[k] = qint_[k].inverse();
        inv_known_[k] = true;
    }
    return inv_[k];
}

// -------------------------------------------------------------- cyclotomic

void CyclotomicPoint::extend_tables(long k) const {
    if (qint_.empty()) {
        qint_.push_back(ctx_->zero());
    }
    while (static_cast<long>(qint_.size()) <= k) {
        const long long j = static_cast<long long>(qint_.size());
        qint_.push_back(qint_.back() + ctx_->root_power(j - 1));
    }
    if (static_cast<long>(inv_.size()) <= k) {
        inv_.resize(k + 1);
        inv_known_.resize(k + 1, false);
    }
}

CyclotomicElement CyclotomicPoint::q_integer(long k) const {
    require_positive_index(k);
    extend_tables(k);
    return qint_[k];
}

CyclotomicElement CyclotomicPoint::inv_q_integer(long k) const {
    require_positive_index(k);
    extend_tables(k);
    if (!inv_known_[k]) {
        if (qint_[k].is_zero()) {
            throw SingularEvaluation(k);
        }
        inv_[k] = qint_[k].inverse();
        inv_known_[k] = true;
    }
    return inv_[k];
}

// ----------------------------------------------------------------- complex

ComplexPoint::ComplexPoint(unsigned n) : n_(n) {
    if (n < 2) {
        throw std::invalid_argument("complex evaluation point needs order >= 2");
    }
    roots_.reserve(n);
    for (unsigned k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        roots_.emplace_back(std::cos(angle), std::sin(angle));
    }
}

std::complex<double> ComplexPoint::invert(const Element& a) const {
    if (is_zero(a)) {
        throw DivisionByZero("inverse of complex zero");
    }
    return 1.0 / a;
}

std::complex<double> ComplexPoint::q_power(long long e) const {
    long long m = e % static_cast<long long>(n_);
    if (m < 0) m += n_;
    return roots_[static_cast<std::size_t>(m)];
}

void ComplexPoint::extend_tables(long k) const {
    if (qint_.empty()) {
        qint_.emplace_back(0.0, 0.0);
    }
    while (static_cast<long>(qint_.size()) <= k) {
        const long long j = static_cast<long long>(qint_.size());
        qint_.push_back(qint_.back() + q_power(j - 1));
    }
}

std::complex<double> ComplexPoint::q_integer(long k) const {
    require_positive_index(k);
    extend_tables(k);
    return qint_[static_cast<std::size_t>(k)];
}

std::complex<double> ComplexPoint::inv_q_integer(long k) const {
    const Element v = q_integer(k);
    if (is_zero(v)) {
        throw SingularEvaluation(k);
    }
    return 1.0 / v;
}

} // namespace qmzv
