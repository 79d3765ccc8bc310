#pragma once

#include <utility>

#include "qmzv/nested_sum.hpp"

namespace qmzv {

/// z-value of a composition at the primitive root of order n: the strict
/// (or star) harmonic sum of depth r over 1..n-1 with exponents
/// (s; s - {1}^r).  Requires n >= 2 and positive parts.
CyclotomicElement zn(const Composition& s, unsigned n, SumMode mode = SumMode::strict);

/// The whole uniform ladder z_n({part}^j) for j = 0..rmax from a single
/// accumulator pass.
std::vector<CyclotomicElement> zn_uniform_prefixes(unsigned part, unsigned rmax, unsigned n);

/// Dual form of the z-value: (-1)^r times the restricted chain sum of
/// width w(s) over 1..n-1 with strict steps at the partial sums of s.
CyclotomicElement theorem3_rhs(const Composition& s, unsigned n);

/// The two sides related by reversing an exponent pair: the plain sum for
/// (s; t) and (-1)^{w(s)} times the sum for the reversed tuple
/// (s-bar; s-bar - t-bar).  Requires t_i <= s_i throughout.
std::pair<CyclotomicElement, CyclotomicElement> reversal_pair(const IndexTuple& idx, unsigned n,
                                                              SumMode mode);

/// Gaussian binomial evaluated at the primitive root of order n.
CyclotomicElement gaussian_binomial(unsigned m, unsigned k, unsigned n);

/// Both sides of the alternating summation identity at an exact rational
/// point q; all parts of s must be positive (zero parts are rejected).
Rational theorem_a_lhs_rational(const Composition& s, long n, const Rational& q);
Rational theorem_a_rhs_rational(const Composition& s, long n, const Rational& q);

} // namespace qmzv
