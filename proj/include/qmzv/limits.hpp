#pragma once

#include <complex>
#include <vector>

#include "qmzv/index_tuple.hpp"
#include "qmzv/verification.hpp"

namespace qmzv {

/// Double-precision z-value of a composition at e^{2*pi*i/n}.
std::complex<double> zn_complex(const Composition& s, unsigned n);

enum class LimitScheme {
    last_value,   // value of the largest ladder point
    richardson,   // one-step extrapolation assuming a c/n error term
};

LimitScheme limit_scheme_from_string(std::string_view name);
std::string_view to_string(LimitScheme scheme);

/// Limit estimate of the z-values along the doubling ladder
/// n = 16, 32, ..., n_max (points above n_max are dropped).
struct XiEstimate {
    std::complex<double> value;
    std::vector<unsigned> n_sequence;
    std::vector<std::complex<double>> raw_values;
    double error_estimate = 0.0;
};

/// Requires n_max >= 16.  The error estimate is the magnitude of the final
/// correction; with a single ladder point it degrades to |value|.
XiEstimate xi_estimate(const Composition& s, unsigned n_max, LimitScheme scheme);

/// Residuals of the two limit identities for the symmetrized sandwich
/// sums: the ({1}^a,2,{1}^b) pair against its closed constant
/// -(-2*pi*i)^{a+b+2}/(a+b+3)! and the ({2}^a,3,{2}^b) pair against zero.
struct Corollary1Residuals {
    std::complex<double> first_sum;
    std::complex<double> first_target;
    double first_residual = 0.0;
    double first_error_estimate = 0.0;
    std::complex<double> second_sum;
    double second_residual = 0.0;
    double second_error_estimate = 0.0;
};

Corollary1Residuals corollary1_residuals(unsigned a, unsigned b, unsigned n_max);

/// Verified when both residuals (after Richardson extrapolation along the
/// ladder to n_max) stay within tol.
VerificationResult corollary1_check(unsigned a, unsigned b, unsigned n_max, double tol);

} // namespace qmzv
