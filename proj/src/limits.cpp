#include "qmzv/limits.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qmzv/nested_sum.hpp"
#include "qmzv/report.hpp"

namespace qmzv {

std::complex<double> zn_complex(const Composition& s, unsigned n) {
    const IndexTuple idx = IndexTuple::z_index(s);
    ComplexPoint f(n);
    const std::complex<double> value = mhs(f, idx, static_cast<long>(n) - 1, SumMode::strict);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw std::runtime_error("floating evaluation overflowed");
    }
    return value;
}

LimitScheme limit_scheme_from_string(std::string_view name) {
    if (name == "last_value") return LimitScheme::last_value;
    if (name == "richardson") return LimitScheme::richardson;
    throw std::invalid_argument("unknown limit scheme: '" + std::string(name) + "'");
}

std::string_view to_string(LimitScheme scheme) {
    switch (scheme) {
        case LimitScheme::last_value: return "last_value";
        case LimitScheme::richardson: return "richardson";
    }
    throw std::logic_error("unknown limit scheme");
}

XiEstimate xi_estimate(const Composition& s, unsigned n_max, LimitScheme scheme) {
    if (n_max < 16) {
        throw std::invalid_argument("ladder needs n_max >= 16");
    }
    XiEstimate out;
    for (unsigned n = 16; n <= n_max; n *= 2) {
        out.n_sequence.push_back(n);
        out.raw_values.push_back(zn_complex(s, n));
    }
    const std::size_t count = out.raw_values.size();
    if (scheme == LimitScheme::richardson && count >= 2) {
        // One extrapolation step under an error model c/n: doubling n
        // halves the error, so 2*z(2n) - z(n) cancels the leading term.
        std::vector<std::complex<double>> extrapolated;
        for (std::size_t i = 0; i + 1 < count; ++i) {
            extrapolated.push_back(2.0 * out.raw_values[i + 1] - out.raw_values[i]);
        }
        out.value = extrapolated.back();
        out.error_estimate = std::abs(out.value - out.raw_values.back());
    } else {
        out.value = out.raw_values.back();
        out.error_estimate = count >= 2
            ? std::abs(out.raw_values[count - 1] - out.raw_values[count - 2])
            : std::abs(out.value);
    }
    return out;
}

namespace {

std::complex<double> minus_two_pi_i_power(unsigned m) {
    const double mag = std::pow(2.0 * std::numbers::pi, static_cast<double>(m));
    switch (m % 4) {
        case 0: return {mag, 0.0};
        case 1: return {0.0, -mag};
        case 2: return {-mag, 0.0};
        default: return {0.0, mag};
    }
}

double factorial_double(unsigned m) {
    double out = 1.0;
    for (unsigned i = 2; i <= m; ++i) {
        out *= static_cast<double>(i);
    }
    return out;
}

Composition sandwich(unsigned outer_part, unsigned a, unsigned middle, unsigned b) {
    Composition s;
    s.insert(s.end(), a, outer_part);
    s.push_back(middle);
    s.insert(s.end(), b, outer_part);
    return s;
}

} // namespace

Corollary1Residuals corollary1_residuals(unsigned a, unsigned b, unsigned n_max) {
    Corollary1Residuals out;

    const XiEstimate one_ab = xi_estimate(sandwich(1, a, 2, b), n_max, LimitScheme::richardson);
    const XiEstimate one_ba = xi_estimate(sandwich(1, b, 2, a), n_max, LimitScheme::richardson);
    out.first_sum = one_ab.value + one_ba.value;
    // The identity reads sum = -(-2*pi*i)^{a+b+2}/(a+b+3)!, so the residual
    // is |sum + (-2*pi*i)^{a+b+2}/(a+b+3)!|.
    const std::complex<double> constant =
        minus_two_pi_i_power(a + b + 2) / factorial_double(a + b + 3);
    out.first_target = -constant;
    out.first_residual = std::abs(out.first_sum + constant);
    out.first_error_estimate = one_ab.error_estimate + one_ba.error_estimate;

    const XiEstimate two_ab = xi_estimate(sandwich(2, a, 3, b), n_max, LimitScheme::richardson);
    const XiEstimate two_ba = xi_estimate(sandwich(2, b, 3, a), n_max, LimitScheme::richardson);
    out.second_sum = two_ab.value + two_ba.value;
    out.second_residual = std::abs(out.second_sum);
    out.second_error_estimate = two_ab.error_estimate + two_ba.error_estimate;
    return out;
}

VerificationResult corollary1_check(unsigned a, unsigned b, unsigned n_max, double tol) {
    const auto start = std::chrono::steady_clock::now();
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    const json params{{"a", a}, {"b", b}, {"n_max", n_max}, {"tol", tol},
                      {"scheme", std::string(to_string(LimitScheme::richardson))}};
    VerificationResult out;
    out.kind = IdentityKind::corollary1;
    out.params = params;
    try {
        const Corollary1Residuals res = corollary1_residuals(a, b, n_max);
        out.lhs = json{{"first", complex_to_json(res.first_sum)},
                       {"second", complex_to_json(res.second_sum)}};
        out.rhs = json{{"first", complex_to_json(res.first_target)},
                       {"second", complex_to_json({0.0, 0.0})}};
        out.status = (res.first_residual <= tol && res.second_residual <= tol)
                         ? CheckStatus::verified
                         : CheckStatus::counterexample;
        out.note = "residuals " + std::to_string(res.first_residual) + ", " +
                   std::to_string(res.second_residual) + "; ladder error estimates " +
                   std::to_string(res.first_error_estimate) + ", " +
                   std::to_string(res.second_error_estimate);
    } catch (const std::exception& e) {
        out.status = CheckStatus::error;
        out.note = e.what();
    }
    out.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return out;
}

} // namespace qmzv
