#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qmzv/limits.hpp"
#include "qmzv/qsums.hpp"

using namespace qmzv;

TEST_CASE("floating z-values") {
    const auto v = zn_complex({1}, 3);
    CHECK(v.real() == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(v.imag() == doctest::Approx(-0.8660254037844386).epsilon(1e-12));

    // Must match the exact evaluation through the embedding.
    for (unsigned n : {5u, 12u, 30u}) {
        for (const Composition& s : {Composition{2}, Composition{1, 2}, Composition{2, 1, 1}}) {
            const auto approx = zn_complex(s, n);
            const auto exact = zn(s, n).to_complex();
            CHECK(std::abs(approx - exact) <= 1e-10);
        }
    }
    CHECK_THROWS_AS(zn_complex({1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(zn_complex({0}, 5), std::invalid_argument);
}

TEST_CASE("ladder construction") {
    const XiEstimate est = xi_estimate({2}, 100, LimitScheme::last_value);
    CHECK(est.n_sequence == std::vector<unsigned>{16, 32, 64});
    REQUIRE(est.raw_values.size() == 3);
    CHECK(est.value == est.raw_values.back());
    CHECK(est.error_estimate ==
          doctest::Approx(std::abs(est.raw_values[2] - est.raw_values[1])));

    const XiEstimate single = xi_estimate({2}, 16, LimitScheme::richardson);
    CHECK(single.n_sequence == std::vector<unsigned>{16});
    CHECK(single.error_estimate == doctest::Approx(std::abs(single.value)));

    CHECK_THROWS_AS(xi_estimate({2}, 15, LimitScheme::richardson), std::invalid_argument);
}

TEST_CASE("limit of the depth-one pair sum") {
    // The two-part symmetrized limit forces the single value: the limit of
    // the (2) family is pi^2/3.
    const XiEstimate est = xi_estimate({2}, 512, LimitScheme::richardson);
    CHECK(est.value.real() == doctest::Approx(std::numbers::pi * std::numbers::pi / 3.0)
                                  .epsilon(1e-3));
    CHECK(std::abs(est.value.imag()) < 2e-2);

    // The raw tail still carries its O(1/n) imaginary drift; extrapolation
    // removes it, so the complex-modulus error drops by orders of magnitude.
    const XiEstimate raw = xi_estimate({2}, 512, LimitScheme::last_value);
    const std::complex<double> target(std::numbers::pi * std::numbers::pi / 3.0, 0.0);
    CHECK(std::abs(est.value - target) < 0.1 * std::abs(raw.value - target));
}

TEST_CASE("scheme names") {
    CHECK(limit_scheme_from_string("richardson") == LimitScheme::richardson);
    CHECK(limit_scheme_from_string("last_value") == LimitScheme::last_value);
    CHECK(to_string(LimitScheme::richardson) == "richardson");
    CHECK_THROWS_AS(limit_scheme_from_string("cubic"), std::invalid_argument);
}

TEST_CASE("auxiliary scaling limits behave") {
    // C(n+j, k) k! / n^k tends to 1.
    const double n = 1e6;
    const double approx =
        qmzv::binomial(1000002, 3).get_d() * 6.0 / (n * n * n);
    CHECK(approx == doctest::Approx(1.0).epsilon(1e-4));

    // n (1 - e^{2 pi i / n}) tends to -2 pi i.
    const std::complex<double> root{std::cos(2.0 * std::numbers::pi / n),
                                    std::sin(2.0 * std::numbers::pi / n)};
    const std::complex<double> scaled = n * (1.0 - root);
    CHECK(scaled.real() == doctest::Approx(0.0).epsilon(1e-4));
    CHECK(scaled.imag() == doctest::Approx(-2.0 * std::numbers::pi).epsilon(1e-4));
}

TEST_CASE("residuals of the two limit identities") {
    const Corollary1Residuals res = corollary1_residuals(0, 0, 1024);
    CHECK(res.first_residual < 5e-2);
    CHECK(res.second_residual < 5e-2);
    // first target is -(-2 pi i)^2 / 3! = (2 pi)^2 / 6.
    CHECK(res.first_target.real() ==
          doctest::Approx(4.0 * std::numbers::pi * std::numbers::pi / 6.0).epsilon(1e-12));
    CHECK(res.first_target.imag() == doctest::Approx(0.0));

    const VerificationResult check = corollary1_check(0, 0, 1024, 5e-2);
    CHECK(check.status == CheckStatus::verified);
    CHECK(check.kind == IdentityKind::corollary1);
    CHECK(check.params.at("scheme") == "richardson");

    CHECK_THROWS_AS(corollary1_check(0, 0, 1024, 0.0), std::invalid_argument);
}
