#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "qmzv/cyclotomic.hpp"

using namespace qmzv;

namespace {

CyclotomicElement element(const FieldContext& ctx, std::vector<long> ints) {
    std::vector<Rational> coeffs;
    coeffs.reserve(ints.size());
    for (long v : ints) coeffs.emplace_back(v);
    return ctx.from_coeffs(coeffs);
}

} // namespace

TEST_CASE("minimal polynomials") {
    auto coeffs = [](const IntPoly& p) { return p.coeffs(); };
    CHECK(coeffs(cyclotomic_polynomial(1)) == std::vector<BigInt>{-1, 1});
    CHECK(coeffs(cyclotomic_polynomial(2)) == std::vector<BigInt>{1, 1});
    CHECK(coeffs(cyclotomic_polynomial(3)) == std::vector<BigInt>{1, 1, 1});
    CHECK(coeffs(cyclotomic_polynomial(4)) == std::vector<BigInt>{1, 0, 1});
    CHECK(coeffs(cyclotomic_polynomial(6)) == std::vector<BigInt>{1, -1, 1});
    CHECK(coeffs(cyclotomic_polynomial(12)) == std::vector<BigInt>{1, 0, -1, 0, 1});
    CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);

    for (unsigned n = 1; n <= 60; ++n) {
        CHECK(cyclotomic_polynomial(n).degree() == static_cast<long>(euler_phi(n)));
    }
    CHECK(euler_phi(8) == 4);
    CHECK(euler_phi(60) == 16);
    CHECK(euler_phi(97) == 96);
}

TEST_CASE("context basics") {
    CHECK_THROWS_AS(FieldContext(0), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext(1), std::invalid_argument);

    const FieldContext& c2 = field_context(2);
    CHECK(c2.degree() == 1);
    CHECK(c2.root_power(1) == c2.from_rational(Rational(-1)));

    const FieldContext& c3 = field_context(3);
    CHECK(c3.degree() == 2);
    // z^2 = -1 - z on the canonical basis, and negative exponents wrap.
    CHECK(c3.root_power(2) == element(c3, {-1, -1}));
    CHECK(c3.root_power(-1) == element(c3, {-1, -1}));
    CHECK(c3.root_power(3) == c3.one());
    CHECK(c3.root_power(4) == c3.root_power(1));
}

TEST_CASE("arithmetic in the third cyclotomic field") {
    const FieldContext& c3 = field_context(3);
    const CyclotomicElement z = c3.root_power(1);
    const CyclotomicElement one = c3.one();

    CHECK((one + z) * (one + z) == z);
    CHECK((one - z) * (one - c3.root_power(2)) == c3.from_rational(Rational(3)));
    CHECK(pow(one - z, 2) == element(c3, {0, -3}));
    CHECK(pow(one - z, 3) == element(c3, {-3, -6}));
    CHECK(-(z + z) == element(c3, {0, -2}));
    CHECK((one - z).inverse() == Rational(1, 3) * element(c3, {2, 1}));
    CHECK((one - z) * (one - z).inverse() == one);

    const CyclotomicElement mixed = element(c3, {1, 2});
    CHECK(mixed * mixed.inverse() == one);
    CHECK(pow(one - z, -1) == (one - z).inverse());
    CHECK_THROWS_AS(c3.zero().inverse(), DivisionByZero);
}

TEST_CASE("reduction of high powers") {
    const FieldContext& c3 = field_context(3);
    // x^3 folds to 1 and x^4 to z.
    std::vector<Rational> cubic(4);
    cubic[3] = Rational(1);
    CHECK(c3.from_coeffs(cubic) == c3.one());
    std::vector<Rational> quartic(5);
    quartic[4] = Rational(1);
    CHECK(c3.from_coeffs(quartic) == c3.root_power(1));
}

TEST_CASE("rational detection") {
    const FieldContext& c5 = field_context(5);
    CHECK(c5.from_rational(Rational(7, 2)).is_rational());
    CHECK(c5.from_rational(Rational(7, 2)).rational_part() == Rational(7, 2));
    CHECK_FALSE(c5.root_power(1).is_rational());
    CHECK(c5.zero().is_zero());
    CHECK_FALSE(c5.one().is_zero());
}

TEST_CASE("equality is canonical and order-aware") {
    const FieldContext& c3 = field_context(3);
    const FieldContext& c4 = field_context(4);
    CHECK(c3.one() == c3.one());
    CHECK(c3.one() != c4.one());
    CHECK_THROWS_AS(c3.one() + c4.one(), std::invalid_argument);

    // A second context of the same order compares equal element-wise.
    const FieldContext local(3);
    CHECK(local.one() == c3.one());
    CHECK(local.root_power(2) == c3.root_power(2));
}

TEST_CASE("numeric embedding") {
    const FieldContext& c3 = field_context(3);
    const std::complex<double> z = c3.root_power(1).to_complex();
    CHECK(z.real() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(z.imag() == doctest::Approx(0.8660254037844386).epsilon(1e-12));

    const std::complex<double> v = (c3.one() - c3.root_power(1)).to_complex();
    CHECK(v.real() == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(v.imag() == doctest::Approx(-0.8660254037844386).epsilon(1e-12));

    // (1 - z)(1 - z^2) = 3 exactly, so the embedding must agree closely.
    const FieldContext& c7 = field_context(7);
    std::complex<double> prod{1.0, 0.0};
    for (unsigned k = 1; k < 7; ++k) {
        prod *= (c7.one() - c7.root_power(k)).to_complex();
    }
    CHECK(prod.real() == doctest::Approx(7.0).epsilon(1e-10));
    CHECK(prod.imag() == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("integer polynomial division guards") {
    const IntPoly a({1, 2, 1});
    const IntPoly b({1, 1});
    CHECK(a.divide_exact(b) == b);
    CHECK_THROWS_AS(b.divide_exact(IntPoly()), DivisionByZero);
    CHECK_THROWS_AS(IntPoly({1, 1, 1}).divide_exact(IntPoly({1, 1})), std::invalid_argument);
}
