#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmzv/rational.hpp"

using qmzv::BigInt;
using qmzv::Rational;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(-4, 6) == Rational(-2, 3));
    CHECK(Rational(1, -3) == Rational(-1, 3));
    CHECK(Rational(1, -3).denominator() == 3);
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), qmzv::DivisionByZero);
}

TEST_CASE("string round trips") {
    CHECK(Rational::from_string("5") == Rational(5));
    CHECK(Rational::from_string("-7/2") == Rational(-7, 2));
    CHECK(Rational::from_string("4/6") == Rational(2, 3));
    CHECK(Rational::from_string("0") == Rational());
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(-3, 4).to_string() == "-3/4");
    CHECK(Rational().to_string() == "0");
    CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), qmzv::DivisionByZero);
}

TEST_CASE("arithmetic") {
    const Rational a(1, 3);
    const Rational b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(a.inverse() == Rational(3));
    CHECK(Rational(-2, 3).inverse() == Rational(-3, 2));
    CHECK(Rational(-2, 3).inverse().denominator() == 2);
    CHECK_THROWS_AS(Rational().inverse(), qmzv::DivisionByZero);
    CHECK_THROWS_AS(a / Rational(), qmzv::DivisionByZero);
    CHECK(a < Rational(1, 2));
    CHECK(Rational(-1) < Rational());
    CHECK(a.sign() == 1);
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational().is_zero());
    CHECK(Rational(7).is_integer());
    CHECK_FALSE(a.is_integer());
}

TEST_CASE("powers and binomials") {
    CHECK(qmzv::pow(Rational(3, 2), 3) == Rational(27, 8));
    CHECK(qmzv::pow(Rational(), 0) == Rational(1));
    CHECK(qmzv::sign_pow(4) == Rational(1));
    CHECK(qmzv::sign_pow(7) == Rational(-1));
    CHECK(qmzv::binomial(5, 2) == 10);
    CHECK(qmzv::binomial(10, 5) == 252);
    CHECK(qmzv::binomial(4, 7) == 0);
    CHECK(qmzv::binomial(0, 0) == 1);
    CHECK_THROWS_AS(qmzv::binomial(-1, 2), std::domain_error);
}

TEST_CASE("double conversion") {
    CHECK(Rational(1, 4).to_double() == doctest::Approx(0.25));
    CHECK(Rational(-7, 2).to_double() == doctest::Approx(-3.5));
}
