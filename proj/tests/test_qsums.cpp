#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmzv/qsums.hpp"

using namespace qmzv;

namespace {

CyclotomicElement element(const FieldContext& ctx, std::vector<long> ints) {
    std::vector<Rational> coeffs;
    for (long v : ints) coeffs.emplace_back(v);
    return ctx.from_coeffs(coeffs);
}

} // namespace

TEST_CASE("z-values at small orders") {
    const FieldContext& c3 = field_context(3);
    CHECK(zn({}, 3) == c3.one());
    CHECK(zn({1}, 3) == element(c3, {1, -1}));
    CHECK(zn({2}, 3) == element(c3, {0, 2}));
    CHECK(zn({3}, 3) == element(c3, {-1, -2}));

    const FieldContext& c5 = field_context(5);
    CHECK(zn({1}, 5) == Rational(2) * (c5.one() - c5.root_power(1)));

    const FieldContext& c4 = field_context(4);
    std::vector<Rational> expected{Rational(), Rational(5, 2)};
    CHECK(zn({2}, 4) == c4.from_coeffs(expected));

    CHECK_THROWS_AS(zn({1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(zn({0, 1}, 5), std::invalid_argument);
}

TEST_CASE("z-values agree with direct enumeration") {
    for (unsigned n = 2; n <= 8; ++n) {
        const FieldContext& ctx = field_context(n);
        CyclotomicPoint f(ctx);
        for (const Composition& s : compositions_up_to_weight(3)) {
            const IndexTuple idx = IndexTuple::z_index(s);
            CHECK(zn(s, n) == naive::mhs(f, idx, static_cast<long>(n) - 1, SumMode::strict));
            CHECK(zn(s, n, SumMode::star) ==
                  naive::mhs(f, idx, static_cast<long>(n) - 1, SumMode::star));
        }
    }
}

TEST_CASE("uniform ladders match single evaluations") {
    for (unsigned part : {1u, 2u}) {
        const auto ladder = zn_uniform_prefixes(part, 4, 7);
        REQUIRE(ladder.size() == 5);
        for (unsigned r = 0; r <= 4; ++r) {
            CHECK(ladder[r] == zn(Composition(r, part), 7));
        }
    }
    CHECK_THROWS_AS(zn_uniform_prefixes(0, 3, 7), std::invalid_argument);
}

TEST_CASE("restricted dual form") {
    const FieldContext& c3 = field_context(3);
    CHECK(theorem3_rhs({2}, 3) == element(c3, {0, 2}));
    CHECK(theorem3_rhs({2}, 3) == zn({2}, 3));
    CHECK_THROWS_AS(theorem3_rhs({}, 3), std::invalid_argument);

    for (unsigned n = 2; n <= 9; ++n) {
        for (const Composition& s : compositions_up_to_weight(4)) {
            CHECK(zn(s, n) == theorem3_rhs(s, n));
        }
    }
}

TEST_CASE("reversal pairs") {
    const IndexTuple idx({2, 1}, {1, 0});
    for (SumMode mode : {SumMode::strict, SumMode::star}) {
        const auto [lhs, rhs] = reversal_pair(idx, 5, mode);
        CHECK(lhs == rhs);
    }

    const IndexTuple bad({1}, {2});
    CHECK_THROWS_AS(reversal_pair(bad, 5, SumMode::strict), std::invalid_argument);
}

TEST_CASE("gaussian binomials at roots") {
    const FieldContext& c3 = field_context(3);
    CHECK(gaussian_binomial(2, 1, 3) == element(c3, {1, 1}));
    CHECK(gaussian_binomial(4, 0, 5) == field_context(5).one());
}

TEST_CASE("rational specializations of the alternating identity") {
    CHECK(theorem_a_lhs_rational({2}, 1, Rational(2)) == Rational(-4));
    CHECK(theorem_a_rhs_rational({2}, 1, Rational(2)) == Rational(-4));
    for (long n = 1; n <= 6; ++n) {
        for (const Composition& s : compositions_up_to_weight(3)) {
            CHECK(theorem_a_lhs_rational(s, n, Rational(-1, 2)) ==
                  theorem_a_rhs_rational(s, n, Rational(-1, 2)));
        }
    }
}
