#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmzv/identities.hpp"

using namespace qmzv;

namespace {

CyclotomicElement element(const FieldContext& ctx, std::vector<long> ints) {
    std::vector<Rational> coeffs;
    for (long v : ints) coeffs.emplace_back(v);
    return ctx.from_coeffs(coeffs);
}

} // namespace

TEST_CASE("closed forms at order three") {
    const FieldContext& c3 = field_context(3);
    CHECK(rhs_eq1(c3, 0) == c3.one());
    CHECK(rhs_eq1(c3, 1) == element(c3, {1, -1}));
    CHECK(rhs_eq2(c3, 1) == element(c3, {0, 2}));
    CHECK(rhs_eq3(c3, 1) == element(c3, {-1, -2}));
    CHECK(rhs_thm1(c3, 0, 0) == element(c3, {-2, -4}));
    CHECK(rhs_thm2(c3, 0, 0) == element(c3, {0, 4}));
}

TEST_CASE("single identity checks come back verified") {
    CHECK(check_eq1(7, 3).status == CheckStatus::verified);
    CHECK(check_eq1(2, 0).status == CheckStatus::verified);
    CHECK(check_eq2(6, 2).status == CheckStatus::verified);
    CHECK(check_eq3(5, 1).status == CheckStatus::verified);
    CHECK(check_thm1(7, 1, 0).status == CheckStatus::verified);
    CHECK(check_thm2(8, 1, 1).status == CheckStatus::verified);
    CHECK(check_lemma2(12, 5).status == CheckStatus::verified);
    CHECK(check_duality(7, {2, 1}).status == CheckStatus::verified);
    CHECK(check_theorem_a(5, {1, 2}, Rational(2)).status == CheckStatus::verified);

    const IndexTuple idx({2, 2}, {1, 2});
    CHECK(check_lemma1(6, idx, SumMode::strict).status == CheckStatus::verified);
    CHECK(check_lemma1(6, idx, SumMode::star).status == CheckStatus::verified);
}

TEST_CASE("checks surface errors as a status instead of throwing") {
    const VerificationResult bad = check_lemma2(5, 0);
    CHECK(bad.status == CheckStatus::error);
    CHECK_FALSE(bad.note.empty());

    // q = -1 makes [2] vanish inside the sweep range.
    const VerificationResult singular = check_theorem_a(4, {2}, Rational(-1));
    CHECK(singular.status == CheckStatus::error);
}

TEST_CASE("result payload carries the compared values") {
    const VerificationResult res = check_eq2(3, 1);
    CHECK(res.status == CheckStatus::verified);
    CHECK(res.kind == IdentityKind::eq2);
    CHECK(res.params.at("n") == 3);
    CHECK(res.params.at("r") == 1);
    CHECK(res.lhs.at("n") == 3);
    CHECK(res.lhs.at("coeffs") == json::array({"0", "2"}));
    CHECK(res.lhs == res.rhs);
    CHECK(res.runtime_ms >= 0);
}

TEST_CASE("cyclic index construction") {
    CHECK(build_cyclic_index(CyclicBase::onetwo, {1, 0, 2}, 0) == Composition{1, 2, 2, 1, 1});
    CHECK(build_cyclic_index(CyclicBase::onetwo, {1, 0, 2}, 1) == Composition{2, 1, 1, 2, 1});
    CHECK(build_cyclic_index(CyclicBase::onetwo, {3}, 0) == Composition{1, 1, 1});
    CHECK(build_cyclic_index(CyclicBase::twothree, {0, 0}, 0) == Composition{3});
    CHECK(build_cyclic_index(CyclicBase::twothree, {1, 1}, 0) == Composition{2, 3, 2});
    CHECK(build_cyclic_index(CyclicBase::twothree, {2}, 1) == Composition{2, 2});
    CHECK_THROWS_AS(build_cyclic_index(CyclicBase::onetwo, {}, 0), std::invalid_argument);
}

TEST_CASE("rational multiple detection") {
    const FieldContext& c5 = field_context(5);
    const CyclotomicElement member = Rational(5, 2) * pow(c5.one_minus_root(), 2);
    const RationalMultiple yes = rational_multiple_check(member, 2);
    CHECK(yes.is_member);
    CHECK(yes.value == Rational(5, 2));

    const RationalMultiple no = rational_multiple_check(c5.root_power(1), 0);
    CHECK_FALSE(no.is_member);
}

TEST_CASE("first cyclic family agrees with its closed form") {
    CHECK(conjecture_i_check({2}, 6).status == CheckStatus::verified);
    CHECK(conjecture_i_check({1, 1}, 10).status == CheckStatus::verified);
    CHECK(conjecture_i_check({2, 1, 0}, 12).status == CheckStatus::verified);
    CHECK(conjecture_i_check({1, 1}, 4).status == CheckStatus::skipped);
    CHECK_THROWS_AS(conjecture_i_check({}, 5), std::invalid_argument);
}

TEST_CASE("second cyclic family stays a rational multiple") {
    const VerificationResult res = conjecture_ii_check({0, 0}, 8);
    CHECK(res.status == CheckStatus::verified);
    const auto constant = conjecture_ii_constant(res);
    REQUIRE(constant.has_value());
    CHECK_FALSE(constant->is_zero());

    CHECK(conjecture_ii_check({1, 0}, 9).status == CheckStatus::verified);
    CHECK(conjecture_ii_check({1, 1}, 12).status == CheckStatus::verified);
    CHECK(conjecture_ii_check({0, 0}, 3).status == CheckStatus::skipped);
    CHECK_FALSE(conjecture_ii_constant(conjecture_i_check({1}, 9)).has_value());
}

TEST_CASE("one-separator slices reduce to the sandwich identities") {
    // d = (a, b) with one separator is exactly the symmetrized sum, so the
    // cyclic check and the pair check must agree verbatim.
    for (unsigned a = 0; a <= 2; ++a) {
        for (unsigned b = 0; b <= a; ++b) {
            for (unsigned n = 8; n <= 10; ++n) {
                CHECK(conjecture_i_check({a, b}, n).status == CheckStatus::verified);
                CHECK(check_thm2(n, a, b).status == CheckStatus::verified);
                CHECK(conjecture_ii_check({a, b}, n + 4).status == CheckStatus::verified);
            }
        }
    }
}

TEST_CASE("generic dispatch") {
    CHECK(verify(IdentityKind::eq1, json{{"n", 5}, {"r", 2}}).status == CheckStatus::verified);
    CHECK(verify(IdentityKind::duality, json{{"n", 6}, {"s", json::array({2, 1})}}).status ==
          CheckStatus::verified);
    CHECK(verify(IdentityKind::theorem_a,
                 json{{"n", 4}, {"s", json::array({1, 1})}, {"q", "3/2"}})
              .status == CheckStatus::verified);
    CHECK(verify(IdentityKind::lemma1,
                 json{{"n", 6}, {"s", json::array({2, 1})}, {"t", json::array({1, 1})},
                      {"star", true}})
              .status == CheckStatus::verified);
    CHECK(verify(IdentityKind::conj_i, json{{"n", 9}, {"d", json::array({1, 1})}}).status ==
          CheckStatus::verified);

    CHECK_THROWS_AS(verify(IdentityKind::eq1, json{{"n", 5}}), std::invalid_argument);
    CHECK_THROWS_AS(verify(IdentityKind::theorem_a, json{{"n", 4}, {"s", json::array({1})}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify(IdentityKind::corollary1, json{}), std::invalid_argument);
}

TEST_CASE("kind and status names round-trip") {
    for (IdentityKind kind :
         {IdentityKind::eq1, IdentityKind::eq2, IdentityKind::eq3, IdentityKind::thm1,
          IdentityKind::thm2, IdentityKind::lemma1, IdentityKind::lemma2, IdentityKind::duality,
          IdentityKind::theorem_a, IdentityKind::conj_i, IdentityKind::conj_ii,
          IdentityKind::corollary1}) {
        CHECK(identity_kind_from_string(to_string(kind)) == kind);
    }
    CHECK(to_string(CheckStatus::verified) == "verified");
    CHECK(to_string(CheckStatus::counterexample) == "counterexample");
    CHECK(to_string(CheckStatus::skipped) == "skipped");
    CHECK(to_string(CheckStatus::error) == "error");
    CHECK_THROWS_AS(identity_kind_from_string("nope"), std::invalid_argument);
}
