#include "qmzv/identities.hpp"

#include <chrono>
#include <stdexcept>

#include "qmzv/report.hpp"

namespace qmzv {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

VerificationResult compare_elements(IdentityKind kind, const json& params,
                                    const CyclotomicElement& lhs, const CyclotomicElement& rhs,
                                    Clock::time_point start, std::string note = {}) {
    VerificationResult out;
    out.kind = kind;
    out.params = params;
    out.lhs = to_json(lhs);
    out.rhs = to_json(rhs);
    out.status = (lhs == rhs) ? CheckStatus::verified : CheckStatus::counterexample;
    out.note = std::move(note);
    out.runtime_ms = elapsed_ms(start);
    return out;
}

VerificationResult error_result(IdentityKind kind, const json& params, const std::exception& e,
                                Clock::time_point start) {
    VerificationResult out;
    out.kind = kind;
    out.params = params;
    out.status = CheckStatus::error;
    out.note = e.what();
    out.runtime_ms = elapsed_ms(start);
    return out;
}

VerificationResult skipped_result(IdentityKind kind, const json& params, std::string note,
                                  Clock::time_point start) {
    VerificationResult out;
    out.kind = kind;
    out.params = params;
    out.status = CheckStatus::skipped;
    out.note = std::move(note);
    out.runtime_ms = elapsed_ms(start);
    return out;
}

CyclotomicElement binomial_multiple(const FieldContext& ctx, const Rational& coeff,
                                    unsigned power) {
    return coeff * pow(ctx.one_minus_root(), static_cast<long>(power));
}

} // namespace

CyclotomicElement rhs_eq1(const FieldContext& ctx, unsigned r) {
    const long n = ctx.order();
    const Rational c(binomial(n, r + 1), BigInt(n));
    return binomial_multiple(ctx, c, r);
}

CyclotomicElement rhs_eq2(const FieldContext& ctx, unsigned r) {
    const long n = ctx.order();
    Rational c(binomial(n + r, 2ul * r + 1), BigInt(n) * (r + 1));
    if (r % 2 == 1) {
        c = -c;
    }
    return binomial_multiple(ctx, c, 2 * r);
}

CyclotomicElement rhs_eq3(const FieldContext& ctx, unsigned r) {
    const long n = ctx.order();
    BigInt top = binomial(n + 2l * r + 1, 3ul * r + 2);
    const BigInt second = binomial(n + static_cast<long>(r), 3ul * r + 2);
    top += (r % 2 == 0) ? second : -second;
    const Rational c(top, BigInt(n) * n * (r + 1));
    return binomial_multiple(ctx, c, 3 * r);
}

CyclotomicElement rhs_thm1(const FieldContext& ctx, unsigned a, unsigned b) {
    const long n = ctx.order();
    const unsigned ab = a + b;
    Rational c(binomial(n + static_cast<long>(ab) + 1, 2ul * ab + 3), BigInt(n) * (ab + 2));
    if (ab % 2 == 1) {
        c = -c;
    }
    return binomial_multiple(ctx, c, 2 * ab + 3);
}

CyclotomicElement rhs_thm2(const FieldContext& ctx, unsigned a, unsigned b) {
    const long n = ctx.order();
    const unsigned ab = a + b;
    const Rational c(-binomial(n + 1, ab + 3ul), BigInt(n));
    return binomial_multiple(ctx, c, ab + 2);
}

Composition build_cyclic_index(CyclicBase base, const std::vector<unsigned>& d, unsigned rotation) {
    if (d.empty()) {
        throw std::invalid_argument("block-length vector must be non-empty");
    }
    const unsigned blocks = static_cast<unsigned>(d.size());
    const unsigned block_part = (base == CyclicBase::onetwo) ? 1 : 2;
    const unsigned separator = (base == CyclicBase::onetwo) ? 2 : 3;
    Composition out;
    for (unsigned i = 0; i < blocks; ++i) {
        const unsigned len = d[(rotation + i) % blocks];
        out.insert(out.end(), len, block_part);
        if (i + 1 < blocks) {
            out.push_back(separator);
        }
    }
    return out;
}

CyclotomicElement cyclic_sum(CyclicBase base, const std::vector<unsigned>& d, unsigned n) {
    const FieldContext& ctx = field_context(n);
    CyclotomicElement total = ctx.zero();
    for (unsigned j = 0; j < d.size(); ++j) {
        total += zn(build_cyclic_index(base, d, j), n);
    }
    return total;
}

RationalMultiple rational_multiple_check(const CyclotomicElement& x, unsigned r) {
    const FieldContext& ctx = x.context();
    const CyclotomicElement scale = pow(ctx.one_minus_root(), -static_cast<long>(r));
    RationalMultiple out;
    out.projection = x * scale;
    out.is_member = out.projection.is_rational();
    if (out.is_member) {
        out.value = out.projection.rational_part();
    }
    return out;
}

VerificationResult check_eq1(unsigned n, unsigned r) {
    const auto start = Clock::now();
    const json params{{"n", n}, {"r", r}};
    try {
        const FieldContext& ctx = field_context(n);
        return compare_elements(IdentityKind::eq1, params, zn(Composition(r, 1), n),
                                rhs_eq1(ctx, r), start);
    } catch (const std::exception& e) {
        return error_result(IdentityKind::eq1, params, e, start);
    }
}

VerificationResult check_eq2(unsigned n, unsigned r) {
    const auto start = Clock::now();
    const json params{{"n", n}, {"r", r}};
    try {
        const FieldContext& ctx = field_context(n);
        return compare_elements(IdentityKind::eq2, params, zn(Composition(r, 2), n),
                                rhs_eq2(ctx, r), start);
    } catch (const std::exception& e) {
        return error_result(IdentityKind::eq2, params, e, start);
    }
}

VerificationResult check_eq3(unsigned n, unsigned r) {
    const auto start = Clock::now();
    const json params{{"n", n}, {"r", r}};
    try {
        const FieldContext& ctx = field_context(n);
        return compare_elements(IdentityKind::eq3, params, zn(Composition(r, 3), n),
                                rhs_eq3(ctx, r), start);
    } catch (const std::exception& e) {
        return error_result(IdentityKind::eq3, params, e, start);
    }
}

namespace {

Composition sandwich(unsigned outer_part, unsigned a, unsigned middle, unsigned b) {
    Composition s;
    s.insert(s.end(), a, outer_part);
    s.push_back(middle);
    s.insert(s.end(), b, outer_part);
    return s;
}

} // namespace

VerificationResult check_thm1(unsigned n, unsigned a, unsigned b) {
    const auto start = Clock::now();
    const json params{{"n", n}, {"a", a}, {"b", b}};
    try {
        const FieldContext& ctx = field_context(n);
        const CyclotomicElement lhs =
            zn(sandwich(2, a, 3, b), n) + zn(sandwich(2, b, 3, a), n);
        return compare_elements(IdentityKind::thm1, params, lhs, rhs_thm1(ctx, a, b), start);
    } catch (const std::exception& e) {
        return error_result(IdentityKind::thm1, params, e, start);
    }
}

VerificationResult check_thm2(unsigned n, unsigned a, unsigned b) {
    const auto start = Clock::now();
    const json params{{"n", n}, {"a", a}, {"b", b}};
    try {
        const FieldContext& ctx = field_context(n);
        const CyclotomicElement lhs =
            zn(sandwich(1, a, 2, b), n) + zn(sandwich(1, b, 2, a), n);
        return compare_elements(IdentityKind::thm2, params, lhs, rhs_thm2(ctx, a, b), start);
    } catch (const std::exception& e) {
        return error_result(IdentityKind::thm2, params, e, start);
    }
}

VerificationResult check_lemma1(unsigned n, const IndexTuple& idx, SumMode mode) {
    const auto start = Clock::now();
    const json params{{"n", n}, {"s", idx.s}, {"t", idx.t}, {"star", mode == SumMode::star}};
    try {
        const auto [lhs, rhs] = reversal_pair(idx, n, mode);
        return compare_elements(IdentityKind::lemma1, params, lhs, rhs, start);
    } catch (const std::exception& e) {
        return error_result(IdentityKind::lemma1, params, e, start);
    }
}

VerificationResult check_lemma2(unsigned n, unsigned k) {
    const auto start = Clock::now();
    const json params{{"n", n}, {"k", k}};
    try {
        if (k < 1 || k >= n) {
            throw std::invalid_argument("need 1 <= k < n");
        }
        const FieldContext& ctx = field_context(n);
        const CyclotomicElement lhs = gaussian_binomial(n - 1, k, n);
        const long long tri = static_cast<long long>(k) * (k + 1) / 2;
        CyclotomicElement rhs = ctx.root_power(-tri);
        if (k % 2 == 1) {
            rhs = -rhs;
        }
        return compare_elements(IdentityKind::lemma2, params, lhs, rhs, start);
    } catch (const std::exception& e) {
        return error_result(IdentityKind::lemma2, params, e, start);
    }
}

VerificationResult check_duality(unsigned n, const Composition& s) {
    const auto start = Clock::now();
    const json params{{"n", n}, {"s", s}};
    try {
        return compare_elements(IdentityKind::duality, params, zn(s, n), theorem3_rhs(s, n),
                                start);
    } catch (const std::exception& e) {
        return error_result(IdentityKind::duality, params, e, start);
    }
}

VerificationResult check_theorem_a(long n, const Composition& s, const Rational& q) {
    const auto start = Clock::now();
    const json params{{"n", n}, {"s", s}, {"q", q.to_string()}};
    try {
        const Rational lhs = theorem_a_lhs_rational(s, n, q);
        const Rational rhs = theorem_a_rhs_rational(s, n, q);
        VerificationResult out;
        out.kind = IdentityKind::theorem_a;
        out.params = params;
        out.lhs = rational_to_json(lhs);
        out.rhs = rational_to_json(rhs);
        out.status = (lhs == rhs) ? CheckStatus::verified : CheckStatus::counterexample;
        out.runtime_ms = elapsed_ms(start);
        return out;
    } catch (const std::exception& e) {
        return error_result(IdentityKind::theorem_a, params, e, start);
    }
}

namespace {

json cyclic_params(const std::vector<unsigned>& d, unsigned n, unsigned r) {
    return json{{"t", d.empty() ? 0 : d.size() - 1}, {"d", d}, {"n", n}, {"r", r}};
}

} // namespace

VerificationResult conjecture_i_check(const std::vector<unsigned>& d, unsigned n) {
    const auto start = Clock::now();
    if (d.empty()) {
        throw std::invalid_argument("block-length vector must be non-empty");
    }
    const unsigned t = static_cast<unsigned>(d.size()) - 1;
    unsigned r = 2 * t;
    for (unsigned x : d) r += x;
    const json params = cyclic_params(d, n, r);
    if (n <= r) {
        return skipped_result(IdentityKind::conj_i, params, "outside the stated range n > r", start);
    }
    try {
        const FieldContext& ctx = field_context(n);
        const CyclotomicElement lhs = cyclic_sum(CyclicBase::onetwo, d, n);
        Rational c(binomial(static_cast<long>(n) + t, r + 1ul), BigInt(n));
        if (t % 2 == 1) {
            c = -c;
        }
        const CyclotomicElement rhs = binomial_multiple(ctx, c, r);
        return compare_elements(IdentityKind::conj_i, params, lhs, rhs, start);
    } catch (const std::exception& e) {
        return error_result(IdentityKind::conj_i, params, e, start);
    }
}

VerificationResult conjecture_ii_check(const std::vector<unsigned>& d, unsigned n) {
    const auto start = Clock::now();
    if (d.empty()) {
        throw std::invalid_argument("block-length vector must be non-empty");
    }
    const unsigned t = static_cast<unsigned>(d.size()) - 1;
    unsigned r = 3 * t;
    for (unsigned x : d) r += 2 * x;
    const json params = cyclic_params(d, n, r);
    if (n <= r) {
        return skipped_result(IdentityKind::conj_ii, params, "outside the stated range n > r",
                              start);
    }
    try {
        const FieldContext& ctx = field_context(n);
        const CyclotomicElement lhs = cyclic_sum(CyclicBase::twothree, d, n);
        const RationalMultiple membership = rational_multiple_check(lhs, r);
        const CyclotomicElement reconstruction =
            binomial_multiple(ctx, membership.projection.rational_part(), r);
        VerificationResult out = compare_elements(IdentityKind::conj_ii, params, lhs,
                                                  reconstruction, start);
        if (membership.is_member) {
            out.status = CheckStatus::verified;
            out.note = "constant=" + membership.value.to_string();
        } else {
            out.status = CheckStatus::counterexample;
            out.note = "sum is not a rational multiple of (1-z)^r";
        }
        return out;
    } catch (const std::exception& e) {
        return error_result(IdentityKind::conj_ii, params, e, start);
    }
}

std::optional<Rational> conjecture_ii_constant(const VerificationResult& result) {
    constexpr std::string_view prefix = "constant=";
    if (result.kind != IdentityKind::conj_ii || result.status != CheckStatus::verified ||
        result.note.rfind(prefix, 0) != 0) {
        return std::nullopt;
    }
    return Rational::from_string(std::string_view(result.note).substr(prefix.size()));
}

namespace {

// Parsed integer literals arrive as signed numbers, so accept anything
// integral that is not negative.
bool non_negative_integer(const json& value) {
    return value.is_number_unsigned() ||
           (value.is_number_integer() && value.get<long long>() >= 0);
}

unsigned get_unsigned(const json& params, const char* key) {
    if (!params.contains(key) || !non_negative_integer(params[key])) {
        throw std::invalid_argument(std::string("parameter '") + key +
                                    "' must be a non-negative integer");
    }
    return params[key].get<unsigned>();
}

std::vector<unsigned> get_unsigned_list(const json& params, const char* key) {
    if (!params.contains(key) || !params[key].is_array()) {
        throw std::invalid_argument(std::string("parameter '") + key + "' must be an array");
    }
    std::vector<unsigned> out;
    for (const auto& item : params[key]) {
        if (!non_negative_integer(item)) {
            throw std::invalid_argument(std::string("parameter '") + key +
                                        "' must hold non-negative integers");
        }
        out.push_back(item.get<unsigned>());
    }
    return out;
}

} // namespace

VerificationResult verify(IdentityKind kind, const json& params) {
    switch (kind) {
        case IdentityKind::eq1:
            return check_eq1(get_unsigned(params, "n"), get_unsigned(params, "r"));
        case IdentityKind::eq2:
            return check_eq2(get_unsigned(params, "n"), get_unsigned(params, "r"));
        case IdentityKind::eq3:
            return check_eq3(get_unsigned(params, "n"), get_unsigned(params, "r"));
        case IdentityKind::thm1:
            return check_thm1(get_unsigned(params, "n"), get_unsigned(params, "a"),
                              get_unsigned(params, "b"));
        case IdentityKind::thm2:
            return check_thm2(get_unsigned(params, "n"), get_unsigned(params, "a"),
                              get_unsigned(params, "b"));
        case IdentityKind::lemma1: {
            const bool star = params.contains("star") && params["star"].is_boolean() &&
                              params["star"].get<bool>();
            return check_lemma1(get_unsigned(params, "n"),
                                IndexTuple(get_unsigned_list(params, "s"),
                                           get_unsigned_list(params, "t")),
                                star ? SumMode::star : SumMode::strict);
        }
        case IdentityKind::lemma2:
            return check_lemma2(get_unsigned(params, "n"), get_unsigned(params, "k"));
        case IdentityKind::duality:
            return check_duality(get_unsigned(params, "n"), get_unsigned_list(params, "s"));
        case IdentityKind::theorem_a: {
            if (!params.contains("q") || !params["q"].is_string()) {
                throw std::invalid_argument("parameter 'q' must be a rational string");
            }
            return check_theorem_a(get_unsigned(params, "n"), get_unsigned_list(params, "s"),
                                   Rational::from_string(params["q"].get<std::string>()));
        }
        case IdentityKind::conj_i:
            return conjecture_i_check(get_unsigned_list(params, "d"), get_unsigned(params, "n"));
        case IdentityKind::conj_ii:
            return conjecture_ii_check(get_unsigned_list(params, "d"), get_unsigned(params, "n"));
        case IdentityKind::corollary1:
            throw std::invalid_argument("corollary1 runs through the limit estimator interface");
    }
    throw std::logic_error("unknown identity kind");
}

} // namespace qmzv
