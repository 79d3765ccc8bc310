#include "qmzv/qsums.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmzv {

CyclotomicElement zn(const Composition& s, unsigned n, SumMode mode) {
    const IndexTuple idx = IndexTuple::z_index(s);
    const FieldContext& ctx = field_context(n);
    CyclotomicPoint f(ctx);
    return mhs(f, idx, static_cast<long>(n) - 1, mode);
}

std::vector<CyclotomicElement> zn_uniform_prefixes(unsigned part, unsigned rmax, unsigned n) {
    if (part == 0) {
        throw std::invalid_argument("composition entries must be positive");
    }
    const FieldContext& ctx = field_context(n);
    CyclotomicPoint f(ctx);
    const IndexTuple idx(std::vector<unsigned>(rmax, part), std::vector<unsigned>(rmax, part - 1));
    return mhs_strict_prefixes(f, idx, static_cast<long>(n) - 1);
}

CyclotomicElement theorem3_rhs(const Composition& s, unsigned n) {
    if (s.empty()) {
        throw std::invalid_argument("composition must be non-empty");
    }
    const auto pattern = StrictPattern::from_composition(s);
    const FieldContext& ctx = field_context(n);
    CyclotomicPoint f(ctx);
    CyclotomicElement out = restricted_sum(f, pattern, static_cast<long>(n) - 1);
    if (s.size() % 2 == 1) {
        out = -out;
    }
    return out;
}

std::pair<CyclotomicElement, CyclotomicElement> reversal_pair(const IndexTuple& idx, unsigned n,
                                                              SumMode mode) {
    for (std::size_t i = 0; i < idx.depth(); ++i) {
        if (idx.t[i] > idx.s[i]) {
            throw std::invalid_argument("reversal needs t_i <= s_i in every position");
        }
    }
    const FieldContext& ctx = field_context(n);
    CyclotomicPoint f(ctx);
    const long N = static_cast<long>(n) - 1;

    CyclotomicElement lhs = mhs(f, idx, N, mode);

    std::vector<unsigned> s_rev(idx.s.rbegin(), idx.s.rend());
    std::vector<unsigned> t_rev(idx.t.rbegin(), idx.t.rend());
    for (std::size_t i = 0; i < s_rev.size(); ++i) {
        t_rev[i] = s_rev[i] - t_rev[i];
    }
    CyclotomicElement rhs = mhs(f, IndexTuple(std::move(s_rev), std::move(t_rev)), N, mode);
    if (idx.weight() % 2 == 1) {
        rhs = -rhs;
    }
    return {std::move(lhs), std::move(rhs)};
}

CyclotomicElement gaussian_binomial(unsigned m, unsigned k, unsigned n) {
    const FieldContext& ctx = field_context(n);
    CyclotomicPoint f(ctx);
    return q_binomial(f, static_cast<long>(m), static_cast<long>(k));
}

Rational theorem_a_lhs_rational(const Composition& s, long n, const Rational& q) {
    RationalPoint f(q);
    return theorem_a_lhs(f, s, n);
}

Rational theorem_a_rhs_rational(const Composition& s, long n, const Rational& q) {
    RationalPoint f(q);
    return theorem_a_rhs(f, s, n);
}

} // namespace qmzv
