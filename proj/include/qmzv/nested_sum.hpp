#pragma once

#include <stdexcept>
#include <vector>

#include "qmzv/fields.hpp"
#include "qmzv/index_tuple.hpp"

namespace qmzv {

enum class SumMode { strict, star };

namespace detail {

template <EvalField F>
typename F::Element small_power(const F& f, const typename F::Element& base, unsigned e) {
    typename F::Element out = f.one();
    for (unsigned i = 0; i < e; ++i) {
        out = f.mul(out, base);
    }
    return out;
}

/// One pass of the shared recurrence over k = 1..N with per-position
/// accumulators A_0..A_width (A_0 = 1).  Folding index k into position i
/// uses the prefix accumulator from before k when the step below i is
/// strict, and the already-updated one when it is weak:
///
///   A_i <- A_i + term_i(k) * (strict ? A_{i-1}^{old} : A_{i-1}^{new})
///
/// terms_at(k) must return the width per-position factors for index k.
template <EvalField F, typename TermsAt>
std::vector<typename F::Element> accumulate_chain(const F& f, long N, unsigned width,
                                                  const std::vector<bool>& strict_step,
                                                  TermsAt&& terms_at) {
    using E = typename F::Element;
    if (strict_step.size() + 1 != width && !(width == 0 && strict_step.empty())) {
        throw std::invalid_argument("strict step list does not match width");
    }
    std::vector<E> acc;
    acc.reserve(width + 1);
    acc.push_back(f.one());
    for (unsigned i = 0; i < width; ++i) {
        acc.push_back(f.zero());
    }
    if (width == 0 || N <= 0) {
        return acc;
    }
    std::vector<E> next = acc;
    for (long k = 1; k <= N; ++k) {
        const std::vector<E>& term = terms_at(k);
        for (unsigned i = 1; i <= width; ++i) {
            const E& prefix = (i == 1) ? acc[0]
                              : (strict_step[i - 2] ? acc[i - 1] : next[i - 1]);
            next[i] = f.add(acc[i], f.mul(term[i - 1], prefix));
        }
        std::swap(acc, next);
    }
    return acc;
}

/// Per-position factors q^{k t_i} / [k]^{s_i} for a fixed k, written into a
/// reusable buffer.
template <EvalField F>
class IndexTupleTerms {
public:
    IndexTupleTerms(const F& f, const IndexTuple& idx)
        : f_(f), idx_(idx), buffer_(idx.depth(), f.zero()) {}

    const std::vector<typename F::Element>& operator()(long k) {
        const typename F::Element inv = f_.inv_q_integer(k);
        for (std::size_t i = 0; i < idx_.depth(); ++i) {
            typename F::Element factor = small_power(f_, inv, idx_.s[i]);
            const long long e = static_cast<long long>(k) * idx_.t[i];
            if (e != 0) {
                factor = f_.mul(f_.q_power(e), factor);
            }
            buffer_[i] = std::move(factor);
        }
        return buffer_;
    }

private:
    const F& f_;
    const IndexTuple& idx_;
    std::vector<typename F::Element> buffer_;
};

} // namespace detail

/// Multiple harmonic sum over 1 <= k_1 < ... < k_r <= N (strict) or
/// 1 <= k_1 <= ... <= k_r <= N (star) of prod q^{k_i t_i} / [k_i]^{s_i}.
/// Empty tuples give 1; a vanishing [k]_q for k in 1..N raises
/// SingularEvaluation.
template <EvalField F>
typename F::Element mhs(const F& f, const IndexTuple& idx, long N, SumMode mode) {
    if (N < 0) {
        throw std::invalid_argument("summation limit must be non-negative");
    }
    const unsigned r = static_cast<unsigned>(idx.depth());
    if (r == 0) {
        return f.one();
    }
    std::vector<bool> strict_step(r - 1, mode == SumMode::strict);
    detail::IndexTupleTerms<F> terms(f, idx);
    auto acc = detail::accumulate_chain(f, N, r, strict_step, terms);
    return acc[r];
}

/// Strict-mode accumulators for every prefix of the tuple in one pass:
/// entry j is the strict sum over the first j positions.  With identical
/// positions this yields a whole ladder of uniform sums at once.
template <EvalField F>
std::vector<typename F::Element> mhs_strict_prefixes(const F& f, const IndexTuple& idx, long N) {
    if (N < 0) {
        throw std::invalid_argument("summation limit must be non-negative");
    }
    const unsigned r = static_cast<unsigned>(idx.depth());
    if (r == 0) {
        return {f.one()};
    }
    std::vector<bool> strict_step(r - 1, true);
    detail::IndexTupleTerms<F> terms(f, idx);
    return detail::accumulate_chain(f, N, r, strict_step, terms);
}

/// Sum of prod_{i=1}^{w} q^{j_i} / [j_i] over weakly increasing chains
/// 1 <= j_1 <= ... <= j_w <= N whose steps at the pattern's positions are
/// forced strict.  Width zero gives 1.
template <EvalField F>
typename F::Element restricted_sum(const F& f, const StrictPattern& pattern, long N) {
    if (N < 0) {
        throw std::invalid_argument("summation limit must be non-negative");
    }
    const unsigned w = pattern.width;
    if (w == 0) {
        return f.one();
    }
    std::vector<bool> strict_step(w - 1, false);
    for (unsigned p : pattern.strict) {
        strict_step[p - 1] = true;
    }
    using E = typename F::Element;
    std::vector<E> buffer(w, f.zero());
    auto terms_at = [&](long k) -> const std::vector<E>& {
        const E g = f.mul(f.q_power(k), f.inv_q_integer(k));
        for (unsigned i = 0; i < w; ++i) {
            buffer[i] = g;
        }
        return buffer;
    };
    auto acc = detail::accumulate_chain(f, N, w, strict_step, terms_at);
    return acc[w];
}

/// Gaussian binomial coefficient via the product formula
/// prod_{j=1}^{k} [m-k+j]/[j]; needs 0 <= k <= m and invertible divisors.
template <EvalField F>
typename F::Element q_binomial(const F& f, long m, long k) {
    if (k < 0 || m < 0 || k > m) {
        throw std::invalid_argument("q_binomial needs 0 <= k <= m");
    }
    typename F::Element out = f.one();
    for (long j = 1; j <= k; ++j) {
        out = f.mul(out, f.mul(f.q_integer(m - k + j), f.inv_q_integer(j)));
    }
    return out;
}

/// Alternating binomial-weighted side of the summation identity:
/// sum_{k=1}^{n} qbin(n,k) (-1)^k q^{k(k+1)/2}
///   sum_{1<=k_1<...<k_r=k} prod q^{(s_i-1)k_i} / [k_i]^{s_i}.
/// All s_i must be positive.
template <EvalField F>
typename F::Element theorem_a_lhs(const F& f, const Composition& s, long n) {
    if (n < 1) {
        throw std::invalid_argument("summation limit must be positive");
    }
    const unsigned r = static_cast<unsigned>(s.size());
    if (r == 0) {
        throw std::invalid_argument("composition must be non-empty");
    }
    for (unsigned x : s) {
        if (x == 0) {
            throw std::invalid_argument("composition entries must be positive");
        }
    }
    using E = typename F::Element;

    // Strict-chain accumulators for the first r-1 positions; acc[i] is the
    // sum over 1 <= k_1 < ... < k_i < (current k).
    std::vector<E> acc(r, f.zero());
    acc[0] = f.one();

    E qbin = f.one();      // gaussian binomial (n, k), updated per k
    E tri = f.one();       // q^{k(k+1)/2}, updated per k
    E total = f.zero();
    for (long k = 1; k <= n; ++k) {
        const E inv = f.inv_q_integer(k);
        qbin = f.mul(qbin, f.mul(f.q_integer(n - k + 1), inv));
        tri = f.mul(tri, f.q_power(k));

        const E fr = f.mul(f.q_power(static_cast<long long>(s[r - 1] - 1) * k),
                           detail::small_power(f, inv, s[r - 1]));
        E contrib = f.mul(f.mul(qbin, tri), f.mul(fr, acc[r - 1]));
        total = (k % 2 == 1) ? f.sub(total, contrib) : f.add(total, contrib);

        // Fold k into the prefix chain afterwards (k_r = k has been used
        // with the state from before k); descending keeps the steps strict.
        for (unsigned i = r - 1; i >= 1; --i) {
            const E fi = f.mul(f.q_power(static_cast<long long>(s[i - 1] - 1) * k),
                               detail::small_power(f, inv, s[i - 1]));
            acc[i] = f.add(acc[i], f.mul(fi, acc[i - 1]));
        }
    }
    return total;
}

/// The matching restricted-chain side: (-1)^r times the restricted sum of
/// width w(s) over 1..n whose strict steps sit at the partial sums of s.
template <EvalField F>
typename F::Element theorem_a_rhs(const F& f, const Composition& s, long n) {
    if (n < 1) {
        throw std::invalid_argument("summation limit must be positive");
    }
    if (s.empty()) {
        throw std::invalid_argument("composition must be non-empty");
    }
    const auto pattern = StrictPattern::from_composition(s);
    typename F::Element out = restricted_sum(f, pattern, n);
    if (s.size() % 2 == 1) {
        out = f.sub(f.zero(), out);
    }
    return out;
}

namespace naive {

/// Brute-force enumeration of the defining sums; deliberately independent
/// of the accumulator recurrence so the two can cross-check each other.
template <EvalField F>
typename F::Element mhs(const F& f, const IndexTuple& idx, long N, SumMode mode) {
    if (N < 0) {
        throw std::invalid_argument("summation limit must be non-negative");
    }
    const std::size_t r = idx.depth();
    if (r == 0) {
        return f.one();
    }
    using E = typename F::Element;
    // Touch every index in range first so singular points are reported
    // exactly as the recurrence would report them.
    for (long k = 1; k <= N; ++k) {
        (void)f.inv_q_integer(k);
    }
    const long step = (mode == SumMode::strict) ? 1 : 0;
    E total = f.zero();
    std::vector<long> ks(r);

    auto recurse = [&](auto&& self, std::size_t pos, long lo, const E& partial) -> void {
        if (pos == r) {
            total = f.add(total, partial);
            return;
        }
        for (long k = lo; k <= N; ++k) {
            E factor = detail::small_power(f, f.inv_q_integer(k), idx.s[pos]);
            const long long e = static_cast<long long>(k) * idx.t[pos];
            if (e != 0) {
                factor = f.mul(f.q_power(e), factor);
            }
            self(self, pos + 1, k + step, f.mul(partial, factor));
        }
    };
    recurse(recurse, 0, 1, f.one());
    return total;
}

template <EvalField F>
typename F::Element restricted_sum(const F& f, const StrictPattern& pattern, long N) {
    if (N < 0) {
        throw std::invalid_argument("summation limit must be non-negative");
    }
    const unsigned w = pattern.width;
    if (w == 0) {
        return f.one();
    }
    using E = typename F::Element;
    for (long k = 1; k <= N; ++k) {
        (void)f.inv_q_integer(k);
    }
    E total = f.zero();
    auto recurse = [&](auto&& self, unsigned pos, long lo, const E& partial) -> void {
        if (pos == w) {
            total = f.add(total, partial);
            return;
        }
        for (long j = lo; j <= N; ++j) {
            const E factor = f.mul(f.q_power(j), f.inv_q_integer(j));
            const long next_lo = j + (pattern.strict.count(pos + 1) ? 1 : 0);
            self(self, pos + 1, next_lo, f.mul(partial, factor));
        }
    };
    recurse(recurse, 0, 1, f.one());
    return total;
}

} // namespace naive

} // namespace qmzv
