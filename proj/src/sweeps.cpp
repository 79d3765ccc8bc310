#include "qmzv/sweeps.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qmzv {

namespace {

// mt19937_64 output is pinned by the standard; drawing with plain modulo
// keeps the generated cases identical across library implementations
// (std::uniform_int_distribution is not portable).
unsigned draw(std::mt19937_64& rng, unsigned bound) {
    return static_cast<unsigned>(rng() % bound);
}

} // namespace

std::vector<std::pair<IndexTuple, unsigned>> random_reversal_cases(std::size_t count,
                                                                   unsigned wmax, unsigned nmax,
                                                                   std::uint64_t seed) {
    if (wmax < 3 || nmax < 2) {
        throw std::invalid_argument("need wmax >= 3 and nmax >= 2");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::pair<IndexTuple, unsigned>> out;
    out.reserve(count);
    while (out.size() < count) {
        const unsigned r = 1 + draw(rng, 3);
        std::vector<unsigned> s(r), t(r);
        unsigned w = 0;
        for (unsigned i = 0; i < r; ++i) {
            s[i] = draw(rng, 4);
            w += s[i];
        }
        if (w > wmax) {
            continue;
        }
        for (unsigned i = 0; i < r; ++i) {
            t[i] = draw(rng, s[i] + 1);
        }
        const unsigned n = 2 + draw(rng, nmax - 1);
        out.emplace_back(IndexTuple(std::move(s), std::move(t)), n);
    }
    return out;
}

std::vector<std::pair<Composition, unsigned>> random_composition_cases(std::size_t count,
                                                                       unsigned wmax,
                                                                       unsigned nmax,
                                                                       std::uint64_t seed) {
    if (wmax < 1 || nmax < 2) {
        throw std::invalid_argument("need wmax >= 1 and nmax >= 2");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Composition, unsigned>> out;
    out.reserve(count);
    while (out.size() < count) {
        const unsigned r = 1 + draw(rng, std::min(wmax, 4u));
        Composition s(r);
        unsigned w = 0;
        for (unsigned i = 0; i < r; ++i) {
            s[i] = 1 + draw(rng, 3);
            w += s[i];
        }
        if (w > wmax) {
            continue;
        }
        const unsigned n = 2 + draw(rng, nmax - 1);
        out.emplace_back(std::move(s), n);
    }
    return out;
}

std::vector<std::vector<unsigned>> cyclic_orbit_representatives(unsigned t, unsigned dmax) {
    const unsigned len = t + 1;
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> d(len, 0);
    for (;;) {
        // Keep d only when no rotation of it is lexicographically smaller.
        bool least = true;
        std::vector<unsigned> rotated(len);
        for (unsigned shift = 1; shift < len && least; ++shift) {
            for (unsigned i = 0; i < len; ++i) {
                rotated[i] = d[(shift + i) % len];
            }
            if (rotated < d) {
                least = false;
            }
        }
        if (least) {
            out.push_back(d);
        }
        // Odometer step over entries 0..dmax.
        unsigned pos = len;
        while (pos > 0) {
            --pos;
            if (d[pos] < dmax) {
                ++d[pos];
                std::fill(d.begin() + pos + 1, d.end(), 0u);
                break;
            }
            if (pos == 0) {
                return out;
            }
        }
    }
}

} // namespace qmzv
