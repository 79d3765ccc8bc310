#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qmzv/index_tuple.hpp"

namespace qmzv {

/// Deterministic pseudo-random cases for the reversal identity: exponent
/// pairs with depth 1..3, weight at most wmax, 0 <= t_i <= s_i, and an
/// order in 2..nmax.  The sequence depends only on the seed.
std::vector<std::pair<IndexTuple, unsigned>> random_reversal_cases(std::size_t count,
                                                                   unsigned wmax, unsigned nmax,
                                                                   std::uint64_t seed);

/// Deterministic pseudo-random (composition, order) pairs with positive
/// parts, weight at most wmax, and order in 2..nmax.
std::vector<std::pair<Composition, unsigned>> random_composition_cases(std::size_t count,
                                                                       unsigned wmax,
                                                                       unsigned nmax,
                                                                       std::uint64_t seed);

/// All block-length vectors of length t+1 with entries 0..dmax, keeping
/// one representative per cyclic rotation class (the lexicographically
/// least rotation), in lexicographic order.
std::vector<std::vector<unsigned>> cyclic_orbit_representatives(unsigned t, unsigned dmax);

} // namespace qmzv
