#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qmzv {

/// Composition: a finite sequence of positive integers.
using Composition = std::vector<unsigned>;

unsigned weight(const Composition& s);

/// Exponent pair (s; t) indexing a multiple harmonic sum: position i
/// carries the factor q^{k_i t_i} / [k_i]^{s_i}.
struct IndexTuple {
    std::vector<unsigned> s;
    std::vector<unsigned> t;

    IndexTuple() = default;
    IndexTuple(std::vector<unsigned> s_in, std::vector<unsigned> t_in);

    std::size_t depth() const { return s.size(); }
    unsigned weight() const;

    /// The tuple (s; s - {1}^r) behind the z-values; every entry of the
    /// composition must be positive.
    static IndexTuple z_index(const Composition& comp);
};

/// Which neighbouring pairs of a weakly increasing index chain are forced
/// strict: position i in `strict` (1-based, 1 <= i < width) means
/// j_i < j_{i+1}.
struct StrictPattern {
    unsigned width = 0;
    std::set<unsigned> strict;

    StrictPattern() = default;
    StrictPattern(unsigned width_in, std::set<unsigned> strict_in);

    /// Pattern of width w(s) whose strict positions are the partial sums
    /// s_1, s_1+s_2, ..., s_1+...+s_{r-1}.
    static StrictPattern from_composition(const Composition& s);
};

/// Parses "2", "1,1,2", "1^3,2" (caret = repetition) into a composition.
Composition parse_composition(std::string_view text);

std::string format_composition(const Composition& s);

/// All compositions of exact weight w, in lexicographic order by parts.
std::vector<Composition> compositions_of_weight(unsigned w);

/// All compositions of weight 1..wmax, grouped by increasing weight.
std::vector<Composition> compositions_up_to_weight(unsigned wmax);

} // namespace qmzv
