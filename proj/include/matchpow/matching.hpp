#pragma once

#include <vector>

#include "matchpow/ideal.hpp"

namespace matchpow {

/// A k-subset of G(I) with pairwise support-disjoint members, given as
/// increasing generator indices.
using GeneratorMatching = std::vector<int>;

/// All k-subsets of G(I) with pairwise disjoint supports, in lexicographic
/// index order. Empty when k > nu(I). Backtracking over a used-variable
/// bitmask; requires n <= 64 and |G(I)| <= 64.
std::vector<GeneratorMatching> generator_matchings(const MonomialIdeal& I, int k);

/// The kth matching power I^[k]: products over generator_matchings, then
/// minimized. Zero ideal iff k > nu(I); k = 1 returns I.
MonomialIdeal matching_power(const MonomialIdeal& I, int k);

/// nu(I): the largest k with I^[k] != 0, by exact branch-and-bound set
/// packing over generator supports. Hard cap |G(I)| <= 64.
int monomial_grade(const MonomialIdeal& I);

/// Convenience: I^[1], ..., I^[nu(I)].
std::vector<MonomialIdeal> all_matching_powers(const MonomialIdeal& I);

}  // namespace matchpow
