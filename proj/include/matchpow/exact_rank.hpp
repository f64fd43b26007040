#pragma once

#include <vector>

#include "matchpow/field.hpp"

namespace matchpow {

/// Sparse integer matrix given per column as (row, value) pairs. Entries of
/// boundary matrices are +-1; the rank routines accept any small integers.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, long long>>> col_entries;
};

/// Exact rank over Q by fraction-free (Bareiss) elimination on GMP integers.
long rank_over_rationals(const SparseIntMatrix& M);

/// Rank over F_p by standard elimination, p an odd prime < 2^31.
long rank_mod_prime(const SparseIntMatrix& M, long p);

long rank_over(const SparseIntMatrix& M, const CoefficientField& F);

}  // namespace matchpow
