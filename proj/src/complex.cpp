#include "matchpow/complex.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "matchpow/errors.hpp"
#include "matchpow/exact_rank.hpp"

namespace matchpow {

int SimplicialComplexRec::dim() const {
  if (faces.empty()) return -2;
  int d = -1;
  for (auto f : faces) d = std::max(d, std::popcount(f) - 1);
  return d;
}

bool SimplicialComplexRec::is_valid() const {
  if (faces.empty()) return true;
  std::vector<std::uint64_t> sorted(faces);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  auto has = [&](std::uint64_t f) {
    return std::binary_search(sorted.begin(), sorted.end(), f);
  };
  if (!has(0)) return false;
  for (auto f : sorted) {
    for (std::uint64_t rest = f; rest;) {
      std::uint64_t bit = rest & (~rest + 1);
      rest ^= bit;
      if (!has(f ^ bit)) return false;
    }
  }
  return true;
}

std::vector<long> reduced_homology_of_faces(const std::vector<std::uint64_t>& faces,
                                            const CoefficientField& F,
                                            int matrix_dim_cap) {
  if (faces.empty()) return {};
  int top = 0;
  for (auto f : faces) top = std::max(top, std::popcount(f));
  // faces grouped by cardinality; positions found by binary search
  std::vector<std::vector<std::uint64_t>> by_card(static_cast<size_t>(top) + 1);
  for (auto f : faces) by_card[static_cast<size_t>(std::popcount(f))].push_back(f);
  for (auto& v : by_card) std::sort(v.begin(), v.end());
  auto index_of = [&](int c, std::uint64_t f) -> int {
    const auto& v = by_card[static_cast<size_t>(c)];
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), f) - v.begin());
  };

  // rank of the boundary map C_c -> C_{c-1}
  auto boundary_rank = [&](int c) -> long {
    if (c <= 0 || c > top) return 0;
    const auto& cols = by_card[static_cast<size_t>(c)];
    const auto& rows = by_card[static_cast<size_t>(c - 1)];
    if (cols.empty() || rows.empty()) return 0;
    if (matrix_dim_cap > 0 &&
        (static_cast<int>(cols.size()) > matrix_dim_cap ||
         static_cast<int>(rows.size()) > matrix_dim_cap))
      throw CapExceededError("homology boundary matrix exceeds the configured cap");
    SparseIntMatrix M;
    M.rows = static_cast<int>(rows.size());
    M.cols = static_cast<int>(cols.size());
    M.col_entries.resize(cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      std::uint64_t f = cols[j];
      int sign = 1;
      for (std::uint64_t rest = f; rest;) {
        std::uint64_t bit = rest & (~rest + 1);
        rest ^= bit;
        M.col_entries[j].push_back({index_of(c - 1, f ^ bit), sign});
        sign = -sign;
      }
    }
    return rank_over(M, F);
  };

  std::vector<long> ranks(static_cast<size_t>(top) + 2, 0);
  for (int c = 1; c <= top; ++c) ranks[static_cast<size_t>(c)] = boundary_rank(c);
  std::vector<long> dims(static_cast<size_t>(top) + 1, 0);
  for (int c = 0; c <= top; ++c)
    dims[static_cast<size_t>(c)] = static_cast<long>(by_card[static_cast<size_t>(c)].size()) -
                                   ranks[static_cast<size_t>(c)] -
                                   ranks[static_cast<size_t>(c) + 1];
  return dims;
}

std::vector<long> reduced_homology_dims(const SimplicialComplexRec& cx,
                                        const CoefficientField& F) {
  return reduced_homology_of_faces(cx.faces, F);
}

}  // namespace matchpow
