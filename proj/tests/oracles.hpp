#pragma once

// Test-only oracles, deliberately independent of the library's homology and
// packing engines: a Taylor-complex Betti computation with its own __int128
// fraction-free rank, exhaustive set packing, and a saturation-based
// localization. Used to freeze expected values and for acceptance item 7.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "matchpow/ideal.hpp"

namespace matchpow::oracle {

using I128 = __int128;

struct Int128Matrix {
  int rows = 0, cols = 0;
  std::vector<std::vector<I128>> a;
};

inline I128 checked_mul(I128 x, I128 y) {
  I128 r;
  if (__builtin_mul_overflow(x, y, &r)) throw Error("oracle rank: __int128 overflow");
  return r;
}

inline long oracle_rank(Int128Matrix m) {
  int r = m.rows, c = m.cols;
  I128 prev = 1;
  long rank = 0;
  for (int col = 0; col < c && rank < r; ++col) {
    int piv = -1;
    for (int i = rank; i < r; ++i)
      if (m.a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m.a[piv], m.a[rank]);
    for (int i = rank + 1; i < r; ++i) {
      for (int j = col + 1; j < c; ++j) {
        I128 t = checked_mul(m.a[rank][col], m.a[i][j]) - checked_mul(m.a[i][col], m.a[rank][j]);
        m.a[i][j] = t / prev;
      }
      m.a[i][col] = 0;
    }
    prev = m.a[rank][col];
    ++rank;
  }
  return rank;
}

/// Graded Betti numbers of the ideal I over Q via the Taylor complex of S/I
/// tensored with the residue field: in each multidegree a, the complex has
/// basis the subsets T of G(I) with lcm(T) = a and boundary coefficient +-1
/// exactly when dropping a generator keeps the lcm. beta_{i,j}(I) sums
/// dim H_{i+1} over |a| = j.
inline std::map<std::pair<int, int>, long> taylor_graded_betti(const MonomialIdeal& I) {
  const int m = I.num_gens();
  if (m > 16) throw Error("taylor oracle: too many generators");
  const size_t N = size_t{1} << m;
  std::vector<std::vector<int>> lcms(N);
  lcms[0] = std::vector<int>(static_cast<size_t>(I.n()), 0);
  std::map<std::vector<int>, std::vector<std::vector<std::uint32_t>>> classes;
  for (size_t mask = 1; mask < N; ++mask) {
    int low = std::countr_zero(mask);
    lcms[mask] = lcms[mask & (mask - 1)];
    const auto& g = I.gens()[static_cast<size_t>(low)];
    for (int i = 0; i < I.n(); ++i)
      lcms[mask][static_cast<size_t>(i)] =
          std::max(lcms[mask][static_cast<size_t>(i)], g[i]);
    auto& by_card = classes[lcms[mask]];
    size_t card = static_cast<size_t>(std::popcount(mask));
    if (by_card.size() <= card) by_card.resize(card + 1);
    by_card[card].push_back(static_cast<std::uint32_t>(mask));
  }

  std::map<std::pair<int, int>, long> graded;
  for (auto& [a, by_card] : classes) {
    int total_deg = std::accumulate(a.begin(), a.end(), 0);
    // boundary rank from cardinality c to c-1 inside this multidegree class
    auto rank_c = [&](size_t c) -> long {
      if (c < 1 || c >= by_card.size() || by_card[c].empty()) return 0;
      if (c - 1 >= by_card.size() || by_card[c - 1].empty()) return 0;
      std::map<std::uint32_t, int> row_index;
      for (size_t i = 0; i < by_card[c - 1].size(); ++i) row_index[by_card[c - 1][i]] = static_cast<int>(i);
      Int128Matrix M;
      M.rows = static_cast<int>(by_card[c - 1].size());
      M.cols = static_cast<int>(by_card[c].size());
      M.a.assign(static_cast<size_t>(M.rows), std::vector<I128>(static_cast<size_t>(M.cols), 0));
      for (size_t j = 0; j < by_card[c].size(); ++j) {
        std::uint32_t T = by_card[c][j];
        int sign = 1;
        for (std::uint32_t rest = T; rest;) {
          std::uint32_t bit = rest & (~rest + 1);
          rest ^= bit;
          std::uint32_t sub = T ^ bit;
          if (lcms[sub] == a) M.a[static_cast<size_t>(row_index.at(sub))][j] += sign;
          sign = -sign;
        }
      }
      return oracle_rank(std::move(M));
    };
    std::vector<long> ranks(by_card.size() + 1, 0);
    for (size_t c = 1; c < by_card.size(); ++c) ranks[c] = rank_c(c);
    for (size_t c = 1; c < by_card.size(); ++c) {
      long h = static_cast<long>(by_card[c].size()) - ranks[c] - ranks[c + 1];
      // H_c of the quotient complex is beta_{c,a}(S/I) = beta_{c-1,a}(I)
      if (h > 0) graded[{static_cast<int>(c) - 1, total_deg}] += h;
    }
  }
  return graded;
}

/// Exhaustive monomial grade: largest pairwise-support-disjoint subset.
inline int naive_monomial_grade(const MonomialIdeal& I) {
  const int m = I.num_gens();
  if (m > 20) throw Error("naive_monomial_grade: too many generators");
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = i + 1; j < m && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) &&
            !support_disjoint(I.gens()[static_cast<size_t>(i)], I.gens()[static_cast<size_t>(j)]))
          ok = false;
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

/// Saturation description of monomial localization: I : (prod_{i notin P} x_i)^inf,
/// computed by iterating colon-by-variable to a fixed point, then restricting
/// to the P variables.
inline MonomialIdeal saturation_localize(const MonomialIdeal& I, const VarSubset& P) {
  std::vector<char> in_p(static_cast<size_t>(I.n()), 0);
  for (int i : P) in_p[static_cast<size_t>(i)] = 1;
  MonomialIdeal J = I;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Monomial> gens;
    for (const auto& g : J.gens()) {
      std::vector<int> e(g.exps);
      for (int i = 0; i < J.n(); ++i)
        if (!in_p[static_cast<size_t>(i)] && e[static_cast<size_t>(i)] > 0) {
          e[static_cast<size_t>(i)] -= 1;
          changed = true;
        }
      gens.push_back(Monomial(std::move(e)));
    }
    J = MonomialIdeal(J.ambient(), std::move(gens));
  }
  return localize(J, P);  // exponents outside P are now all zero
}

}  // namespace matchpow::oracle
