#include "matchpow/exact_rank.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <optional>

namespace matchpow {

namespace {

// fraction-free Bareiss over __int128 with overflow detection; returns
// nullopt when intermediate values leave the safe range, in which case the
// caller redoes the elimination on GMP integers
std::optional<long> rank_int128(const SparseIntMatrix& M) {
  using I128 = __int128;
  const int r = M.rows, c = M.cols;
  std::vector<I128> a(static_cast<size_t>(r) * static_cast<size_t>(c), 0);
  auto at = [&](int i, int j) -> I128& {
    return a[static_cast<size_t>(i) * static_cast<size_t>(c) + static_cast<size_t>(j)];
  };
  for (int j = 0; j < c; ++j)
    for (auto [i, v] : M.col_entries[static_cast<size_t>(j)]) at(i, j) = v;
  // keeping every entry below 2^62 guarantees products and their
  // differences fit in __int128
  const I128 kLimit = I128{1} << 62;
  I128 prev = 1;
  int rank = 0;
  bool overflow = false;
  for (int col = 0; col < c && rank < r && !overflow; ++col) {
    int piv = -1;
    for (int i = rank; i < r; ++i)
      if (at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = col; j < c; ++j) std::swap(at(piv, j), at(rank, j));
    const I128 p = at(rank, col);
    for (int i = rank + 1; i < r && !overflow; ++i) {
      const I128 f = at(i, col);
      for (int j = col + 1; j < c; ++j) {
        I128 v = (p * at(i, j) - f * at(rank, j)) / prev;
        if (v > kLimit || v < -kLimit) {
          overflow = true;
          break;
        }
        at(i, j) = v;
      }
      at(i, col) = 0;
    }
    prev = p;
    ++rank;
  }
  if (overflow) return std::nullopt;
  return rank;
}

}  // namespace

long rank_over_rationals(const SparseIntMatrix& M) {
  int r = M.rows, c = M.cols;
  if (r == 0 || c == 0) return 0;
  if (static_cast<long long>(r) * c <= 1 << 22)
    if (auto fast = rank_int128(M)) return *fast;
  std::vector<std::vector<mpz_class>> a(static_cast<size_t>(r),
                                        std::vector<mpz_class>(static_cast<size_t>(c), 0));
  for (int j = 0; j < c; ++j)
    for (auto [i, v] : M.col_entries[static_cast<size_t>(j)])
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<long>(v);

  // fraction-free Bareiss elimination
  mpz_class prev = 1;
  int rank = 0;
  for (int col = 0; col < c && rank < r; ++col) {
    int piv = -1;
    for (int i = rank; i < r; ++i)
      if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
        // prefer a small pivot to limit growth
        if (piv < 0 || mpz_cmpabs(a[static_cast<size_t>(i)][static_cast<size_t>(col)].get_mpz_t(),
                                  a[static_cast<size_t>(piv)][static_cast<size_t>(col)].get_mpz_t()) < 0)
          piv = i;
      }
    if (piv < 0) continue;
    std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(rank)]);
    const auto& prow = a[static_cast<size_t>(rank)];
    for (int i = rank + 1; i < r; ++i) {
      auto& row = a[static_cast<size_t>(i)];
      if (row[static_cast<size_t>(col)] == 0) {
        // still must rescale untouched entries for Bareiss consistency? No:
        // rows with zero leading entry keep the identity a_ij' = (p*a_ij)/prev,
        // which stays exact.
        for (int j = col + 1; j < c; ++j) {
          row[static_cast<size_t>(j)] *= prow[static_cast<size_t>(col)];
          mpz_divexact(row[static_cast<size_t>(j)].get_mpz_t(),
                       row[static_cast<size_t>(j)].get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (int j = col + 1; j < c; ++j) {
        mpz_class t = prow[static_cast<size_t>(col)] * row[static_cast<size_t>(j)] -
                      row[static_cast<size_t>(col)] * prow[static_cast<size_t>(j)];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        row[static_cast<size_t>(j)] = std::move(t);
      }
      row[static_cast<size_t>(col)] = 0;
    }
    prev = prow[static_cast<size_t>(col)];
    ++rank;
  }
  return rank;
}

long rank_mod_prime(const SparseIntMatrix& M, long p) {
  int r = M.rows, c = M.cols;
  if (r == 0 || c == 0) return 0;
  std::vector<std::vector<long long>> a(static_cast<size_t>(r),
                                        std::vector<long long>(static_cast<size_t>(c), 0));
  for (int j = 0; j < c; ++j)
    for (auto [i, v] : M.col_entries[static_cast<size_t>(j)]) {
      long long x = v % p;
      if (x < 0) x += p;
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = x;
    }
  auto inv = [&](long long x) {
    // Fermat, p prime
    long long res = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1) res = res * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return res;
  };
  int rank = 0;
  for (int col = 0; col < c && rank < r; ++col) {
    int piv = -1;
    for (int i = rank; i < r; ++i)
      if (a[static_cast<size_t>(i)][static_cast<size_t>(col)]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(rank)]);
    auto& prow = a[static_cast<size_t>(rank)];
    long long pivinv = inv(prow[static_cast<size_t>(col)]);
    for (int i = rank + 1; i < r; ++i) {
      auto& row = a[static_cast<size_t>(i)];
      long long f = row[static_cast<size_t>(col)];
      if (!f) continue;
      long long mult = f * pivinv % p;
      for (int j = col; j < c; ++j) {
        row[static_cast<size_t>(j)] =
            (row[static_cast<size_t>(j)] - mult * prow[static_cast<size_t>(j)]) % p;
        if (row[static_cast<size_t>(j)] < 0) row[static_cast<size_t>(j)] += p;
      }
    }
    ++rank;
  }
  return rank;
}

long rank_over(const SparseIntMatrix& M, const CoefficientField& F) {
  return F.kind == CoefficientField::Kind::rationals ? rank_over_rationals(M)
                                                     : rank_mod_prime(M, F.p);
}

}  // namespace matchpow
