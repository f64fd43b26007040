#include "matchpow/matching.hpp"

#include <algorithm>

namespace matchpow {

namespace {

std::vector<std::uint64_t> gen_masks(const MonomialIdeal& I) {
  if (I.num_gens() > 64) throw CapExceededError("matching operations require |G(I)| <= 64");
  std::vector<std::uint64_t> masks;
  masks.reserve(static_cast<size_t>(I.num_gens()));
  for (const auto& g : I.gens()) masks.push_back(support_mask(g));
  return masks;
}

void enumerate(const std::vector<std::uint64_t>& masks, int k, int start,
               std::uint64_t used, GeneratorMatching& cur,
               std::vector<GeneratorMatching>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  int need = k - static_cast<int>(cur.size());
  int m = static_cast<int>(masks.size());
  for (int i = start; i + need <= m; ++i) {
    if (masks[static_cast<size_t>(i)] & used) continue;
    cur.push_back(i);
    enumerate(masks, k, i + 1, used | masks[static_cast<size_t>(i)], cur, out);
    cur.pop_back();
  }
}

// best packing size extendable from `start` with `used` variables
int packing_bb(const std::vector<std::uint64_t>& masks, int start,
               std::uint64_t used, int chosen, int& best) {
  int m = static_cast<int>(masks.size());
  if (chosen + (m - start) <= best) return best;  // not enough gens left
  for (int i = start; i < m; ++i) {
    if (chosen + (m - i) <= best) break;
    if (masks[static_cast<size_t>(i)] & used) continue;
    best = std::max(best, chosen + 1);
    packing_bb(masks, i + 1, used | masks[static_cast<size_t>(i)], chosen + 1, best);
  }
  return best;
}

}  // namespace

std::vector<GeneratorMatching> generator_matchings(const MonomialIdeal& I, int k) {
  if (I.is_zero()) throw ZeroIdealError("generator_matchings: zero ideal");
  if (k < 1) throw InvalidArgumentError("generator_matchings: k must be positive");
  auto masks = gen_masks(I);
  std::vector<GeneratorMatching> out;
  GeneratorMatching cur;
  enumerate(masks, k, 0, 0, cur, out);
  return out;
}

MonomialIdeal matching_power(const MonomialIdeal& I, int k) {
  auto matchings = generator_matchings(I, k);
  std::vector<Monomial> prods;
  prods.reserve(matchings.size());
  for (const auto& M : matchings) {
    Monomial p(std::vector<int>(static_cast<size_t>(I.n()), 0));
    for (int i : M) p = product(p, I.gens()[static_cast<size_t>(i)]);
    prods.push_back(std::move(p));
  }
  return MonomialIdeal(I.ambient(), std::move(prods));
}

int monomial_grade(const MonomialIdeal& I) {
  if (I.is_zero()) throw ZeroIdealError("monomial_grade: zero ideal");
  auto masks = gen_masks(I);
  int best = 0;
  packing_bb(masks, 0, 0, 0, best);
  return best;
}

std::vector<MonomialIdeal> all_matching_powers(const MonomialIdeal& I) {
  int nu = monomial_grade(I);
  std::vector<MonomialIdeal> out;
  out.reserve(static_cast<size_t>(nu));
  for (int k = 1; k <= nu; ++k) out.push_back(matching_power(I, k));
  return out;
}

}  // namespace matchpow
