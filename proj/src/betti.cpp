#include "matchpow/betti.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "matchpow/matching.hpp"

namespace matchpow {

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<int> join(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] = std::max(r[i], b[i]);
  return r;
}

int total(const std::vector<int>& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool total_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  int ta = total(a), tb = total(b);
  if (ta != tb) return ta < tb;
  return a < b;
}

}  // namespace

int BettiTable::pd_ideal() const {
  int pd = 0;
  for (const auto& [key, dim] : graded)
    if (dim > 0) pd = std::max(pd, key.first);
  return pd;
}

int BettiTable::regularity() const {
  int reg = 0;
  for (const auto& [key, dim] : graded)
    if (dim > 0) reg = std::max(reg, key.second - key.first);
  return reg;
}

long BettiTable::total(int i) const {
  long t = 0;
  for (const auto& [key, dim] : graded)
    if (key.first == i) t += dim;
  return t;
}

long BettiTable::graded_entry(int i, int j) const {
  auto it = graded.find({i, j});
  return it == graded.end() ? 0 : it->second;
}

int BettiTable::max_total_degree() const {
  int m = 0;
  for (const auto& [key, dim] : graded)
    if (dim > 0) m = std::max(m, key.second);
  return m;
}

long BettiTable::euler_alternating_sum() const {
  long s = 0;
  for (const auto& [key, dim] : graded) s += (key.first % 2 == 0 ? dim : -dim);
  return s;
}

std::vector<std::vector<int>> lcm_lattice(const MonomialIdeal& I, const BettiOptions& opt) {
  if (I.is_zero()) throw ZeroIdealError("lcm_lattice: zero ideal");
  std::unordered_set<std::vector<int>, VecHash> seen;
  std::vector<std::vector<int>> elems;
  auto add = [&](std::vector<int> v) {
    if (seen.insert(v).second) {
      elems.push_back(std::move(v));
      if (static_cast<long long>(elems.size()) > opt.lattice_cap)
        throw CapExceededError("lcm lattice exceeds the configured cap");
      return true;
    }
    return false;
  };
  for (const auto& g : I.gens()) add(g.exps);
  // closure under pairwise joins; queue indexes into elems
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    auto cur = elems[qi];  // copy: elems may reallocate
    for (size_t j = 0; j < elems.size(); ++j) {
      if (j == qi) continue;
      auto v = join(cur, elems[j]);
      if (v != cur && v != elems[j]) add(std::move(v));
    }
  }
  std::sort(elems.begin(), elems.end(), total_lex_less);
  return elems;
}

SimplicialComplexRec upper_koszul_complex(const MonomialIdeal& I, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != I.n())
    throw AmbientMismatchError("upper_koszul_complex: multidegree length mismatch");
  for (int x : a)
    if (x < 0) throw InvalidArgumentError("upper_koszul_complex: negative multidegree");
  VarSubset supp;
  for (int i = 0; i < I.n(); ++i)
    if (a[static_cast<size_t>(i)] > 0) supp.push_back(i);
  if (supp.size() > 25) throw CapExceededError("upper_koszul_complex: support too large");
  SimplicialComplexRec cx;
  cx.ground_size = static_cast<int>(supp.size());
  cx.ground = supp;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << supp.size()); ++w) {
    std::vector<int> b(a);
    for (size_t k = 0; k < supp.size(); ++k)
      if (w >> k & 1) b[static_cast<size_t>(supp[k])] -= 1;
    if (I.contains(Monomial(b))) cx.faces.push_back(w);
  }
  std::sort(cx.faces.begin(), cx.faces.end());
  return cx;
}

namespace {

// Homology dims (indexed by face cardinality) of K^a. Returns an empty
// vector when all reduced homology vanishes. Slack sets are kept as
// bitmasks over the global variable indices (n <= 64).
std::vector<long> koszul_dims_at(const MonomialIdeal& I, const std::vector<int>& a,
                                 const CoefficientField& F, const BettiOptions& opt,
                                 KoszulRoute route) {
  if (I.n() > 64) throw CapExceededError("betti engine requires n <= 64");
  std::vector<std::uint64_t> slack;
  slack.reserve(static_cast<size_t>(I.num_gens()));
  for (const auto& g : I.gens()) {
    std::uint64_t f = 0;
    bool div = true;
    for (int i = 0; i < I.n(); ++i) {
      int ai = a[static_cast<size_t>(i)];
      if (g[i] > ai) {
        div = false;
        break;
      }
      if (g[i] < ai && ai > 0) f |= std::uint64_t{1} << i;
    }
    if (div) slack.push_back(f);
  }
  if (slack.empty()) return {};  // x^a not in I
  // a is a minimal generator iff its only dividing generator has no slack
  if (slack.size() == 1 && slack[0] == 0) return {1};
  // common slack variable => K^a is a cone
  {
    std::uint64_t common = slack[0];
    for (size_t j = 1; j < slack.size() && common; ++j) common &= slack[j];
    if (common) return {};
  }
  // keep only maximal slack sets; the union of simplices is unchanged
  std::sort(slack.begin(), slack.end(), [](std::uint64_t x, std::uint64_t y) {
    return std::popcount(x) > std::popcount(y);
  });
  std::vector<std::uint64_t> maximal;
  for (std::uint64_t f : slack) {
    bool dominated = false;
    for (std::uint64_t m : maximal)
      if ((f & ~m) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(f);
  }

  // local ground = union of the maximal slack sets, bits compressed
  std::uint64_t ground_mask = 0;
  for (std::uint64_t f : maximal) ground_mask |= f;
  std::vector<int> ground;
  for (std::uint64_t rest = ground_mask; rest;) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    ground.push_back(v);
  }
  std::vector<std::uint64_t> fmasks;
  fmasks.reserve(maximal.size());
  for (std::uint64_t f : maximal) {
    std::uint64_t m = 0;
    for (size_t k = 0; k < ground.size(); ++k)
      if (f >> ground[k] & 1) m |= std::uint64_t{1} << k;
    fmasks.push_back(m);
  }

  bool can_direct = static_cast<int>(ground.size()) <= opt.direct_support_limit;
  bool can_nerve = static_cast<int>(fmasks.size()) <= opt.nerve_vertex_limit;
  bool use_direct;
  switch (route) {
    case KoszulRoute::direct_only:
      if (static_cast<int>(ground.size()) > 25)
        throw CapExceededError("direct koszul route: ground set too large");
      use_direct = true;
      break;
    case KoszulRoute::nerve_only:
      if (!can_nerve) throw CapExceededError("nerve route: too many covering simplices");
      use_direct = false;
      break;
    default:
      if (can_direct)
        use_direct = true;
      else if (can_nerve)
        use_direct = false;
      else
        throw CapExceededError("multidegree too large for both koszul routes");
  }

  std::vector<std::uint64_t> faces;
  if (use_direct) {
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << ground.size()); ++w)
      for (auto fm : fmasks)
        if ((w & ~fm) == 0) {
          faces.push_back(w);
          break;
        }
  } else {
    // nerve of the cover: sigma is a face iff the slack sets intersect
    struct Frame {
      std::uint64_t inter;
      size_t next;
      std::uint64_t sigma;
    };
    std::vector<Frame> stack{{~std::uint64_t{0}, 0, 0}};
    while (!stack.empty()) {
      Frame fr = stack.back();
      stack.pop_back();
      faces.push_back(fr.sigma);
      if (static_cast<long long>(faces.size()) > opt.nerve_face_cap)
        throw CapExceededError("nerve face count exceeds the configured cap");
      for (size_t j = fr.next; j < fmasks.size(); ++j) {
        std::uint64_t ni = fr.inter & fmasks[j];
        if (ni) stack.push_back({ni, j + 1, fr.sigma | (std::uint64_t{1} << j)});
      }
    }
    std::sort(faces.begin(), faces.end());
  }
  return reduced_homology_of_faces(faces, F, opt.matrix_dim_cap);
}

}  // namespace

BettiTable multigraded_betti(const MonomialIdeal& I, const CoefficientField& F,
                             const BettiOptions& opt, KoszulRoute route) {
  if (I.is_zero()) throw ZeroIdealError("multigraded_betti: zero ideal");
  if (I.num_gens() > opt.max_gens)
    throw CapExceededError("multigraded_betti: |G(I)| exceeds the configured cap (" +
                           std::to_string(opt.max_gens) + ")");
  BettiTable table;
  table.field = F;
  for (const auto& a : lcm_lattice(I, opt)) {
    auto dims = koszul_dims_at(I, a, F, opt, route);
    for (int c = 0; c < static_cast<int>(dims.size()); ++c) {
      long d = dims[static_cast<size_t>(c)];
      if (d <= 0) continue;
      table.multigraded[{c, a}] += d;
      table.graded[{c, total(a)}] += d;
    }
  }
  return table;
}

HomologicalInvariants invariants_from_table(const BettiTable& table,
                                            const MonomialIdeal& I) {
  HomologicalInvariants inv;
  inv.pd_ideal = table.pd_ideal();
  inv.pd_quotient = inv.pd_ideal + 1;
  inv.depth_quotient = I.n() - inv.pd_quotient;
  inv.reg_ideal = table.regularity();
  inv.indeg = initial_degree(I);
  return inv;
}

HomologicalInvariants homological_invariants(const MonomialIdeal& I,
                                             const CoefficientField& F,
                                             const BettiOptions& opt) {
  if (I.is_zero() || I.is_whole_ring())
    throw ZeroIdealError("homological_invariants: need a nonzero proper ideal");
  return invariants_from_table(multigraded_betti(I, F, opt), I);
}

NormalizedDepthProfile normalized_depth(const MonomialIdeal& I,
                                        const CoefficientField& F,
                                        const BettiOptions& opt) {
  if (I.is_zero() || I.is_whole_ring())
    throw ZeroIdealError("normalized_depth: need a nonzero proper ideal");
  if (!I.fully_supported())
    throw NotFullySupportedError("normalized_depth: ideal is not fully supported");
  const int deg_total = bounding_multidegree_total(I);
  const int n = I.n();
  NormalizedDepthProfile prof;
  int nu = monomial_grade(I);
  for (int k = 1; k <= nu; ++k) {
    MonomialIdeal Jk = matching_power(I, k);
    auto inv = homological_invariants(Jk, F, opt);
    int g = inv.depth_quotient + deg_total - n - (inv.indeg - 1);
    int g_via_pd = deg_total - inv.pd_ideal - inv.indeg;
    if (g != g_via_pd)
      throw Error("normalized_depth: the two formulas disagree (internal error)");
    prof.values[k] = g;
  }
  return prof;
}

bool has_linear_resolution(const MonomialIdeal& I, const CoefficientField& F,
                           const BettiOptions& opt) {
  if (I.is_zero()) throw ZeroIdealError("has_linear_resolution: zero ideal");
  int d = I.gens()[0].degree();
  for (const auto& g : I.gens())
    if (g.degree() != d) return false;
  return multigraded_betti(I, F, opt).regularity() == d;
}

}  // namespace matchpow
