#include "matchpow/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace matchpow {

std::optional<int> single_degree(const MonomialIdeal& I) {
  if (I.is_zero()) throw ZeroIdealError("single_degree: zero ideal");
  int d = I.gens()[0].degree();
  for (const auto& g : I.gens())
    if (g.degree() != d) return std::nullopt;
  return d;
}

bool SyzygyGraph::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

SyzygyGraph syzygy_graph(const MonomialIdeal& I) {
  auto d = single_degree(I);
  if (!d) throw MixedDegreeError("syzygy_graph: generators have mixed degrees");
  SyzygyGraph G;
  G.num_vertices = I.num_gens();
  G.degree = *d;
  for (int u = 0; u < I.num_gens(); ++u)
    for (int v = u + 1; v < I.num_gens(); ++v)
      if (lcm(I.gens()[static_cast<size_t>(u)], I.gens()[static_cast<size_t>(v)]).degree() ==
          *d + 1)
        G.edges.push_back({u, v});
  return G;
}

namespace {

std::optional<PairWitness> mixed_degree_pair(const MonomialIdeal& I) {
  int d = I.gens()[0].degree();
  for (int i = 1; i < I.num_gens(); ++i)
    if (I.gens()[static_cast<size_t>(i)].degree() != d) return PairWitness{0, i};
  return std::nullopt;
}

}  // namespace

std::string LinearlyRelatedResult::describe(const MonomialIdeal& I) const {
  if (value) return "linearly related";
  if (!equigenerated)
    return "not equigenerated: deg " + to_string(I.gens()[static_cast<size_t>(disconnected_pair->u)], *I.ambient()) +
           " != deg " + to_string(I.gens()[static_cast<size_t>(disconnected_pair->v)], *I.ambient());
  return "generators " + to_string(I.gens()[static_cast<size_t>(disconnected_pair->u)], *I.ambient()) +
         " and " + to_string(I.gens()[static_cast<size_t>(disconnected_pair->v)], *I.ambient()) +
         " are disconnected in G_I^(u,v)";
}

LinearlyRelatedResult is_linearly_related(const MonomialIdeal& I) {
  if (I.is_zero()) throw ZeroIdealError("is_linearly_related: zero ideal");
  LinearlyRelatedResult res;
  if (auto w = mixed_degree_pair(I)) {
    res.value = false;
    res.equigenerated = false;
    res.disconnected_pair = w;
    return res;
  }
  const auto G = syzygy_graph(I);
  const int m = I.num_gens();
  // adjacency masks of G_I (m <= 64 guaranteed by matching cap users; guard)
  if (m > 4096) throw CapExceededError("is_linearly_related: too many generators");
  std::vector<std::vector<int>> adj(static_cast<size_t>(m));
  for (auto [u, v] : G.edges) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) {
      Monomial l = lcm(I.gens()[static_cast<size_t>(u)], I.gens()[static_cast<size_t>(v)]);
      std::vector<char> in(static_cast<size_t>(m), 0);
      for (int w = 0; w < m; ++w)
        in[static_cast<size_t>(w)] = divides(I.gens()[static_cast<size_t>(w)], l) ? 1 : 0;
      // BFS from u within the induced subgraph
      std::vector<char> seen(static_cast<size_t>(m), 0);
      std::vector<int> queue{u};
      seen[static_cast<size_t>(u)] = 1;
      for (size_t qi = 0; qi < queue.size(); ++qi)
        for (int w : adj[static_cast<size_t>(queue[qi])])
          if (in[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
            seen[static_cast<size_t>(w)] = 1;
            queue.push_back(w);
          }
      if (!seen[static_cast<size_t>(v)]) {
        res.value = false;
        res.equigenerated = true;
        res.disconnected_pair = PairWitness{u, v};
        return res;
      }
    }
  res.value = true;
  return res;
}

std::string PolymatroidalResult::describe(const MonomialIdeal& I) const {
  if (value) return "polymatroidal";
  if (!equigenerated) return "not equigenerated";
  if (!failure) return "not squarefree";
  return "exchange fails for u = " + to_string(I.gens()[static_cast<size_t>(failure->u)], *I.ambient()) +
         ", v = " + to_string(I.gens()[static_cast<size_t>(failure->v)], *I.ambient()) + ", i = " +
         (failure->var >= 0 ? I.ambient()->name(failure->var) : std::string("?"));
}

PolymatroidalResult is_polymatroidal(const MonomialIdeal& I) {
  if (I.is_zero()) throw ZeroIdealError("is_polymatroidal: zero ideal");
  PolymatroidalResult res;
  if (auto w = mixed_degree_pair(I)) {
    res.value = false;
    res.equigenerated = false;
    res.failure = ExchangeWitness{w->u, w->v, -1};
    return res;
  }
  std::set<std::vector<int>> gen_set;
  for (const auto& g : I.gens()) gen_set.insert(g.exps);
  const int m = I.num_gens(), n = I.n();
  for (int ui = 0; ui < m; ++ui)
    for (int vi = 0; vi < m; ++vi) {
      if (ui == vi) continue;
      const auto& u = I.gens()[static_cast<size_t>(ui)];
      const auto& v = I.gens()[static_cast<size_t>(vi)];
      for (int i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        bool exchanged = false;
        for (int j = 0; j < n && !exchanged; ++j) {
          if (u[j] >= v[j]) continue;
          std::vector<int> cand(u.exps);
          cand[static_cast<size_t>(i)] -= 1;
          cand[static_cast<size_t>(j)] += 1;
          if (gen_set.count(cand)) exchanged = true;
        }
        if (!exchanged) {
          res.value = false;
          res.equigenerated = true;
          res.failure = ExchangeWitness{ui, vi, i};
          return res;
        }
      }
    }
  res.value = true;
  return res;
}

PolymatroidalResult is_matroidal(const MonomialIdeal& I) {
  if (I.is_zero()) throw ZeroIdealError("is_matroidal: zero ideal");
  if (auto w = mixed_degree_pair(I)) {
    PolymatroidalResult res;
    res.value = false;
    res.equigenerated = false;
    res.failure = ExchangeWitness{w->u, w->v, -1};
    return res;
  }
  if (!is_squarefree(I)) {
    PolymatroidalResult res;
    res.value = false;
    res.equigenerated = true;
    res.failure = std::nullopt;  // squarefreeness failed, not an exchange pair
    return res;
  }
  return is_polymatroidal(I);
}

namespace {

// can gens[j] be appended after the prefix set `used`? the colon ideal
// (used) : gens[j] must be generated by variables: for every i in used there
// must be i' in used with u_{i'} / gcd(u_{i'}, u_j) a single variable
// dividing u_i / gcd(u_i, u_j)
bool admissible_step(const MonomialIdeal& I, const std::vector<int>& used, int j) {
  const auto& uj = I.gens()[static_cast<size_t>(j)];
  for (int i : used) {
    Monomial qi = quotient(I.gens()[static_cast<size_t>(i)],
                           gcd(I.gens()[static_cast<size_t>(i)], uj));
    bool covered = false;
    for (int ip : used) {
      Monomial q = quotient(I.gens()[static_cast<size_t>(ip)],
                            gcd(I.gens()[static_cast<size_t>(ip)], uj));
      if (q.degree() == 1 && divides(q, qi)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace

LinearQuotientsResult has_linear_quotients(const MonomialIdeal& I) {
  auto d = single_degree(I);
  if (!d) throw MixedDegreeError("has_linear_quotients: generators have mixed degrees");
  const int m = I.num_gens();
  if (m > 12) throw CapExceededError("has_linear_quotients is capped at 12 generators");
  LinearQuotientsResult res;

  // canonical order is graded-lex already; the lex order on generators of a
  // polymatroidal ideal must certify
  {
    bool ok = true;
    std::vector<int> used;
    for (int j = 0; j < m && ok; ++j) {
      if (!admissible_step(I, used, j)) ok = false;
      used.push_back(j);
    }
    if (ok) {
      std::vector<int> order(static_cast<size_t>(m));
      for (int i = 0; i < m; ++i) order[static_cast<size_t>(i)] = i;
      res.ordering = order;
      res.lex_certified = true;
      return res;
    }
    // a polymatroidal ideal has linear quotients in the lex order, so a lex
    // failure on one is an implementation bug
    if (is_polymatroidal(I).value)
      throw Error("has_linear_quotients: lex order failed on a polymatroidal ideal");
  }

  std::unordered_set<std::uint64_t> dead;  // prefix sets that cannot complete
  std::vector<int> used;
  std::function<bool(std::uint64_t)> search = [&](std::uint64_t mask) -> bool {
    if (static_cast<int>(used.size()) == m) return true;
    if (dead.count(mask)) return false;
    for (int j = 0; j < m; ++j) {
      if (mask >> j & 1) continue;
      if (!admissible_step(I, used, j)) continue;
      used.push_back(j);
      if (search(mask | (std::uint64_t{1} << j))) return true;
      used.pop_back();
    }
    dead.insert(mask);
    return false;
  };
  if (search(0)) res.ordering = used;
  return res;
}

}  // namespace matchpow
