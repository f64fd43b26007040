#include "matchpow/graphs.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

namespace matchpow {

SimpleGraph::SimpleGraph(std::vector<std::string> vertex_names,
                         std::vector<std::pair<int, int>> edges, bool allow_isolated)
    : names_(std::move(vertex_names)) {
  int nn = n();
  if (nn < 1) throw InvalidArgumentError("graph needs at least one vertex");
  if (nn > 64) throw CapExceededError("graphs are limited to 64 vertices");
  {
    std::set<std::string> uniq(names_.begin(), names_.end());
    if (static_cast<int>(uniq.size()) != nn)
      throw InvalidArgumentError("duplicate vertex names");
  }
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= nn || v < 0 || v >= nn) throw IndexError("edge endpoint out of range");
    if (u == v) throw InvalidArgumentError("loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InvalidArgumentError("multi-edges are not allowed");
  edges_ = std::move(edges);
  adj_.assign(static_cast<size_t>(nn), 0);
  for (auto [u, v] : edges_) {
    adj_[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
  }
  if (!allow_isolated)
    for (int v = 0; v < nn; ++v)
      if (adj_[static_cast<size_t>(v)] == 0)
        throw InvalidArgumentError("isolated vertex: " + names_[static_cast<size_t>(v)]);
}

bool SimpleGraph::adjacent(int u, int v) const {
  return (adj_[static_cast<size_t>(u)] >> v) & 1;
}

WeightedOrientedGraph::WeightedOrientedGraph(std::vector<std::string> vertex_names,
                                             std::vector<std::pair<int, int>> arcs,
                                             std::vector<long> weights)
    : names_(std::move(vertex_names)), arcs_(std::move(arcs)), weights_(std::move(weights)) {
  int nn = n();
  if (static_cast<int>(weights_.size()) != nn)
    throw InvalidArgumentError("weight vector must have one entry per vertex");
  for (long w : weights_)
    if (w < 1) throw InvalidArgumentError("weights must be >= 1");
  std::vector<std::pair<int, int>> undirected;
  for (auto [u, v] : arcs_) {
    if (u < 0 || u >= nn || v < 0 || v >= nn) throw IndexError("arc endpoint out of range");
    if (u == v) throw InvalidArgumentError("loops are not allowed");
    undirected.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(undirected.begin(), undirected.end());
  if (std::adjacent_find(undirected.begin(), undirected.end()) != undirected.end())
    throw InvalidArgumentError("each undirected edge must be oriented exactly once");
  std::sort(arcs_.begin(), arcs_.end());
  // duplicate names / vertex count checks ride on the underlying graph
  underlying(true);
}

SimpleGraph WeightedOrientedGraph::underlying(bool allow_isolated) const {
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : arcs_) e.push_back({u, v});
  return SimpleGraph(names_, std::move(e), allow_isolated);
}

bool WeightedOrientedGraph::is_source(int v) const {
  for (auto [a, b] : arcs_)
    if (b == v) return false;
  return true;
}

bool WeightedOrientedGraph::all_weights_one() const {
  return std::all_of(weights_.begin(), weights_.end(), [](long w) { return w == 1; });
}

EdgeWeightedGraph::EdgeWeightedGraph(SimpleGraph g, std::vector<long> w)
    : graph(std::move(g)), edge_weights(std::move(w)) {
  if (edge_weights.size() != graph.edges().size())
    throw InvalidArgumentError("need one weight per edge");
  for (long x : edge_weights)
    if (x < 1) throw InvalidArgumentError("edge weights must be >= 1");
}

VarSubset Matching::vertex_set() const {
  std::set<int> s;
  for (auto [u, v] : edges) {
    s.insert(u);
    s.insert(v);
  }
  return VarSubset(s.begin(), s.end());
}

MonomialIdeal edge_ideal(const SimpleGraph& G) {
  auto amb = make_ambient(G.vertex_names());
  std::vector<Monomial> gens;
  for (auto [u, v] : G.edges()) {
    std::vector<int> e(static_cast<size_t>(G.n()), 0);
    e[static_cast<size_t>(u)] = 1;
    e[static_cast<size_t>(v)] = 1;
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(std::move(amb), std::move(gens));
}

MonomialIdeal oriented_edge_ideal(const WeightedOrientedGraph& D) {
  auto bad = validate_weights(D);
  if (!bad.empty()) {
    std::string msg = "sources with weight > 1:";
    for (int v : bad) msg += " " + D.vertex_names()[static_cast<size_t>(v)];
    throw WeightError(msg + " (repair_weights resets them to 1)");
  }
  auto amb = make_ambient(D.vertex_names());
  std::vector<Monomial> gens;
  for (auto [i, j] : D.arcs()) {
    std::vector<int> e(static_cast<size_t>(D.n()), 0);
    e[static_cast<size_t>(i)] = 1;
    e[static_cast<size_t>(j)] = static_cast<int>(D.weight(j));
    gens.push_back(Monomial(std::move(e)));
  }
  MonomialIdeal I(std::move(amb), gens);
  if (I.num_gens() != static_cast<int>(D.arcs().size()))
    throw Error("oriented_edge_ideal: generators were not minimal (internal error)");
  return I;
}

MonomialIdeal edge_weighted_ideal(const EdgeWeightedGraph& Gw) {
  auto amb = make_ambient(Gw.graph.vertex_names());
  std::vector<Monomial> gens;
  for (size_t k = 0; k < Gw.graph.edges().size(); ++k) {
    auto [u, v] = Gw.graph.edges()[k];
    std::vector<int> e(static_cast<size_t>(Gw.graph.n()), 0);
    e[static_cast<size_t>(u)] = static_cast<int>(Gw.edge_weights[k]);
    e[static_cast<size_t>(v)] = static_cast<int>(Gw.edge_weights[k]);
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(std::move(amb), std::move(gens));
}

std::vector<int> validate_weights(const WeightedOrientedGraph& D) {
  std::vector<int> bad;
  for (int v = 0; v < D.n(); ++v)
    if (D.is_source(v) && D.weight(v) > 1) bad.push_back(v);
  return bad;
}

WeightedOrientedGraph repair_weights(const WeightedOrientedGraph& D) {
  auto w = D.weights();
  for (int v : validate_weights(D)) w[static_cast<size_t>(v)] = 1;
  return WeightedOrientedGraph(D.vertex_names(), D.arcs(), std::move(w));
}

namespace {

void matching_bb(const std::vector<std::pair<int, int>>& edges, size_t start,
                 std::uint64_t used, int chosen, int& best) {
  size_t m = edges.size();
  best = std::max(best, chosen);
  for (size_t i = start; i < m; ++i) {
    if (chosen + static_cast<int>(m - i) <= best) break;
    auto [u, v] = edges[i];
    if ((used >> u & 1) || (used >> v & 1)) continue;
    matching_bb(edges, i + 1, used | (std::uint64_t{1} << u) | (std::uint64_t{1} << v),
                chosen + 1, best);
  }
}

// enumerate induced matchings as arc-index lists; f receives each one
void induced_matchings(const SimpleGraph& G, const std::vector<std::pair<int, int>>& edges,
                       size_t start, std::uint64_t verts, std::vector<size_t>& cur,
                       const std::function<void(const std::vector<size_t>&)>& f) {
  f(cur);
  for (size_t i = start; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    // u and v may not see any already-chosen vertex
    if ((G.neighbors_mask(u) | G.neighbors_mask(v) | (std::uint64_t{1} << u) |
         (std::uint64_t{1} << v)) &
        verts)
      continue;
    cur.push_back(i);
    induced_matchings(G, edges, i + 1, verts | (std::uint64_t{1} << u) | (std::uint64_t{1} << v),
                      cur, f);
    cur.pop_back();
  }
}

}  // namespace

int matching_number(const SimpleGraph& G) {
  int best = 0;
  matching_bb(G.edges(), 0, 0, 0, best);
  return best;
}

int induced_matching_number(const SimpleGraph& G) {
  int best = 0;
  std::vector<size_t> cur;
  induced_matchings(G, G.edges(), 0, 0, cur,
                    [&](const std::vector<size_t>& m) { best = std::max(best, static_cast<int>(m.size())); });
  return best;
}

long weighted_induced_matching_number(const WeightedOrientedGraph& D) {
  auto bad = validate_weights(D);
  if (!bad.empty()) throw WeightError("weighted_induced_matching_number: invalid source weights");
  SimpleGraph G = D.underlying();
  long best = 0;
  std::vector<size_t> cur;
  induced_matchings(G, D.arcs(), 0, 0, cur, [&](const std::vector<size_t>& m) {
    long s = 0;
    for (size_t i : m) s += D.weight(D.arcs()[i].second);
    best = std::max(best, s);
  });
  return best;
}

int longest_induced_path(const SimpleGraph& G) {
  if (G.n() > 20) throw CapExceededError("longest_induced_path is capped at 20 vertices");
  int best = 0;
  std::vector<int> path;
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t inpath) {
    best = std::max(best, static_cast<int>(path.size()) - 1);
    int last = path.back();
    // forbidden: neighbors of any path vertex except the last
    std::uint64_t blocked = 0;
    for (size_t i = 0; i + 1 < path.size(); ++i) blocked |= G.neighbors_mask(path[i]);
    std::uint64_t cand = G.neighbors_mask(last) & ~inpath & ~blocked;
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      path.push_back(v);
      extend(inpath | (std::uint64_t{1} << v));
      path.pop_back();
    }
  };
  for (int s = 0; s < G.n(); ++s) {
    path = {s};
    extend(std::uint64_t{1} << s);
  }
  return best;
}

namespace {

// does G contain a simple cycle of even length? direct enumeration with
// early exit; independent of the block decomposition
bool find_even_cycle(const SimpleGraph& G) {
  int n = G.n();
  std::vector<int> path;
  bool found = false;
  std::function<void(int, std::uint64_t)> dfs = [&](int s, std::uint64_t inpath) {
    if (found) return;
    int last = path.back();
    std::uint64_t cand = G.neighbors_mask(last);
    while (cand && !found) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      if (v == s && path.size() >= 3) {
        if (path.size() % 2 == 0) {
          found = true;
          return;
        }
        continue;
      }
      if (v <= s || (inpath >> v & 1)) continue;  // cycles rooted at min vertex
      path.push_back(v);
      dfs(s, inpath | (std::uint64_t{1} << v));
      path.pop_back();
    }
  };
  for (int s = 0; s < n && !found; ++s) {
    path = {s};
    dfs(s, std::uint64_t{1} << s);
  }
  return found;
}

}  // namespace

BlockStructure block_structure(const SimpleGraph& G) {
  BlockStructure out;
  int n = G.n();
  std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<std::pair<int, int>> estack;
  int timer = 0;

  auto emit_block = [&](size_t from) {
    std::vector<std::pair<int, int>> bed(estack.begin() + static_cast<long>(from), estack.end());
    estack.resize(from);
    std::set<int> vs;
    for (auto [a, b] : bed) {
      vs.insert(a);
      vs.insert(b);
    }
    Block blk;
    blk.vertices.assign(vs.begin(), vs.end());
    std::sort(bed.begin(), bed.end());
    blk.edges = std::move(bed);
    if (blk.edges.size() == 1)
      blk.kind = Block::Kind::edge;
    else if (blk.edges.size() == blk.vertices.size() && blk.edges.size() % 2 == 1)
      blk.kind = Block::Kind::odd_cycle;
    else
      blk.kind = Block::Kind::other;
    out.blocks.push_back(std::move(blk));
  };

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = timer++;
    std::uint64_t cand = G.neighbors_mask(u);
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      if (v == parent) continue;
      if (disc[static_cast<size_t>(v)] < 0) {
        size_t mark = estack.size();
        estack.push_back({u, v});
        dfs(v, u);
        low[static_cast<size_t>(u)] =
            std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(v)]);
        if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(u)]) emit_block(mark);
      } else if (disc[static_cast<size_t>(v)] < disc[static_cast<size_t>(u)]) {
        estack.push_back({u, v});
        low[static_cast<size_t>(u)] =
            std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(v)]);
      }
    }
  };
  for (int s = 0; s < n; ++s)
    if (disc[static_cast<size_t>(s)] < 0) dfs(s, -1);

  out.has_even_cycle = find_even_cycle(G);
  return out;
}

std::vector<Matching> perfect_matchings(const SimpleGraph& G) {
  std::vector<Matching> out;
  std::vector<std::pair<int, int>> cur;
  std::uint64_t all = G.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << G.n()) - 1;
  std::function<void(std::uint64_t)> go = [&](std::uint64_t covered) {
    if (covered == all) {
      out.push_back(Matching{cur});
      return;
    }
    int v = std::countr_zero(~covered);
    std::uint64_t cand = G.neighbors_mask(v) & ~covered;
    while (cand) {
      int u = std::countr_zero(cand);
      cand &= cand - 1;
      cur.push_back({std::min(u, v), std::max(u, v)});
      go(covered | (std::uint64_t{1} << u) | (std::uint64_t{1} << v));
      cur.pop_back();
    }
  };
  go(0);
  for (auto& m : out) std::sort(m.edges.begin(), m.edges.end());
  std::sort(out.begin(), out.end(),
            [](const Matching& a, const Matching& b) { return a.edges < b.edges; });
  return out;
}

long count_perfect_matchings(const SimpleGraph& G, std::uint64_t vertex_mask) {
  if (G.n() > 24) throw CapExceededError("count_perfect_matchings DP is capped at 24 vertices");
  std::map<std::uint64_t, long> memo;
  std::function<long(std::uint64_t)> count = [&](std::uint64_t mask) -> long {
    if (mask == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int v = std::countr_zero(mask);
    long total = 0;
    std::uint64_t cand = G.neighbors_mask(v) & mask;
    while (cand) {
      int u = std::countr_zero(cand);
      cand &= cand - 1;
      total += count(mask & ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v));
    }
    memo[mask] = total;
    return total;
  };
  return count(vertex_mask);
}

bool all_subgraphs_at_most_one_pm(const SimpleGraph& G) {
  // a subgraph with >= 2 perfect matchings on vertex set W keeps them after
  // adding the remaining induced edges, so induced subgraphs suffice
  if (G.n() > 20) throw CapExceededError("all_subgraphs_at_most_one_pm is capped at 20 vertices");
  size_t N = size_t{1} << G.n();
  std::vector<std::uint8_t> pm(N, 0);  // counts clamped at 2
  pm[0] = 1;
  for (std::uint64_t mask = 1; mask < N; ++mask) {
    int v = std::countr_zero(mask);
    int total = 0;
    std::uint64_t cand = G.neighbors_mask(v) & mask;
    while (cand && total < 2) {
      int u = std::countr_zero(cand);
      cand &= cand - 1;
      total += pm[mask & ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v)];
    }
    if (total > 1) return false;
    pm[mask] = static_cast<std::uint8_t>(total);
  }
  return true;
}

WeightedOrientedGraph induced_subgraph(const WeightedOrientedGraph& D, const VarSubset& W) {
  std::vector<int> keep(W);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> pos(static_cast<size_t>(D.n()), -1);
  for (size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] < 0 || keep[k] >= D.n()) throw IndexError("induced_subgraph: W not a subset");
    pos[static_cast<size_t>(keep[k])] = static_cast<int>(k);
  }
  std::vector<std::string> names;
  std::vector<long> weights;
  for (int v : keep) {
    names.push_back(D.vertex_names()[static_cast<size_t>(v)]);
    weights.push_back(D.weight(v));
  }
  std::vector<std::pair<int, int>> arcs;
  for (auto [i, j] : D.arcs())
    if (pos[static_cast<size_t>(i)] >= 0 && pos[static_cast<size_t>(j)] >= 0)
      arcs.push_back({pos[static_cast<size_t>(i)], pos[static_cast<size_t>(j)]});
  return WeightedOrientedGraph(std::move(names), std::move(arcs), std::move(weights));
}

MonomialIdeal oriented_edge_ideal_in_parent(const WeightedOrientedGraph& D, const VarSubset& W) {
  std::vector<int> keep(W);
  std::sort(keep.begin(), keep.end());
  std::uint64_t wm = 0;
  for (int v : keep) {
    if (v < 0 || v >= D.n()) throw IndexError("oriented_edge_ideal_in_parent: W not a subset");
    wm |= std::uint64_t{1} << v;
  }
  auto amb = make_ambient(D.vertex_names());
  std::vector<Monomial> gens;
  for (auto [i, j] : D.arcs()) {
    if (!((wm >> i & 1) && (wm >> j & 1))) continue;
    std::vector<int> e(static_cast<size_t>(D.n()), 0);
    e[static_cast<size_t>(i)] = 1;
    e[static_cast<size_t>(j)] = static_cast<int>(D.weight(j));
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(std::move(amb), std::move(gens));
}

}  // namespace matchpow
