#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matchpow/ideal.hpp"

namespace matchpow {

/// Finite simple undirected graph. By default isolated vertices are
/// rejected (edge-ideal constructions assume none); pass allow_isolated for
/// subgraph work. Vertices are 0-based; names drive the ideal ambient.
class SimpleGraph {
 public:
  SimpleGraph(std::vector<std::string> vertex_names,
              std::vector<std::pair<int, int>> edges, bool allow_isolated = false);

  int n() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int u, int v) const;
  std::uint64_t neighbors_mask(int v) const { return adj_[static_cast<size_t>(v)]; }

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted
  std::vector<std::uint64_t> adj_;
};

/// Vertex-weighted oriented graph D: each underlying edge carries exactly
/// one orientation, weights are >= 1. Source weights are validated by
/// validate_weights, not at construction.
class WeightedOrientedGraph {
 public:
  WeightedOrientedGraph(std::vector<std::string> vertex_names,
                        std::vector<std::pair<int, int>> arcs,
                        std::vector<long> weights);

  int n() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  const std::vector<long>& weights() const { return weights_; }
  long weight(int v) const { return weights_[static_cast<size_t>(v)]; }

  SimpleGraph underlying(bool allow_isolated = false) const;
  bool is_source(int v) const;
  bool all_weights_one() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<long> weights_;
};

/// Edge-weighted graph G_w with weights w : E(G) -> Z>=1.
struct EdgeWeightedGraph {
  SimpleGraph graph;
  std::vector<long> edge_weights;  // parallel to graph.edges()

  EdgeWeightedGraph(SimpleGraph g, std::vector<long> w);
};

/// A set of pairwise disjoint edges.
struct Matching {
  std::vector<std::pair<int, int>> edges;
  VarSubset vertex_set() const;
};

/// I(G) = (x_i x_j : {i,j} in E(G)): quadratic and squarefree.
MonomialIdeal edge_ideal(const SimpleGraph& G);

/// I(D) = (x_i x_j^{w_j} : (i,j) in E(D)). Throws WeightError unless
/// validate_weights passes; minimization is a no-op for valid D (asserted).
MonomialIdeal oriented_edge_ideal(const WeightedOrientedGraph& D);

/// I(G_w) = ((x_i x_j)^{w(e)} : e in E(G)), minimized.
MonomialIdeal edge_weighted_ideal(const EdgeWeightedGraph& Gw);

/// Sources (no incoming arc) whose weight exceeds 1; empty means ok.
std::vector<int> validate_weights(const WeightedOrientedGraph& D);

/// Repair mode: reset offending source weights to 1.
WeightedOrientedGraph repair_weights(const WeightedOrientedGraph& D);

/// nu(G) by exact branch and bound over edges.
int matching_number(const SimpleGraph& G);

/// im(G): maximum matching whose vertex set induces exactly that matching.
int induced_matching_number(const SimpleGraph& G);

/// wim(D): maximum over induced matchings of the sum of head weights.
long weighted_induced_matching_number(const WeightedOrientedGraph& D);

/// Length in edges of a longest induced path (exhaustive DFS, |V| <= 20).
/// Conventions that measure paths in vertices want this value + 1.
int longest_induced_path(const SimpleGraph& G);

struct Block {
  enum class Kind { edge, odd_cycle, other };
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
  Kind kind;
};

struct BlockStructure {
  std::vector<Block> blocks;
  bool has_even_cycle = false;  // found by direct cycle search, not inferred
};

/// Biconnected components via DFS low-links plus an independent even-cycle
/// search, so the special-cactus equivalences can be tested rather than
/// assumed.
BlockStructure block_structure(const SimpleGraph& G);

/// Exhaustive enumeration (oracle-grade).
std::vector<Matching> perfect_matchings(const SimpleGraph& G);

/// Number of perfect matchings of the subgraph induced on vertex_mask,
/// via subset DP (n <= 24); oracle for the special-cactus lemma.
long count_perfect_matchings(const SimpleGraph& G, std::uint64_t vertex_mask);

/// True iff every induced subgraph has at most one perfect matching.
bool all_subgraphs_at_most_one_pm(const SimpleGraph& G);

/// Restriction of vertices, arcs, weights to W (throws unless W subset V).
WeightedOrientedGraph induced_subgraph(const WeightedOrientedGraph& D, const VarSubset& W);

/// I(D[W]) written in the ambient of the full vertex set (exponent 0 on
/// dropped vertices) so multigraded Betti numbers can be compared entrywise.
MonomialIdeal oriented_edge_ideal_in_parent(const WeightedOrientedGraph& D, const VarSubset& W);

}  // namespace matchpow
