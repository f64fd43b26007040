#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchpow/ideal.hpp"

namespace matchpow {

/// The common generator degree, or nullopt for mixed degrees.
std::optional<int> single_degree(const MonomialIdeal& I);

/// G_I: vertices are the minimal generators (by canonical index), edges the
/// pairs with deg(lcm(u,v)) = d + 1. Defined only for equigenerated ideals.
struct SyzygyGraph {
  int num_vertices = 0;
  int degree = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
  bool adjacent(int u, int v) const;
};

/// Throws MixedDegreeError unless single_degree(I) is defined.
SyzygyGraph syzygy_graph(const MonomialIdeal& I);

/// Machine-checkable witnesses. Verdicts carry the first failure in
/// canonical generator order, for reproducibility.
struct PairWitness {
  int u = -1, v = -1;
};

struct ExchangeWitness {
  int u = -1, v = -1, var = -1;
};

struct LinearlyRelatedResult {
  bool value = false;
  bool equigenerated = true;
  std::optional<PairWitness> disconnected_pair;  // set when value is false
  std::string describe(const MonomialIdeal& I) const;
};

/// Criterion via restricted syzygy graphs: true iff every pair u, v of
/// generators is connected inside the induced subgraph of G_I on the
/// generators dividing lcm(u, v). An ideal with mixed generator degrees is
/// not linearly related (the notion presumes a single degree); it yields
/// false with the witness pair of generators of different degrees.
LinearlyRelatedResult is_linearly_related(const MonomialIdeal& I);

struct PolymatroidalResult {
  bool value = false;
  bool equigenerated = true;
  std::optional<ExchangeWitness> failure;  // (u, v, i) with no exchange
  std::string describe(const MonomialIdeal& I) const;
};

/// Exchange property over all ordered generator pairs (u,v) and variables i
/// with deg_{x_i}(u) > deg_{x_i}(v). Mixed degrees give false (witness in
/// `failure` with var = -1).
PolymatroidalResult is_polymatroidal(const MonomialIdeal& I);

/// Squarefree and polymatroidal.
PolymatroidalResult is_matroidal(const MonomialIdeal& I);

struct LinearQuotientsResult {
  std::optional<std::vector<int>> ordering;  // generator indices
  bool lex_certified = false;                // the graded-lex order itself works
};

/// Backtracking search over admissible orderings; memoizes failed prefixes.
/// Throws MixedDegreeError for mixed degrees and CapExceededError beyond
/// |G(I)| = 12. For polymatroidal input the lex order must certify; this is
/// asserted.
LinearQuotientsResult has_linear_quotients(const MonomialIdeal& I);

}  // namespace matchpow
