#pragma once

#include <map>
#include <utility>
#include <vector>

#include "matchpow/complex.hpp"
#include "matchpow/ideal.hpp"

namespace matchpow {

/// Caps and tuning for the Betti engine. max_gens is the configurable
/// generator cap (default 20); callers working in few ambient
/// variables may raise it, since the lcm lattice is bounded by the number of
/// distinct joins rather than by 2^|G(I)|.
struct BettiOptions {
  int max_gens = 20;
  long long lattice_cap = 2'000'000;
  int direct_support_limit = 13;  // enumerate K^a when |union of slack sets| <= this
  int nerve_vertex_limit = 22;    // otherwise take the nerve over <= this many simplices
  long long nerve_face_cap = 1LL << 21;
  int matrix_dim_cap = 4096;
};

/// Multigraded and coarsened graded Betti numbers of an ideal I (so the
/// homological index starts at 0 with the generators; the quotient S/I has
/// beta_{i+1} = beta_i(I)). Only nonzero entries are stored.
struct BettiTable {
  CoefficientField field;
  std::map<std::pair<int, std::vector<int>>, long> multigraded;  // (i, a) -> dim
  std::map<std::pair<int, int>, long> graded;                    // (i, j) -> dim

  int pd_ideal() const;    // max i with beta_i != 0
  int regularity() const;  // max j - i over nonzero beta_{i,j}
  long total(int i) const;
  long graded_entry(int i, int j) const;
  int max_total_degree() const;

  /// Alternating sum over i of beta_i; equals 1 for every nonzero ideal.
  long euler_alternating_sum() const;
};

/// All joins (componentwise max) of nonempty subsets of G(I), deduplicated
/// and sorted by (total degree, lex). Computed by closure under pairwise
/// joins; throws CapExceededError beyond opt.lattice_cap.
std::vector<std::vector<int>> lcm_lattice(const MonomialIdeal& I,
                                          const BettiOptions& opt = {});

/// The upper-Koszul complex of I at multidegree a: ground supp(a), faces all
/// squarefree w <= supp(a) with x^a / x^w in I. Small instances only (the
/// Betti engine uses faster internal routes); throws CapExceededError when
/// |supp(a)| > 25.
SimplicialComplexRec upper_koszul_complex(const MonomialIdeal& I,
                                          const std::vector<int>& a);

/// How the engine computed the homology at each multidegree (for tests).
enum class KoszulRoute { automatic, direct_only, nerve_only };

/// Complete Betti table via reduced homology of upper-Koszul complexes at
/// the lcm-lattice multidegrees: beta_{i,a}(I) = dim H~_{i-1}(K^a(I); F).
/// Entries at multidegrees outside the lattice are zero. Per multidegree the
/// engine short-circuits cone complexes, then either enumerates K^a directly
/// or computes the homotopy-equivalent nerve of its covering by the maximal
/// slack simplices of the dividing generators.
BettiTable multigraded_betti(const MonomialIdeal& I, const CoefficientField& F,
                             const BettiOptions& opt = {},
                             KoszulRoute route = KoszulRoute::automatic);

struct HomologicalInvariants {
  int pd_ideal = 0;
  int pd_quotient = 0;
  int depth_quotient = 0;
  int reg_ideal = 0;
  int indeg = 0;
};

/// pd/depth/reg/indeg for nonzero proper I. Both pd conventions are exposed;
/// depth is n - pd_quotient by Auslander-Buchsbaum.
HomologicalInvariants homological_invariants(const MonomialIdeal& I,
                                             const CoefficientField& F,
                                             const BettiOptions& opt = {});

HomologicalInvariants invariants_from_table(const BettiTable& table,
                                            const MonomialIdeal& I);

/// g_I(k) = depth(S/I^[k]) + |deg(I)| - n - (indeg(I^[k]) - 1), 1 <= k <= nu.
/// Requires a fully supported ideal. Each value is cross-computed through
/// the equivalent form |deg(I)| - pd(I^[k]) - indeg(I^[k]); disagreement is
/// an internal error.
struct NormalizedDepthProfile {
  std::map<int, int> values;
};

NormalizedDepthProfile normalized_depth(const MonomialIdeal& I,
                                        const CoefficientField& F,
                                        const BettiOptions& opt = {});

/// True iff all generators share one degree d and reg(I) = d (equivalently
/// beta_{i,j} = 0 unless j = d + i). Mixed degrees give false.
bool has_linear_resolution(const MonomialIdeal& I, const CoefficientField& F,
                           const BettiOptions& opt = {});

}  // namespace matchpow
