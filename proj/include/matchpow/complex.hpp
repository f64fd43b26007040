#pragma once

#include <cstdint>
#include <vector>

#include "matchpow/field.hpp"

namespace matchpow {

/// A simplicial complex with faces stored as bitmasks over a ground set.
/// `ground` optionally labels the bits (e.g. ambient variable indices for an
/// upper-Koszul complex); bit k of a face refers to ground[k] when labels are
/// present, otherwise to the abstract vertex k. The empty face (mask 0) is a
/// member of every nonvoid complex; the void complex (no faces at all) is
/// distinct from the irrelevant complex {[]}. Faces are kept sorted.
struct SimplicialComplexRec {
  int ground_size = 0;
  std::vector<int> ground;  // optional labels, size 0 or ground_size
  std::vector<std::uint64_t> faces;

  bool is_void() const { return faces.empty(); }
  bool is_irrelevant() const { return faces.size() == 1 && faces[0] == 0; }
  int dim() const;  // -1 for {[]}; -2 by convention when void

  /// Downward closure check, used by tests and debug assertions.
  bool is_valid() const;
};

/// Dimensions of reduced simplicial homology over F, computed by exact rank
/// of the boundary matrices. Entry [c] is dim H~_{c-1}, c = 0 .. dim+1, so
/// the irrelevant complex yields {1} (H~_{-1} = F) and the void complex
/// yields an empty vector (all homology zero).
std::vector<long> reduced_homology_dims(const SimplicialComplexRec& cx,
                                        const CoefficientField& F);

/// Same, on a raw face list (must be subset-closed, empty face included when
/// nonempty). `matrix_dim_cap` > 0 guards boundary-matrix sizes.
std::vector<long> reduced_homology_of_faces(const std::vector<std::uint64_t>& faces,
                                            const CoefficientField& F,
                                            int matrix_dim_cap = 0);

}  // namespace matchpow
