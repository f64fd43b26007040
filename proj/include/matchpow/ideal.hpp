#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchpow/monomial.hpp"

namespace matchpow {

/// A monomial ideal, stored as its unique minimal generating set G(I) in
/// canonical order (graded, then lexicographically larger first). The zero
/// ideal has an empty generator list; the whole ring is generated by the
/// unit monomial. Immutable after construction.
class MonomialIdeal {
 public:
  /// Minimizes, deduplicates and sorts the given generators.
  MonomialIdeal(AmbientPtr ambient, std::vector<Monomial> gens);

  static MonomialIdeal zero(AmbientPtr ambient);
  static MonomialIdeal whole_ring(AmbientPtr ambient);

  const AmbientPtr& ambient() const { return ambient_; }
  int n() const { return ambient_->size(); }
  const std::vector<Monomial>& gens() const { return gens_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }

  bool is_zero() const { return gens_.empty(); }
  bool is_whole_ring() const { return gens_.size() == 1 && gens_[0].is_unit(); }

  /// Membership test: some minimal generator divides u.
  bool contains(const Monomial& u) const;

  /// supp(I) = union of generator supports.
  VarSubset support() const;
  bool fully_supported() const;

  bool operator==(const MonomialIdeal& o) const;
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

 private:
  AmbientPtr ambient_;
  std::vector<Monomial> gens_;
};

/// Realizes G(I): drops strict multiples and duplicates, sorts canonically.
/// Sets *changed to whether the input was already minimal and sorted.
MonomialIdeal minimize_generators(AmbientPtr ambient, std::vector<Monomial> gens,
                                  bool* changed = nullptr);

/// Minimum total degree over G(I). Throws ZeroIdealError on the zero ideal.
int initial_degree(const MonomialIdeal& I);

/// deg(I): componentwise max of generator exponent vectors.
std::vector<int> bounding_multidegree(const MonomialIdeal& I);

/// |deg(I)| = sum of the bounding multidegree.
int bounding_multidegree_total(const MonomialIdeal& I);

/// sqrt(I), generated by the supports of G(I) as squarefree monomials.
MonomialIdeal radical(const MonomialIdeal& I);

bool is_squarefree(const MonomialIdeal& I);

/// Polarization I^p in the extended ambient with variables named
/// "<var>_<j>" for 1 <= j <= deg_{x_i}(I), ordered by (i, j).
/// Result is squarefree with the same number of generators.
MonomialIdeal polarize(const MonomialIdeal& I);

/// Inverse of polarize on its image: substitutes x_{i,j} -> x_i. The target
/// ambient must be supplied since the polarized ambient loses zero-degree
/// information. Used by tests and polarization property checks.
MonomialIdeal depolarize(const MonomialIdeal& P, AmbientPtr original_ambient);

/// Monomial localization I(P): substitute x_i -> 1 for i outside P, then
/// minimize. The result lives in the ambient restricted to P.
MonomialIdeal localize(const MonomialIdeal& I, const VarSubset& P);

/// Generator sets compared by variable *name*, so ideals in different
/// ambients (e.g. a localized polarization vs a radical) can be identified.
/// `rename` optionally maps names of `a` before comparison.
bool same_generators_by_name(
    const MonomialIdeal& a, const MonomialIdeal& b,
    const std::vector<std::pair<std::string, std::string>>& rename = {});

std::string to_string(const MonomialIdeal& I);

}  // namespace matchpow
