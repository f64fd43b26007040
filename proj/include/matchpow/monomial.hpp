#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "matchpow/errors.hpp"

namespace matchpow {

/// The ambient polynomial ring S = K[x_0,...,x_{n-1}], represented by its
/// ordered list of variable names. Variable order is the input order, never
/// alphabetical, so inputs print back in their own order. Immutable.
class Ambient {
 public:
  explicit Ambient(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const;
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a variable name, or -1 if absent.
  int index_of(const std::string& name) const;

  bool operator==(const Ambient& other) const { return names_ == other.names_; }
  bool operator!=(const Ambient& other) const { return !(*this == other); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

using AmbientPtr = std::shared_ptr<const Ambient>;

AmbientPtr make_ambient(std::vector<std::string> names);

/// Convenience: x1,...,xn.
AmbientPtr make_ambient(int n, const std::string& stem = "x");

/// A set of variable indices, kept sorted and duplicate-free (0-based).
using VarSubset = std::vector<int>;

/// A monomial as a dense exponent vector over a fixed ambient. The unit
/// monomial is the all-zero vector. Value type; the ambient is carried by
/// the enclosing ideal or passed alongside where names are needed.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e);

  int n() const { return static_cast<int>(exps.size()); }
  int degree() const;
  bool is_unit() const;
  int operator[](int i) const { return exps[static_cast<size_t>(i)]; }

  bool operator==(const Monomial& o) const { return exps == o.exps; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

/// { i : deg_{x_i}(u) > 0 }.
VarSubset support(const Monomial& u);

/// Support as a bitmask; requires n <= 64.
std::uint64_t support_mask(const Monomial& u);

/// deg_{x_i}(u); throws IndexError unless 0 <= i < n.
int var_degree(const Monomial& u, int i);

/// Componentwise max. Throws AmbientMismatchError on length mismatch.
Monomial lcm(const Monomial& u, const Monomial& v);

/// gcd, componentwise min.
Monomial gcd(const Monomial& u, const Monomial& v);

/// u | v, i.e. exps(u) <= exps(v) componentwise.
bool divides(const Monomial& u, const Monomial& v);

/// supp(u) and supp(v) disjoint, equivalently gcd(u,v) = 1.
bool support_disjoint(const Monomial& u, const Monomial& v);

Monomial product(const Monomial& u, const Monomial& v);

/// u / v; requires divides(v, u).
Monomial quotient(const Monomial& u, const Monomial& v);

/// Canonical generator order: total degree first, then within a degree the
/// lexicographically larger exponent vector first (x1^2x2^2 before x1^2x3^2).
bool canonical_less(const Monomial& u, const Monomial& v);

/// Render as a product of var^exp tokens, e.g. "x1^2*x3"; "1" for the unit.
std::string to_string(const Monomial& u, const Ambient& amb);

}  // namespace matchpow
