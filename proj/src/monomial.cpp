#include "matchpow/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace matchpow {

Ambient::Ambient(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InvalidArgumentError("ambient needs at least one variable");
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    const auto& nm = names_[static_cast<size_t>(i)];
    if (nm.empty()) throw InvalidArgumentError("empty variable name");
    if (!index_.emplace(nm, i).second)
      throw InvalidArgumentError("duplicate variable name: " + nm);
  }
}

const std::string& Ambient::name(int i) const {
  if (i < 0 || i >= size()) throw IndexError("variable index out of range");
  return names_[static_cast<size_t>(i)];
}

int Ambient::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

AmbientPtr make_ambient(std::vector<std::string> names) {
  return std::make_shared<const Ambient>(std::move(names));
}

AmbientPtr make_ambient(int n, const std::string& stem) {
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return make_ambient(std::move(names));
}

Monomial::Monomial(std::vector<int> e) : exps(std::move(e)) {
  for (int x : exps)
    if (x < 0) throw InvalidArgumentError("negative exponent");
}

int Monomial::degree() const {
  return std::accumulate(exps.begin(), exps.end(), 0);
}

bool Monomial::is_unit() const {
  return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

VarSubset support(const Monomial& u) {
  VarSubset s;
  for (int i = 0; i < u.n(); ++i)
    if (u[i] > 0) s.push_back(i);
  return s;
}

std::uint64_t support_mask(const Monomial& u) {
  if (u.n() > 64) throw CapExceededError("support_mask requires n <= 64");
  std::uint64_t m = 0;
  for (int i = 0; i < u.n(); ++i)
    if (u[i] > 0) m |= std::uint64_t{1} << i;
  return m;
}

int var_degree(const Monomial& u, int i) {
  if (i < 0 || i >= u.n()) throw IndexError("variable index out of range");
  return u[i];
}

static void check_same_n(const Monomial& u, const Monomial& v) {
  if (u.n() != v.n()) throw AmbientMismatchError("monomials from different ambients");
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  check_same_n(u, v);
  std::vector<int> e(u.exps);
  for (int i = 0; i < v.n(); ++i) e[static_cast<size_t>(i)] = std::max(e[static_cast<size_t>(i)], v[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  check_same_n(u, v);
  std::vector<int> e(u.exps);
  for (int i = 0; i < v.n(); ++i) e[static_cast<size_t>(i)] = std::min(e[static_cast<size_t>(i)], v[i]);
  return Monomial(std::move(e));
}

bool divides(const Monomial& u, const Monomial& v) {
  check_same_n(u, v);
  for (int i = 0; i < u.n(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

bool support_disjoint(const Monomial& u, const Monomial& v) {
  check_same_n(u, v);
  for (int i = 0; i < u.n(); ++i)
    if (u[i] > 0 && v[i] > 0) return false;
  return true;
}

Monomial product(const Monomial& u, const Monomial& v) {
  check_same_n(u, v);
  std::vector<int> e(u.exps);
  for (int i = 0; i < v.n(); ++i) e[static_cast<size_t>(i)] += v[i];
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& u, const Monomial& v) {
  if (!divides(v, u)) throw InvalidArgumentError("quotient: divisor does not divide");
  std::vector<int> e(u.exps);
  for (int i = 0; i < v.n(); ++i) e[static_cast<size_t>(i)] -= v[i];
  return Monomial(std::move(e));
}

bool canonical_less(const Monomial& u, const Monomial& v) {
  int du = u.degree(), dv = v.degree();
  if (du != dv) return du < dv;
  // within a degree: lexicographically larger vector first
  return u.exps > v.exps;
}

std::string to_string(const Monomial& u, const Ambient& amb) {
  if (u.n() != amb.size()) throw AmbientMismatchError("monomial/ambient size mismatch");
  std::string out;
  for (int i = 0; i < u.n(); ++i) {
    if (u[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += amb.name(i);
    if (u[i] > 1) out += "^" + std::to_string(u[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace matchpow
