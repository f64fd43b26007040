#include "matchpow/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace matchpow {

static std::vector<Monomial> minimal_sorted(const Ambient& amb, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.n() != amb.size())
      throw AmbientMismatchError("generator length does not match ambient");
  // unit generator swallows everything
  for (const auto& g : gens)
    if (g.is_unit()) return {Monomial(std::vector<int>(static_cast<size_t>(amb.size()), 0))};
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && divides(gens[j], gens[i]) && gens[j] != gens[i]) redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(AmbientPtr ambient, std::vector<Monomial> gens)
    : ambient_(std::move(ambient)) {
  if (!ambient_) throw InvalidArgumentError("null ambient");
  gens_ = minimal_sorted(*ambient_, std::move(gens));
}

MonomialIdeal MonomialIdeal::zero(AmbientPtr ambient) {
  return MonomialIdeal(std::move(ambient), {});
}

MonomialIdeal MonomialIdeal::whole_ring(AmbientPtr ambient) {
  std::vector<int> e(static_cast<size_t>(ambient->size()), 0);
  return MonomialIdeal(std::move(ambient), {Monomial(e)});
}

bool MonomialIdeal::contains(const Monomial& u) const {
  for (const auto& g : gens_)
    if (divides(g, u)) return true;
  return false;
}

VarSubset MonomialIdeal::support() const {
  std::set<int> s;
  for (const auto& g : gens_)
    for (int i : matchpow::support(g)) s.insert(i);
  return VarSubset(s.begin(), s.end());
}

bool MonomialIdeal::fully_supported() const {
  return static_cast<int>(support().size()) == n();
}

bool MonomialIdeal::operator==(const MonomialIdeal& o) const {
  return *ambient_ == *o.ambient_ && gens_ == o.gens_;
}

MonomialIdeal minimize_generators(AmbientPtr ambient, std::vector<Monomial> gens,
                                  bool* changed) {
  MonomialIdeal I(ambient, gens);
  if (changed) {
    // reordering is not a change; dropped duplicates or multiples are
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    *changed = !(I.gens() == gens);
  }
  return I;
}

static void require_nonzero(const MonomialIdeal& I, const char* op) {
  if (I.is_zero()) throw ZeroIdealError(std::string(op) + ": zero ideal");
}

int initial_degree(const MonomialIdeal& I) {
  require_nonzero(I, "initial_degree");
  int d = I.gens()[0].degree();
  for (const auto& g : I.gens()) d = std::min(d, g.degree());
  return d;
}

std::vector<int> bounding_multidegree(const MonomialIdeal& I) {
  require_nonzero(I, "bounding_multidegree");
  std::vector<int> deg(static_cast<size_t>(I.n()), 0);
  for (const auto& g : I.gens())
    for (int i = 0; i < I.n(); ++i)
      deg[static_cast<size_t>(i)] = std::max(deg[static_cast<size_t>(i)], g[i]);
  return deg;
}

int bounding_multidegree_total(const MonomialIdeal& I) {
  auto d = bounding_multidegree(I);
  int s = 0;
  for (int x : d) s += x;
  return s;
}

MonomialIdeal radical(const MonomialIdeal& I) {
  require_nonzero(I, "radical");
  std::vector<Monomial> gens;
  for (const auto& g : I.gens()) {
    std::vector<int> e(g.exps);
    for (auto& x : e) x = x > 0 ? 1 : 0;
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(I.ambient(), std::move(gens));
}

bool is_squarefree(const MonomialIdeal& I) {
  for (const auto& g : I.gens())
    for (int x : g.exps)
      if (x > 1) return false;
  return true;
}

MonomialIdeal polarize(const MonomialIdeal& I) {
  require_nonzero(I, "polarize");
  const auto deg = bounding_multidegree(I);
  std::vector<std::string> names;
  // first polarized index of each original variable
  std::vector<int> base(static_cast<size_t>(I.n()), -1);
  for (int i = 0; i < I.n(); ++i) {
    base[static_cast<size_t>(i)] = static_cast<int>(names.size());
    for (int j = 1; j <= deg[static_cast<size_t>(i)]; ++j)
      names.push_back(I.ambient()->name(i) + "_" + std::to_string(j));
  }
  auto amb = make_ambient(std::move(names));
  std::vector<Monomial> gens;
  for (const auto& g : I.gens()) {
    std::vector<int> e(static_cast<size_t>(amb->size()), 0);
    for (int i = 0; i < I.n(); ++i)
      for (int j = 0; j < g[i]; ++j)
        e[static_cast<size_t>(base[static_cast<size_t>(i)] + j)] = 1;
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(std::move(amb), std::move(gens));
}

MonomialIdeal depolarize(const MonomialIdeal& P, AmbientPtr original_ambient) {
  std::vector<Monomial> gens;
  for (const auto& g : P.gens()) {
    std::vector<int> e(static_cast<size_t>(original_ambient->size()), 0);
    for (int i = 0; i < P.n(); ++i) {
      if (g[i] == 0) continue;
      const std::string& nm = P.ambient()->name(i);
      auto pos = nm.rfind('_');
      if (pos == std::string::npos)
        throw InvalidArgumentError("depolarize: variable not of the form v_j: " + nm);
      int k = original_ambient->index_of(nm.substr(0, pos));
      if (k < 0)
        throw InvalidArgumentError("depolarize: unknown base variable in " + nm);
      e[static_cast<size_t>(k)] += g[i];
    }
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(std::move(original_ambient), std::move(gens));
}

MonomialIdeal localize(const MonomialIdeal& I, const VarSubset& P) {
  require_nonzero(I, "localize");
  for (int i : P)
    if (i < 0 || i >= I.n()) throw IndexError("localize: index out of range");
  std::vector<int> keep(P);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw InvalidArgumentError("localize: empty prime");
  std::vector<std::string> names;
  for (int i : keep) names.push_back(I.ambient()->name(i));
  auto amb = make_ambient(std::move(names));
  std::vector<Monomial> gens;
  for (const auto& g : I.gens()) {
    std::vector<int> e;
    e.reserve(keep.size());
    for (int i : keep) e.push_back(g[i]);
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(std::move(amb), std::move(gens));
}

bool same_generators_by_name(
    const MonomialIdeal& a, const MonomialIdeal& b,
    const std::vector<std::pair<std::string, std::string>>& rename) {
  std::map<std::string, std::string> rn(rename.begin(), rename.end());
  auto key = [&](const MonomialIdeal& I, bool apply_rename) {
    std::set<std::map<std::string, int>> gens;
    for (const auto& g : I.gens()) {
      std::map<std::string, int> m;
      for (int i = 0; i < I.n(); ++i) {
        if (g[i] == 0) continue;
        std::string nm = I.ambient()->name(i);
        if (apply_rename) {
          auto it = rn.find(nm);
          if (it != rn.end()) nm = it->second;
        }
        m[nm] += g[i];
      }
      gens.insert(std::move(m));
    }
    return gens;
  };
  return key(a, true) == key(b, false);
}

std::string to_string(const MonomialIdeal& I) {
  if (I.is_zero()) return "(0)";
  std::string out = "(";
  for (size_t i = 0; i < I.gens().size(); ++i) {
    if (i) out += ", ";
    out += to_string(I.gens()[i], *I.ambient());
  }
  return out + ")";
}

}  // namespace matchpow
