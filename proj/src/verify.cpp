#include "matchpow/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "matchpow/io.hpp"

namespace matchpow {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::hypothesis_not_met: return "hypothesis-not-met";
  }
  return "?";
}

nlohmann::json report_to_json(const CheckReport& r) {
  nlohmann::json j;
  j["check_id"] = r.check_id;
  j["instance"] = r.instance;
  j["verdict"] = verdict_name(r.verdict);
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (r.flagged) j["flagged"] = true;
  if (r.conjecture) j["conjecture"] = true;
  j["ms"] = r.ms;
  if (!r.witness.is_null()) j["witness"] = r.witness;
  return j;
}

bool any_violation(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) {
    return r.verdict == Verdict::violated && !r.conjecture;
  });
}

BettiOptions betti_options_for(const MonomialIdeal& I, BettiOptions base) {
  // in a small ambient the lattice is bounded by the number of distinct
  // joins, so the generator cap is not load-bearing
  if (I.n() <= 10) base.max_gens = std::max(base.max_gens, 128);
  return base;
}

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
CheckReport run_check(const std::string& id, const std::string& instance, F&& body) {
  CheckReport r;
  r.check_id = id;
  r.instance = instance;
  auto t0 = Clock::now();
  try {
    body(r);
  } catch (const CapExceededError& e) {
    r.verdict = Verdict::hypothesis_not_met;
    r.detail = std::string("caps exceeded: ") + e.what();
  }
  r.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return r;
}

void require(CheckReport& r, bool ok, const std::string& fail_detail,
             nlohmann::json witness = {}) {
  if (r.verdict == Verdict::violated) return;  // keep the first failure
  if (!ok) {
    r.verdict = Verdict::violated;
    r.detail = fail_detail;
    r.witness = std::move(witness);
  }
}

std::string brief(const MonomialIdeal& I) {
  std::string s = to_string(I);
  if (s.size() > 120) s = s.substr(0, 117) + "...";
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// verify_core

std::vector<CheckReport> verify_core(const MonomialIdeal& I, const VerifyOptions& opt) {
  std::vector<CheckReport> out;
  const std::string inst = brief(I);
  if (I.is_zero() || I.is_whole_ring() || !I.fully_supported()) {
    out.push_back(run_check("core/preconditions", inst, [&](CheckReport& r) {
      r.verdict = Verdict::hypothesis_not_met;
      r.detail = "needs a nonzero, proper, fully supported ideal";
    }));
    return out;
  }
  const auto bopt = betti_options_for(I, opt.betti);
  const int n = I.n();
  const int deg_total = bounding_multidegree_total(I);
  const int nu = monomial_grade(I);
  const MonomialIdeal P = polarize(I);
  const auto popt = betti_options_for(P, opt.betti);

  out.push_back(run_check("core/polarization-nu", inst, [&](CheckReport& r) {
    int nup = monomial_grade(P);
    require(r, nup == nu, "nu(I) = " + std::to_string(nu) + " but nu(I^p) = " + std::to_string(nup),
            ideal_to_json(I));
  }));

  for (int k = 1; k <= nu; ++k) {
    MonomialIdeal Jk = matching_power(I, k);
    MonomialIdeal Pk = matching_power(P, k);
    const std::string kinst = inst + ", k=" + std::to_string(k);

    out.push_back(run_check("core/depth-lower-bound", kinst, [&](CheckReport& r) {
      auto inv = homological_invariants(Jk, opt.field, bopt);
      int lower = inv.indeg - 1 + (n - deg_total);
      require(r, inv.depth_quotient >= lower,
              "depth " + std::to_string(inv.depth_quotient) + " < bound " + std::to_string(lower),
              ideal_to_json(I));
      int g = inv.depth_quotient + deg_total - n - (inv.indeg - 1);
      require(r, g >= 0, "g_I(" + std::to_string(k) + ") = " + std::to_string(g) + " < 0",
              ideal_to_json(I));
    }));

    out.push_back(run_check("core/polarization-power", kinst, [&](CheckReport& r) {
      require(r, same_generators_by_name(polarize(Jk), Pk),
              "(I^[k])^p and (I^p)^[k] have different generators", ideal_to_json(I));
    }));

    out.push_back(run_check("core/polarization-depth", kinst, [&](CheckReport& r) {
      auto a = homological_invariants(Jk, opt.field, bopt);
      auto b = homological_invariants(Pk, opt.field, popt);
      require(r, a.depth_quotient == b.depth_quotient - deg_total + n,
              "depth(S/I^[k]) = " + std::to_string(a.depth_quotient) +
                  " != " + std::to_string(b.depth_quotient) + " - |deg(I)| + n",
              ideal_to_json(I));
    }));
  }

  out.push_back(run_check("core/polarization-g", inst, [&](CheckReport& r) {
    auto gI = normalized_depth(I, opt.field, bopt);
    auto gP = normalized_depth(P, opt.field, popt);
    require(r, gI.values == gP.values, "g_I and g_{I^p} differ", ideal_to_json(I));
  }));

  if (single_degree(I) == 2) {
    const std::string qinst = inst + " (quadratic)";
    MonomialIdeal top = matching_power(I, nu);
    out.push_back(run_check("core/quadratic-g-top", qinst, [&](CheckReport& r) {
      auto g = normalized_depth(I, opt.field, bopt);
      require(r, g.values.at(nu) == 0,
              "g_I(nu) = " + std::to_string(g.values.at(nu)) + " != 0", ideal_to_json(I));
    }));
    out.push_back(run_check("core/quadratic-top-polymatroidal", qinst, [&](CheckReport& r) {
      auto p = is_polymatroidal(top);
      require(r, p.value, "I^[nu] is not polymatroidal: " + p.describe(top),
              ideal_to_json(top));
    }));
    out.push_back(run_check("core/quadratic-top-reg", qinst, [&](CheckReport& r) {
      auto inv = homological_invariants(top, opt.field, betti_options_for(top, opt.betti));
      require(r, inv.reg_ideal == 2 * nu,
              "reg(I^[nu]) = " + std::to_string(inv.reg_ideal) + " != " + std::to_string(2 * nu),
              ideal_to_json(top));
    }));
  }
  return out;
}

// ---------------------------------------------------------------------------
// verify_graph

namespace {

int induced_path_vertex_count(const SimpleGraph& G) {
  // l(D) counts the vertices of a longest induced path
  return longest_induced_path(G) + 1;
}

int pd_bound_formula(int ell, int k) {
  int third = (ell + 2) / 3;  // ceil(ell/3)
  if (k <= third) return ell - third - k;
  return ell - 2 * k;
}

}  // namespace

std::vector<CheckReport> verify_graph(const WeightedOrientedGraph& D, int k,
                                      const VerifyOptions& opt) {
  std::vector<CheckReport> out;
  auto bad = validate_weights(D);
  if (!bad.empty()) throw WeightError("verify_graph: sources with weight > 1");
  SimpleGraph G = D.underlying();
  const MonomialIdeal ID = oriented_edge_ideal(D);
  const MonomialIdeal IG = edge_ideal(G);
  std::string inst = "D on " + std::to_string(D.n()) + " vertices, " +
                     std::to_string(D.arcs().size()) + " arcs, k=" + std::to_string(k);
  const int nuG = matching_number(G);
  if (k < 1 || k > nuG) {
    out.push_back(run_check("graph/preconditions", inst, [&](CheckReport& r) {
      r.verdict = Verdict::hypothesis_not_met;
      r.detail = "k outside 1..nu(G)";
    }));
    return out;
  }

  out.push_back(run_check("graph/comparison-a", inst, [&](CheckReport& r) {
    int a = monomial_grade(ID), b = monomial_grade(IG);
    require(r, a == nuG && b == nuG,
            "nu(I(D)) = " + std::to_string(a) + ", nu(I(G)) = " + std::to_string(b) +
                ", nu(G) = " + std::to_string(nuG),
            graph_to_json(D));
  }));

  const MonomialIdeal IDk = matching_power(ID, k);
  const MonomialIdeal IGk = matching_power(IG, k);
  BettiTable tD, tG;
  try {
    tD = multigraded_betti(IDk, opt.field, betti_options_for(IDk, opt.betti));
    tG = multigraded_betti(IGk, opt.field, betti_options_for(IGk, opt.betti));
  } catch (const CapExceededError& e) {
    out.push_back(run_check("graph/caps", inst, [&](CheckReport& r) {
      r.verdict = Verdict::hypothesis_not_met;
      r.detail = std::string("caps exceeded: ") + e.what();
    }));
    return out;
  }

  out.push_back(run_check("graph/comparison-b", inst, [&](CheckReport& r) {
    require(r, tG.pd_ideal() <= tD.pd_ideal(),
            "pd " + std::to_string(tG.pd_ideal()) + " > " + std::to_string(tD.pd_ideal()),
            graph_to_json(D));
  }));
  out.push_back(run_check("graph/comparison-c", inst, [&](CheckReport& r) {
    require(r, tG.regularity() <= tD.regularity(),
            "reg " + std::to_string(tG.regularity()) + " > " + std::to_string(tD.regularity()),
            graph_to_json(D));
  }));
  out.push_back(run_check("graph/comparison-d", inst, [&](CheckReport& r) {
    for (int i = 0; i <= std::max(tG.pd_ideal(), tD.pd_ideal()); ++i)
      require(r, tG.total(i) <= tD.total(i),
              "beta_" + std::to_string(i) + ": " + std::to_string(tG.total(i)) + " > " +
                  std::to_string(tD.total(i)),
              graph_to_json(D));
  }));
  out.push_back(run_check("graph/comparison-e", inst, [&](CheckReport& r) {
    auto gD = normalized_depth(ID, opt.field, betti_options_for(ID, opt.betti));
    auto gG = normalized_depth(IG, opt.field, betti_options_for(IG, opt.betti));
    long wsum = std::accumulate(D.weights().begin(), D.weights().end(), 0L);
    long rhs = gG.values.at(k) + wsum - D.n();
    require(r, gD.values.at(k) <= rhs,
            "g_{I(D)}(k) = " + std::to_string(gD.values.at(k)) + " > " + std::to_string(rhs),
            graph_to_json(D));
  }));

  out.push_back(run_check("graph/restriction-lemma", inst, [&](CheckReport& r) {
    std::vector<VarSubset> subsets;
    for (int drop = 0; drop < D.n(); ++drop) {
      VarSubset W;
      for (int v = 0; v < D.n(); ++v)
        if (v != drop) W.push_back(v);
      subsets.push_back(W);
    }
    std::mt19937_64 rng(opt.seed * 7919 + 13);
    for (int s = 0; s < opt.restriction_samples; ++s) {
      VarSubset W;
      for (int v = 0; v < D.n(); ++v)
        if (rng() % 3) W.push_back(v);
      if (W.size() >= 2) subsets.push_back(W);
    }
    for (const auto& W : subsets) {
      MonomialIdeal IDp = oriented_edge_ideal_in_parent(D, W);
      if (IDp.is_zero()) continue;
      if (monomial_grade(IDp) < k) continue;  // I(D')^[k] = 0, trivially holds
      MonomialIdeal IDpk = matching_power(IDp, k);
      BettiTable tP = multigraded_betti(IDpk, opt.field, betti_options_for(IDpk, opt.betti));
      for (const auto& [key, dim] : tP.multigraded) {
        auto it = tD.multigraded.find(key);
        long big = it == tD.multigraded.end() ? 0 : it->second;
        require(r, dim <= big,
                "beta_{i,a} of the induced subgraph exceeds the graph's", graph_to_json(D));
      }
    }
  }));

  out.push_back(run_check("graph/reg-lower-bound", inst, [&](CheckReport& r) {
    int im = induced_matching_number(G);
    if (k > im) {
      r.verdict = Verdict::hypothesis_not_met;
      r.detail = "k > im(G)";
      return;
    }
    long wim = weighted_induced_matching_number(D);
    require(r, tD.regularity() >= wim + k,
            "reg = " + std::to_string(tD.regularity()) + " < wim + k = " +
                std::to_string(wim + k),
            graph_to_json(D));
  }));

  out.push_back(run_check("graph/nu-path-bound", inst, [&](CheckReport& r) {
    int ell = induced_path_vertex_count(G);
    require(r, monomial_grade(ID) >= ell / 2,
            "nu(I(D)) < floor(l/2) = " + std::to_string(ell / 2), graph_to_json(D));
  }));

  out.push_back(run_check("graph/pd-lower-bound", inst, [&](CheckReport& r) {
    int ell = induced_path_vertex_count(G);
    if (k > ell / 2) {
      r.verdict = Verdict::hypothesis_not_met;
      r.detail = "k > floor(l/2)";
      return;
    }
    int bound = pd_bound_formula(ell, k);
    require(r, tD.pd_ideal() >= bound,
            "pd = " + std::to_string(tD.pd_ideal()) + " < " + std::to_string(bound),
            graph_to_json(D));
  }));

  return out;
}

// ---------------------------------------------------------------------------
// verify_linearity

std::vector<CheckReport> verify_linearity(const WeightedOrientedGraph& D, int k,
                                          const VerifyOptions& opt) {
  std::vector<CheckReport> out;
  auto bad = validate_weights(D);
  if (!bad.empty()) throw WeightError("verify_linearity: sources with weight > 1");
  SimpleGraph G = D.underlying();
  const MonomialIdeal ID = oriented_edge_ideal(D);
  const MonomialIdeal IG = edge_ideal(G);
  const bool no_even_cycle = !block_structure(G).has_even_cycle;
  const bool nontrivial = !(ID == IG);
  const int nuG = matching_number(G);
  std::string inst = "D on " + std::to_string(D.n()) + " vertices, " +
                     std::to_string(D.arcs().size()) + " arcs, k=" + std::to_string(k);

  if (k < 1 || k > nuG) {
    out.push_back(run_check("linearity/preconditions", inst, [&](CheckReport& r) {
      r.verdict = Verdict::hypothesis_not_met;
      r.detail = "k outside 1..nu(G)";
    }));
    return out;
  }

  const MonomialIdeal IDk = matching_power(ID, k);
  const auto linrel = is_linearly_related(IDk);
  const auto polym = is_polymatroidal(IDk);
  bool linres = false;
  bool have_table = false;
  BettiTable tD;
  try {
    tD = multigraded_betti(IDk, opt.field, betti_options_for(IDk, opt.betti));
    have_table = true;
    auto d = single_degree(IDk);
    linres = d && tD.regularity() == *d;
  } catch (const CapExceededError&) {
    have_table = false;
  }

  out.push_back(run_check("linearity/criterion-vs-betti", inst, [&](CheckReport& r) {
    if (!have_table) {
      r.verdict = Verdict::hypothesis_not_met;
      r.detail = "caps exceeded computing the Betti table";
      return;
    }
    require(r, linrel_agrees_with_first_syzygies(IDk, tD),
            "syzygy-graph criterion disagrees with the beta_{1,j} test", ideal_to_json(IDk));
  }));

  out.push_back(run_check("linearity/only-last-power", inst, [&](CheckReport& r) {
    if (!no_even_cycle || !nontrivial) {
      r.verdict = Verdict::hypothesis_not_met;
      r.detail = !no_even_cycle ? "G has an even cycle" : "I(D) = I(G)";
      return;
    }
    if (linrel.value)
      require(r, k == nuG,
              "I(D)^[k] linearly related at k = " + std::to_string(k) +
                  " != nu(G) = " + std::to_string(nuG),
              graph_to_json(D));
    else
      r.detail = "not linearly related; implication is vacuous";
  }));

  out.push_back(run_check("linearity/characterization", inst, [&](CheckReport& r) {
    if (!no_even_cycle || !nontrivial) {
      r.verdict = Verdict::hypothesis_not_met;
      r.detail = !no_even_cycle ? "G has an even cycle" : "I(D) = I(G)";
      return;
    }
    if (!have_table) {
      r.verdict = Verdict::hypothesis_not_met;
      r.detail = "caps exceeded computing the Betti table";
      return;
    }
    require(r, linrel.value == polym.value && polym.value == linres,
            "linrel=" + std::to_string(linrel.value) + " polym=" + std::to_string(polym.value) +
                " linres=" + std::to_string(linres),
            ideal_to_json(IDk));
  }));

  out.push_back(run_check("linearity/distinct-support", inst, [&](CheckReport& r) {
    if (!no_even_cycle) {
      r.verdict = Verdict::hypothesis_not_met;
      r.detail = "G has an even cycle";
      return;
    }
    for (int a = 0; a < IDk.num_gens(); ++a)
      for (int b = a + 1; b < IDk.num_gens(); ++b)
        require(r,
                support(IDk.gens()[static_cast<size_t>(a)]) !=
                    support(IDk.gens()[static_cast<size_t>(b)]),
                "two distinct generators share a support", ideal_to_json(IDk));
  }));

  out.push_back(run_check("linearity/single-degree-lemma", inst, [&](CheckReport& r) {
    // if I^[k] is equigenerated and k < nu, then I^[k] sits in degree dk,
    // I^[k+1] in degree d(k+1), and the matching factors have degree d
    auto dk = single_degree(IDk);
    int nuI = monomial_grade(ID);
    if (!dk || k >= nuI) {
      r.verdict = Verdict::hypothesis_not_met;
      r.detail = !dk ? "I^[k] has mixed degrees" : "k = nu";
      return;
    }
    require(r, *dk % k == 0, "generating degree is not a multiple of k", ideal_to_json(IDk));
    if (r.verdict == Verdict::violated) return;
    int d = *dk / k;
    MonomialIdeal next = matching_power(ID, k + 1);
    auto dk1 = single_degree(next);
    require(r, dk1.has_value() && *dk1 == d * (k + 1),
            "I^[k+1] is not generated in degree d(k+1)", ideal_to_json(next));
    for (const auto& M : generator_matchings(ID, k + 1)) {
      Monomial prod(std::vector<int>(static_cast<size_t>(ID.n()), 0));
      for (int gi : M) prod = product(prod, ID.gens()[static_cast<size_t>(gi)]);
      bool minimal = false;
      for (const auto& g : next.gens())
        if (g == prod) minimal = true;
      if (!minimal) continue;
      for (int gi : M)
        require(r, ID.gens()[static_cast<size_t>(gi)].degree() == d,
                "a factor of a minimal generator of I^[k+1] has degree != d",
                ideal_to_json(next));
    }
  }));

  out.push_back(run_check("linearity/consecutive-powers", inst, [&](CheckReport& r) {
    // the premises: all generators of I(D) have support of size 2 (always
    // true for oriented edge ideals), I^[k] linearly related, k < nu, and
    // the generators of I^[k+1] have pairwise distinct supports
    if (!(linrel.value && k < monomial_grade(ID))) {
      r.verdict = Verdict::hypothesis_not_met;
      r.detail = "premises not met (I^[k] not linearly related or k = nu)";
      return;
    }
    MonomialIdeal next = matching_power(ID, k + 1);
    for (int a = 0; a < next.num_gens(); ++a)
      for (int b = a + 1; b < next.num_gens(); ++b)
        if (support(next.gens()[static_cast<size_t>(a)]) ==
            support(next.gens()[static_cast<size_t>(b)])) {
          r.verdict = Verdict::hypothesis_not_met;
          r.detail = "I^[k+1] has two generators with equal support";
          return;
        }
    require(r, is_linearly_related(next).value,
            "I^[k+1] is not linearly related despite the hypotheses", ideal_to_json(next));
  }));

  return out;
}

bool linrel_agrees_with_first_syzygies(const MonomialIdeal& I, const BettiTable& t) {
  auto d = single_degree(I);
  bool by_criterion = is_linearly_related(I).value;
  if (!d) return by_criterion == false;
  bool by_betti = true;
  for (const auto& [key, dim] : t.graded)
    if (key.first == 1 && dim > 0 && key.second != *d + 1) by_betti = false;
  return by_criterion == by_betti;
}

// ---------------------------------------------------------------------------
// reproduce_examples

namespace {

MonomialIdeal mk_text(const std::string& text) { return parse_ideal_text(text).ideal; }

}  // namespace

std::vector<CheckReport> reproduce_examples(const VerifyOptions& opt) {
  std::vector<CheckReport> out;
  const auto F = opt.field;

  out.push_back(run_check("examples/matching-powers-lists", "(x1^2, x2^2, x3^2, x3x4, x5^5)", [&](CheckReport& r) {
    auto I = mk_text("x1^2\nx2^2\nx3^2\nx3*x4\nx5^5\n");
    require(r, monomial_grade(I) == 4, "nu != 4", ideal_to_json(I));
    require(r,
            matching_power(I, 2) ==
                mk_text("x1^2*x2^2\nx1^2*x3^2\nx1^2*x3*x4\nx1^2*x5^5\nx2^2*x3^2\n"
                        "x2^2*x3*x4\nx2^2*x5^5\nx3^2*x5^5\nx3*x4*x5^5\n"),
            "I^[2] differs from the listed generators");
    require(r,
            matching_power(I, 3) ==
                mk_text("x1^2*x2^2*x3^2\nx1^2*x2^2*x3*x4\nx1^2*x2^2*x5^5\nx1^2*x3^2*x5^5\n"
                        "x1^2*x3*x4*x5^5\nx2^2*x3^2*x5^5\nx2^2*x3*x4*x5^5\n"),
            "I^[3] differs from the listed generators");
    require(r, matching_power(I, 4) == mk_text("# vars: x1 x2 x3 x4 x5\nx1^2*x2^2*x3^2*x5^5\nx1^2*x2^2*x3*x4*x5^5\n"),
            "I^[4] differs from the listed generators");
  }));

  out.push_back(run_check("examples/complete-intersection", "(x1^2, x2^3, x3x4)", [&](CheckReport& r) {
    auto I = mk_text("x1^2\nx2^3\nx3*x4\n");
    require(r, monomial_grade(I) == 3, "nu != m for a complete intersection");
    require(r, matching_power(I, 2).num_gens() == 3, "expected all 2-fold products");
    require(r, matching_power(I, 3) == mk_text("x1^2*x2^3*x3*x4\n"), "expected the full product");
  }));

  out.push_back(run_check("examples/squarefree-power", "I(C5)", [&](CheckReport& r) {
    auto I = mk_text("x1*x2\nx2*x3\nx3*x4\nx4*x5\nx5*x1\n");
    // brute squarefree part of I^2
    std::vector<Monomial> sq;
    for (const auto& u : I.gens())
      for (const auto& v : I.gens()) {
        Monomial p = product(u, v);
        if (*std::max_element(p.exps.begin(), p.exps.end()) <= 1) sq.push_back(p);
      }
    require(r, matching_power(I, 2) == MonomialIdeal(I.ambient(), sq),
            "matching power differs from the squarefree power");
  }));

  out.push_back(run_check("examples/polarization-not-polymatroidal", "(x1^2, x1x2, x2^2)",
                          [&](CheckReport& r) {
    auto I = mk_text("x1^2\nx1*x2\nx2^2\n");
    require(r, is_polymatroidal(I).value, "I should be polymatroidal");
    require(r, !is_polymatroidal(polarize(I)).value, "I^p should not be polymatroidal");
  }));

  out.push_back(run_check("examples/four-cycle", "oriented C4, all weights 2", [&](CheckReport& r) {
    WeightedOrientedGraph D({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
                            {2, 2, 2, 2});
    auto ID = oriented_edge_ideal(D);
    auto IG = edge_ideal(D.underlying());
    auto ID2 = matching_power(ID, 2);
    auto IG2 = matching_power(IG, 2);
    require(r, IG2 == mk_text("a*b*c*d\n"), "I(G)^[2] != (abcd)");
    require(r, ID2 == mk_text("a*b^2*c*d^2\na^2*b*c^2*d\n"), "I(D)^[2] generators differ");
    auto invG = homological_invariants(IG2, F, opt.betti);
    auto invD = homological_invariants(ID2, F, opt.betti);
    // the displayed pd values follow the quotient convention
    require(r, invG.pd_quotient == 1 && invD.pd_quotient == 2,
            "pd " + std::to_string(invG.pd_quotient) + "," + std::to_string(invD.pd_quotient));
    require(r, invG.pd_ideal == 0 && invD.pd_ideal == 1, "ideal-convention pd values");
    require(r, invG.reg_ideal == 4 && invD.reg_ideal == 7,
            "reg " + std::to_string(invG.reg_ideal) + "," + std::to_string(invD.reg_ideal));
    auto tG = multigraded_betti(IG2, F, opt.betti);
    auto tD = multigraded_betti(ID2, F, opt.betti);
    require(r, tG.total(1) == 0 && tD.total(1) == 1, "beta_1 values");
    // radical identity from the comparison proof
    require(r, radical(ID2) == IG2, "sqrt(I(D)^[2]) != I(G)^[2]");
    // the localization identification: (J^p)(P) with first polarized slots
    auto P2 = polarize(ID2);
    VarSubset first;
    std::vector<std::pair<std::string, std::string>> rename;
    for (int i = 0; i < P2.n(); ++i) {
      const auto& nm = P2.ambient()->name(i);
      if (nm.size() >= 2 && nm.substr(nm.size() - 2) == "_1") {
        first.push_back(i);
        rename.push_back({nm, nm.substr(0, nm.size() - 2)});
      }
    }
    require(r, same_generators_by_name(localize(P2, first), radical(ID2), rename),
            "(J^p)(P) does not identify with sqrt(J)");

    // the definition gives g_{I(G)}(2) = 0 while the worked example displays
    // 1; recompute and flag the divergence without failing
    auto gG = normalized_depth(IG, F, opt.betti);
    auto gD = normalized_depth(ID, F, opt.betti);
    require(r, gD.values.at(2) == 1, "g_{I(D)}(2) != 1");
    long wsum = 8;
    require(r, gD.values.at(2) <= gG.values.at(2) + wsum - 4, "comparison (e) fails");
    if (gG.values.at(2) != 1) {
      r.flagged = true;
      r.detail = "the worked example displays g_{I(G)}(2)=1; the definition yields " +
                 std::to_string(gG.values.at(2)) +
                 " (g of a quadratic ideal vanishes at k=nu); comparison (e) holds either way";
    }
  }));

  out.push_back(run_check("examples/cubic-counterexample", "(x1x2^2, x2x3^2, x3x4^2, x4x1^2)",
                          [&](CheckReport& r) {
    auto I = mk_text("x1*x2^2\nx2*x3^2\nx3*x4^2\nx4*x1^2\n");
    require(r, monomial_grade(I) == 2, "nu != 2");
    auto g = normalized_depth(I, F, opt.betti);
    require(r, g.values.at(2) == 1, "g_I(2) != 1");
    require(r, !has_linear_resolution(matching_power(I, 2), F, opt.betti),
            "I^[2] should not have a linear resolution");
  }));

  out.push_back(run_check("examples/six-vertex", "K6-like D with w(1)=2", [&](CheckReport& r) {
    std::vector<std::pair<int, int>> arcs{{1, 0}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};
    for (int i = 1; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) arcs.push_back({i, j});
    WeightedOrientedGraph D({"x1", "x2", "x3", "x4", "x5", "x6"}, arcs, {2, 1, 1, 1, 1, 1});
    auto ID = oriented_edge_ideal(D);
    auto IG = edge_ideal(D.underlying());
    require(r, ID.num_gens() == 15, "expected 15 generators");
    require(r, monomial_grade(ID) == 3, "nu(I(D)) != 3");
    require(r, block_structure(D.underlying()).has_even_cycle,
            "this example has even cycles (hypothesis is not met on purpose)");
    auto bopts = betti_options_for(ID, opt.betti);
    for (int k = 2; k <= 3; ++k) {
      auto IDk = matching_power(ID, k);
      require(r, IDk == matching_power(IG, k),
              "I(D)^[" + std::to_string(k) + "] != I(G)^[" + std::to_string(k) + "]");
      require(r, is_linearly_related(IDk).value,
              "I(D)^[" + std::to_string(k) + "] should be linearly related");
      require(r, has_linear_resolution(IDk, F, bopts),
              "I(D)^[" + std::to_string(k) + "] should have a linear resolution");
    }
  }));

  out.push_back(run_check("examples/odd-cycle", "C5 with arc (2,1), w(1)=2", [&](CheckReport& r) {
    WeightedOrientedGraph D({"x1", "x2", "x3", "x4", "x5"},
                            {{1, 0}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, {2, 1, 1, 1, 1});
    auto ID = oriented_edge_ideal(D);
    require(r, matching_number(D.underlying()) == 2, "nu(C5) != 2");
    auto r2 = is_linearly_related(matching_power(ID, 2));
    require(r, !r2.value, "I(D)^[2] should not be linearly related");
    // with all weights 1 the last power is linearly related
    WeightedOrientedGraph D1({"x1", "x2", "x3", "x4", "x5"},
                             {{1, 0}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, {1, 1, 1, 1, 1});
    auto IG2 = matching_power(oriented_edge_ideal(D1), 2);
    require(r, is_linearly_related(IG2).value, "I(G)^[nu] should be linearly related");
  }));

  out.push_back(run_check("examples/linres-not-polymatroidal",
                          "I(D)=(x1x2^2,x2x3^2,x2x4^2,x3x1^2,x3x4^2,x4x1^2)", [&](CheckReport& r) {
    auto ID = mk_text("x1*x2^2\nx2*x3^2\nx2*x4^2\nx3*x1^2\nx3*x4^2\nx4*x1^2\n");
    auto ID2 = matching_power(ID, 2);
    require(r, has_linear_resolution(ID2, F, opt.betti), "should have a linear resolution");
    require(r, !is_polymatroidal(ID2).value, "should not be polymatroidal");
  }));

  out.push_back(run_check("examples/path-g-formula", "P_l, l = 3..9", [&](CheckReport& r) {
    for (int ell = 3; ell <= 9; ++ell) {
      auto G = path_on_vertices(ell);
      require(r, matching_number(G) == ell / 2, "nu(P_l) != floor(l/2)");
      auto I = edge_ideal(G);
      auto g = normalized_depth(I, F, betti_options_for(I, opt.betti));
      for (const auto& [k, val] : g.values)
        require(r, val == path_normalized_depth_formula(ell, k),
                "g_{I(P_" + std::to_string(ell) + ")}(" + std::to_string(k) + ") = " +
                    std::to_string(val) + " != " +
                    std::to_string(path_normalized_depth_formula(ell, k)));
    }
  }));

  return out;
}

// ---------------------------------------------------------------------------
// samplers

MonomialIdeal sample_random_monomial_ideal(std::mt19937_64& rng, int max_n, int max_gens,
                                           int max_exp) {
  // n ~ U{2..max_n}, m ~ U{2..max_gens}; each generator has support size
  // U{1..min(3,n)} with exponents U{1..max_exp}; the ambient is then
  // restricted to the support so the sample is fully supported
  while (true) {
    int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
    int m = 2 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, max_gens - 1)));
    std::vector<Monomial> gens;
    for (int i = 0; i < m; ++i) {
      std::vector<int> e(static_cast<size_t>(n), 0);
      int s = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(3, n)));
      for (int q = 0; q < s; ++q)
        e[rng() % static_cast<unsigned>(n)] =
            1 + static_cast<int>(rng() % static_cast<unsigned>(max_exp));
      gens.push_back(Monomial(e));
    }
    MonomialIdeal I(make_ambient(n), gens);
    if (I.is_zero() || I.is_whole_ring()) continue;
    auto supp = I.support();
    if (static_cast<int>(supp.size()) < 2) continue;
    MonomialIdeal J = localize(I, supp);  // restriction: exponents off-support are zero
    if (J.is_whole_ring()) continue;
    return J;
  }
}

MonomialIdeal sample_random_quadratic_ideal(std::mt19937_64& rng, int max_n) {
  // n ~ U{2..max_n}; each degree-2 monomial (including squares) is included
  // with probability 1/2; resample until nonzero and fully supported
  while (true) {
    int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
    std::vector<Monomial> gens;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        if (rng() % 2) continue;
        std::vector<int> e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] += 1;
        e[static_cast<size_t>(j)] += 1;
        gens.push_back(Monomial(e));
      }
    MonomialIdeal I(make_ambient(n), gens);
    if (I.is_zero() || !I.fully_supported()) continue;
    return I;
  }
}

WeightedOrientedGraph sample_random_weighted_oriented(std::mt19937_64& rng, int max_n,
                                                      long max_weight) {
  // n ~ U{2..max_n}, edge probability 1/2 (resampled until there are no
  // isolated vertices), uniform orientation, weights U{1..max_weight} on
  // non-sources and 1 on sources
  while (true) {
    int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 2) continue;
        arcs.push_back(rng() % 2 ? std::make_pair(i, j) : std::make_pair(j, i));
      }
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    std::vector<long> w(static_cast<size_t>(n), 1);
    WeightedOrientedGraph D(names, arcs, w);
    SimpleGraph G = D.underlying(true);
    bool isolated = arcs.empty();
    for (int v = 0; v < n; ++v)
      if (G.neighbors_mask(v) == 0) isolated = true;
    if (isolated) continue;
    for (int v = 0; v < n; ++v)
      if (!D.is_source(v))
        w[static_cast<size_t>(v)] = 1 + static_cast<long>(rng() % static_cast<unsigned>(max_weight));
    return WeightedOrientedGraph(names, arcs, w);
  }
}

// ---------------------------------------------------------------------------
// exhaustive families

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// canonical adjacency key over all vertex permutations (n <= 8)
std::uint64_t canonical_key(int n, const EdgeList& edges) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t key = 0;
    for (auto [u, v] : edges) {
      int a = perm[static_cast<size_t>(u)], b = perm[static_cast<size_t>(v)];
      if (a > b) std::swap(a, b);
      key |= std::uint64_t{1} << (a * n + b);
    }
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::string> vnames(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace

std::vector<SimpleGraph> trees_up_to_iso(int max_n) {
  std::vector<SimpleGraph> out;
  std::vector<std::pair<int, EdgeList>> layer{{2, {{0, 1}}}};
  out.push_back(SimpleGraph(vnames(2), {{0, 1}}));
  for (int n = 3; n <= max_n; ++n) {
    std::set<std::uint64_t> seen;
    std::vector<std::pair<int, EdgeList>> next;
    for (const auto& [m, edges] : layer)
      for (int attach = 0; attach < m; ++attach) {
        EdgeList e2 = edges;
        e2.push_back({attach, m});
        auto key = canonical_key(n, e2);
        if (seen.insert(key).second) {
          next.push_back({n, e2});
          out.push_back(SimpleGraph(vnames(n), e2));
        }
      }
    layer = std::move(next);
  }
  return out;
}

std::vector<SimpleGraph> forests_up_to_iso(int max_n) {
  // multisets of trees (each with >= 2 vertices); distinct multisets give
  // non-isomorphic forests
  auto trees = trees_up_to_iso(max_n);
  std::vector<SimpleGraph> out;
  struct Item {
    int size;
    size_t idx;
  };
  std::vector<Item> items;
  for (size_t i = 0; i < trees.size(); ++i)
    items.push_back({trees[i].n(), i});
  std::function<void(size_t, int, std::vector<size_t>&)> rec =
      [&](size_t start, int budget, std::vector<size_t>& chosen) {
        if (!chosen.empty()) {
          EdgeList edges;
          std::vector<std::string> names;
          int base = 0;
          for (size_t ci : chosen) {
            const auto& T = trees[ci];
            for (auto [u, v] : T.edges()) edges.push_back({base + u, base + v});
            base += T.n();
          }
          out.push_back(SimpleGraph(vnames(base), edges));
        }
        for (size_t i = start; i < items.size(); ++i)
          if (items[i].size <= budget) {
            chosen.push_back(items[i].idx);
            rec(i, budget - items[i].size, chosen);
            chosen.pop_back();
          }
      };
  std::vector<size_t> chosen;
  rec(0, max_n, chosen);
  return out;
}

std::vector<SimpleGraph> connected_no_even_cycle_graphs(int max_n) {
  if (max_n > 8) throw CapExceededError("connected_no_even_cycle_graphs is capped at 8 vertices");
  // grow by attaching a block (edge or odd cycle) at an existing vertex;
  // this reaches exactly the connected graphs whose blocks are edges or odd
  // cycles, i.e. the graphs with no even cycle
  std::vector<int> block_sizes{2, 3, 5, 7};
  std::vector<std::pair<int, EdgeList>> todo;
  std::set<std::uint64_t> seen;
  std::vector<SimpleGraph> out;
  auto add = [&](int n, const EdgeList& edges) {
    auto key = canonical_key(n, edges);
    // keys for different n never collide in practice only if padded; make
    // the vertex count part of the identity
    std::uint64_t salted = key ^ (static_cast<std::uint64_t>(n) << 58);
    if (!seen.insert(salted).second) return;
    todo.push_back({n, edges});
    out.push_back(SimpleGraph(vnames(n), edges));
  };
  auto block_edges = [](int size, int attach_at, int first_new) {
    EdgeList e;
    if (size == 2) {
      e.push_back({attach_at, first_new});
      return e;
    }
    // cycle attach_at - new_0 - ... - new_{size-2} - attach_at
    e.push_back({attach_at, first_new});
    for (int q = 0; q + 1 < size - 1; ++q) e.push_back({first_new + q, first_new + q + 1});
    e.push_back({first_new + size - 2, attach_at});
    return e;
  };
  for (int s : block_sizes)
    if (s <= max_n) add(s, block_edges(s, 0, 1));
  for (size_t qi = 0; qi < todo.size(); ++qi) {
    auto [n, edges] = todo[qi];
    for (int s : block_sizes) {
      int n2 = n + s - 1;
      if (n2 > max_n) continue;
      for (int attach = 0; attach < n; ++attach) {
        EdgeList e2 = edges;
        auto extra = block_edges(s, attach, n);
        e2.insert(e2.end(), extra.begin(), extra.end());
        add(n2, e2);
      }
    }
  }
  // sanity: the family really has no even cycles
  for (const auto& G : out)
    if (block_structure(G).has_even_cycle)
      throw Error("connected_no_even_cycle_graphs produced an even cycle");
  std::sort(out.begin(), out.end(), [](const SimpleGraph& a, const SimpleGraph& b) {
    if (a.n() != b.n()) return a.n() < b.n();
    return a.num_edges() < b.num_edges();
  });
  return out;
}

void for_each_weighted_orientation(const SimpleGraph& G, long max_weight,
                                   bool include_trivial,
                                   const std::function<void(const WeightedOrientedGraph&)>& fn) {
  const auto& edges = G.edges();
  const int m = G.num_edges();
  if (m > 20) throw CapExceededError("for_each_weighted_orientation: too many edges");
  for (std::uint32_t orient = 0; orient < (std::uint32_t{1} << m); ++orient) {
    EdgeList arcs;
    for (int e = 0; e < m; ++e) {
      auto [u, v] = edges[static_cast<size_t>(e)];
      arcs.push_back(orient >> e & 1 ? std::make_pair(v, u) : std::make_pair(u, v));
    }
    std::vector<char> source(static_cast<size_t>(G.n()), 1);
    for (auto [a, b] : arcs) source[static_cast<size_t>(b)] = 0;
    std::vector<int> free_vertices;
    for (int v = 0; v < G.n(); ++v)
      if (!source[static_cast<size_t>(v)]) free_vertices.push_back(v);
    std::vector<long> w(static_cast<size_t>(G.n()), 1);
    // odometer over the weights of non-source vertices
    std::vector<long> digits(free_vertices.size(), 1);
    while (true) {
      for (size_t i = 0; i < free_vertices.size(); ++i)
        w[static_cast<size_t>(free_vertices[i])] = digits[i];
      bool trivial = std::all_of(w.begin(), w.end(), [](long x) { return x == 1; });
      if (include_trivial || !trivial)
        fn(WeightedOrientedGraph(G.vertex_names(), arcs, w));
      size_t pos = 0;
      while (pos < digits.size() && digits[pos] == max_weight) digits[pos++] = 1;
      if (pos == digits.size()) break;
      ++digits[pos];
    }
  }
}

SimpleGraph path_on_vertices(int ell) {
  if (ell < 2) throw InvalidArgumentError("path_on_vertices needs at least 2 vertices");
  EdgeList edges;
  for (int i = 0; i + 1 < ell; ++i) edges.push_back({i, i + 1});
  return SimpleGraph(vnames(ell), edges);
}

int path_normalized_depth_formula(int ell, int k) {
  int third = (ell + 2) / 3;
  if (k >= 1 && k <= third) return third - k;
  return 0;
}

// ---------------------------------------------------------------------------
// scan

FamilySpec::Family parse_family(const std::string& name) {
  if (name == "random-monomial") return FamilySpec::Family::random_monomial;
  if (name == "random-quadratic") return FamilySpec::Family::random_quadratic;
  if (name == "random-weighted-oriented") return FamilySpec::Family::random_weighted_oriented;
  if (name == "exhaustive-cactus") return FamilySpec::Family::exhaustive_cactus;
  if (name == "exhaustive-forest") return FamilySpec::Family::exhaustive_forest;
  throw InvalidArgumentError("unknown family: " + name);
}

std::string family_name(FamilySpec::Family f) {
  switch (f) {
    case FamilySpec::Family::random_monomial: return "random-monomial";
    case FamilySpec::Family::random_quadratic: return "random-quadratic";
    case FamilySpec::Family::random_weighted_oriented: return "random-weighted-oriented";
    case FamilySpec::Family::exhaustive_cactus: return "exhaustive-cactus";
    case FamilySpec::Family::exhaustive_forest: return "exhaustive-forest";
  }
  return "?";
}

namespace {

// run fn(i) for i in [0, count) on a couple of threads, preserving slot order
void parallel_instances(long count, const std::function<void(long)>& fn) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  unsigned workers = std::min<unsigned>(hw, 8);
  if (count < 4 || workers <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

void conjecture_g_nonincreasing(const MonomialIdeal& I, const VerifyOptions& opt,
                                std::vector<CheckReport>& reports) {
  reports.push_back(run_check("conjecture/g-nonincreasing", brief(I), [&](CheckReport& r) {
    r.conjecture = true;
    auto g = normalized_depth(I, opt.field, betti_options_for(I, opt.betti));
    int prev = -1;
    bool first = true;
    for (const auto& [k, val] : g.values) {
      if (!first)
        require(r, val <= prev, "g increases at k = " + std::to_string(k), ideal_to_json(I));
      prev = val;
      first = false;
    }
  }));
}

void conjecture_linrel_implies_linres(const WeightedOrientedGraph& D, int k,
                                      const VerifyOptions& opt,
                                      std::vector<CheckReport>& reports) {
  reports.push_back(run_check("conjecture/linrel-implies-linres",
                              "D on " + std::to_string(D.n()) + " vertices, k=" + std::to_string(k),
                              [&](CheckReport& r) {
    r.conjecture = true;
    auto ID = oriented_edge_ideal(D);
    auto IG = edge_ideal(D.underlying());
    if (ID == IG) {
      r.verdict = Verdict::hypothesis_not_met;
      r.detail = "I(D) = I(G)";
      return;
    }
    auto IDk = matching_power(ID, k);
    if (!is_linearly_related(IDk).value) {
      r.verdict = Verdict::hypothesis_not_met;
      r.detail = "not linearly related";
      return;
    }
    require(r, has_linear_resolution(IDk, opt.field, betti_options_for(IDk, opt.betti)),
            "linearly related without a linear resolution: a research finding",
            ideal_to_json(IDk));
  }));
}

}  // namespace

ScanSummary scan(const FamilySpec& spec, const VerifyOptions& opt) {
  ScanSummary sum;
  std::vector<std::vector<CheckReport>> slots;

  auto run_on_ideal = [&](const MonomialIdeal& I, bool g_conjecture) {
    std::vector<CheckReport> reports = verify_core(I, opt);
    if (g_conjecture) conjecture_g_nonincreasing(I, opt, reports);
    return reports;
  };
  auto run_on_graph = [&](const WeightedOrientedGraph& D, bool graph_suite) {
    std::vector<CheckReport> reports;
    int nu = matching_number(D.underlying());
    for (int k = 1; k <= nu; ++k) {
      if (graph_suite) {
        auto g = verify_graph(D, k, opt);
        reports.insert(reports.end(), g.begin(), g.end());
      }
      auto l = verify_linearity(D, k, opt);
      reports.insert(reports.end(), l.begin(), l.end());
      conjecture_linrel_implies_linres(D, k, opt, reports);
    }
    return reports;
  };

  switch (spec.family) {
    case FamilySpec::Family::random_monomial:
    case FamilySpec::Family::random_quadratic: {
      long count = spec.count;
      slots.resize(static_cast<size_t>(count));
      parallel_instances(count, [&](long i) {
        std::mt19937_64 rng(spec.seed * 1000003ull + static_cast<unsigned long long>(i));
        MonomialIdeal I = spec.family == FamilySpec::Family::random_monomial
                              ? sample_random_monomial_ideal(rng, spec.max_n, 6, 3)
                              : sample_random_quadratic_ideal(rng, spec.max_n);
        slots[static_cast<size_t>(i)] = run_on_ideal(I, false);
      });
      break;
    }
    case FamilySpec::Family::random_weighted_oriented: {
      long count = spec.count;
      slots.resize(static_cast<size_t>(count));
      parallel_instances(count, [&](long i) {
        std::mt19937_64 rng(spec.seed * 1000003ull + static_cast<unsigned long long>(i));
        auto D = sample_random_weighted_oriented(rng, std::min(spec.max_n, 7), 3);
        slots[static_cast<size_t>(i)] = run_on_graph(D, true);
      });
      break;
    }
    case FamilySpec::Family::exhaustive_forest: {
      auto forests = forests_up_to_iso(std::min(spec.max_n, 7));
      slots.resize(forests.size());
      parallel_instances(static_cast<long>(forests.size()), [&](long i) {
        slots[static_cast<size_t>(i)] =
            run_on_ideal(edge_ideal(forests[static_cast<size_t>(i)]), true);
      });
      break;
    }
    case FamilySpec::Family::exhaustive_cactus: {
      auto graphs = connected_no_even_cycle_graphs(std::min(spec.max_n, 7));
      std::vector<WeightedOrientedGraph> instances;
      for (const auto& G : graphs) {
        std::set<std::string> seen_ideals;
        for_each_weighted_orientation(G, 2, false, [&](const WeightedOrientedGraph& D) {
          if (!validate_weights(D).empty()) return;  // unreachable: sources stay 1
          if (seen_ideals.insert(to_string(oriented_edge_ideal(D))).second)
            instances.push_back(D);
        });
      }
      slots.resize(instances.size());
      parallel_instances(static_cast<long>(instances.size()), [&](long i) {
        slots[static_cast<size_t>(i)] = run_on_graph(instances[static_cast<size_t>(i)], false);
      });
      break;
    }
  }

  long witness_id = 0;
  for (const auto& reports : slots) {
    ++sum.instances;
    for (const auto& r : reports) {
      if (r.conjecture) {
        ++sum.conjecture_checks;
        if (r.verdict == Verdict::violated) {
          ++sum.conjecture_violations;
          sum.violations.push_back(r);
        }
        continue;
      }
      ++sum.checks;
      switch (r.verdict) {
        case Verdict::holds: ++sum.holds; break;
        case Verdict::violated:
          ++sum.violated;
          sum.violations.push_back(r);
          break;
        case Verdict::hypothesis_not_met: ++sum.hypothesis_not_met; break;
      }
      if (r.flagged) ++sum.flagged;
    }
  }
  if (!spec.out_dir.empty() && !sum.violations.empty()) {
    std::filesystem::create_directories(spec.out_dir);
    for (const auto& r : sum.violations) {
      std::ofstream f(spec.out_dir + "/witness_" + std::to_string(witness_id++) + ".json");
      f << report_to_json(r).dump(2) << "\n";
    }
  }
  return sum;
}

}  // namespace matchpow
