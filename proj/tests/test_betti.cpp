#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "matchpow/betti.hpp"
#include "matchpow/matching.hpp"
#include "oracles.hpp"

using namespace matchpow;
using matchpow::testing::mk;

TEST_SUITE_BEGIN("betti");

static const CoefficientField Q = CoefficientField::rationals();

static MonomialIdeal random_ideal(std::mt19937& rng, int max_n, int max_m, int max_exp) {
  while (true) {
    int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
    int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_m));
    std::vector<Monomial> gens;
    for (int i = 0; i < m; ++i) {
      std::vector<int> e(static_cast<size_t>(n), 0);
      int s = 1 + static_cast<int>(rng() % 3);
      for (int q = 0; q < s; ++q)
        e[static_cast<size_t>(rng() % static_cast<unsigned>(n))] =
            1 + static_cast<int>(rng() % static_cast<unsigned>(max_exp));
      gens.push_back(Monomial(e));
    }
    MonomialIdeal I(make_ambient(n), gens);
    if (!I.is_zero() && !I.is_whole_ring()) return I;
  }
}

TEST_CASE("the 4-cycle example: I(D)^[2] and I(G)^[2]") {
  auto ID2 = mk("a*b^2*c*d^2\na^2*b*c^2*d\n");
  auto table = multigraded_betti(ID2, Q);
  CHECK(table.total(0) == 2);
  CHECK(table.total(1) == 1);
  CHECK(table.multigraded.at({1, {2, 2, 2, 2}}) == 1);
  auto inv = invariants_from_table(table, ID2);
  CHECK(inv.pd_ideal == 1);
  CHECK(inv.pd_quotient == 2);
  CHECK(inv.depth_quotient == 2);
  CHECK(inv.reg_ideal == 7);
  CHECK(inv.indeg == 6);

  auto IG2 = mk("a*b*c*d\n");
  auto tg = multigraded_betti(IG2, Q);
  CHECK(tg.total(0) == 1);
  CHECK(tg.total(1) == 0);
  auto ig = invariants_from_table(tg, IG2);
  CHECK(ig.pd_quotient == 1);
  CHECK(ig.depth_quotient == 3);
  CHECK(ig.reg_ideal == 4);
}

TEST_CASE("maximal ideal (x1..xn): Koszul complex") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<Monomial> gens;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(static_cast<size_t>(n), 0);
      e[static_cast<size_t>(i)] = 1;
      gens.push_back(Monomial(e));
    }
    MonomialIdeal I(make_ambient(n), gens);
    auto inv = homological_invariants(I, Q);
    CHECK(inv.pd_quotient == n);
    CHECK(inv.reg_ideal == 1);
    auto t = multigraded_betti(I, Q);
    for (int i = 0; i < n; ++i) {
      long expect = 1;  // C(n, i+1)
      for (int q = 0; q < i + 1; ++q) expect = expect * (n - q) / (q + 1);
      CHECK(t.total(i) == expect);
    }
  }
}

TEST_CASE("complete intersections have Koszul Betti numbers") {
  auto I = mk("x1^2\nx2^3\nx3*x4\n");  // m = 3
  auto t = multigraded_betti(I, Q);
  CHECK(t.total(0) == 3);
  CHECK(t.total(1) == 3);
  CHECK(t.total(2) == 1);
  CHECK(t.euler_alternating_sum() == 1);
}

TEST_CASE("oracle equivalence on random ideals") {
  std::mt19937 rng(101);
  for (int t = 0; t < 60; ++t) {
    auto I = random_ideal(rng, 5, 5, 3);
    auto table = multigraded_betti(I, Q);
    CHECK(table.euler_alternating_sum() == 1);
    auto oracle_table = oracle::taylor_graded_betti(I);
    std::map<std::pair<int, int>, long> got;
    for (const auto& [key, dim] : table.graded)
      if (dim > 0) got[key] = dim;
    CHECK(got == oracle_table);
  }
}

TEST_CASE("direct and nerve routes agree") {
  std::mt19937 rng(61);
  for (int t = 0; t < 40; ++t) {
    auto I = random_ideal(rng, 5, 5, 3);
    BettiOptions opt;
    auto a = multigraded_betti(I, Q, opt, KoszulRoute::direct_only);
    auto b = multigraded_betti(I, Q, opt, KoszulRoute::nerve_only);
    CHECK(a.multigraded == b.multigraded);
  }
}

TEST_CASE("betti numbers are invariant under polarization") {
  std::mt19937 rng(31);
  for (int t = 0; t < 25; ++t) {
    auto I = random_ideal(rng, 4, 4, 3);
    auto tI = multigraded_betti(I, Q);
    auto tP = multigraded_betti(polarize(I), Q);
    CHECK(tI.graded == tP.graded);
  }
}

TEST_CASE("pd is bounded by |deg(J)| - indeg(J)") {
  std::mt19937 rng(41);
  for (int t = 0; t < 40; ++t) {
    auto J = random_ideal(rng, 5, 5, 3);
    if (J.is_whole_ring()) continue;
    auto inv = homological_invariants(J, Q);
    CHECK(inv.pd_ideal <= bounding_multidegree_total(J) - inv.indeg);
  }
}

TEST_CASE("normalized depth") {
  SUBCASE("the cubic counterexample has g(2) = 1") {
    auto I = matchpow::testing::cubic_cycle();
    auto prof = normalized_depth(I, Q);
    REQUIRE(prof.values.count(2));
    CHECK(prof.values.at(2) == 1);
  }
  SUBCASE("the 4-cycle I(D): g(2) = 1") {
    auto ID = mk("a*b^2\nb*c^2\nc*d^2\nd*a^2\n");
    auto prof = normalized_depth(ID, Q);
    CHECK(prof.values.at(2) == 1);
  }
  SUBCASE("quadratic ideals vanish at the top") {
    auto I = mk("x1^2\nx1*x2\nx2^2\n");
    auto prof = normalized_depth(I, Q);
    CHECK(prof.values.rbegin()->second == 0);
  }
  SUBCASE("depth bound: g >= 0 on random samples") {
    std::mt19937 rng(71);
    for (int t = 0; t < 30; ++t) {
      auto I = random_ideal(rng, 4, 4, 2);
      if (!I.fully_supported() || I.is_whole_ring()) continue;
      for (const auto& [k, g] : normalized_depth(I, Q).values) CHECK(g >= 0);
    }
  }
  SUBCASE("requires full support") {
    MonomialIdeal I(make_ambient(3), {matchpow::testing::mono({1, 1, 0})});
    CHECK_THROWS_AS(normalized_depth(I, Q), NotFullySupportedError);
  }
}

TEST_CASE("g and depth transfer under polarization") {
  std::mt19937 rng(83);
  int done = 0;
  for (int t = 0; t < 60 && done < 15; ++t) {
    auto I = random_ideal(rng, 4, 4, 3);
    if (!I.fully_supported() || I.is_whole_ring()) continue;
    ++done;
    auto P = polarize(I);
    auto gI = normalized_depth(I, Q);
    auto gP = normalized_depth(P, Q);
    CHECK(gI.values == gP.values);
    int nu = monomial_grade(I);
    for (int k = 1; k <= nu; ++k) {
      auto a = homological_invariants(matching_power(I, k), Q);
      auto b = homological_invariants(matching_power(P, k), Q);
      CHECK(a.depth_quotient ==
            b.depth_quotient - bounding_multidegree_total(I) + I.n());
    }
  }
  CHECK(done > 0);
}

TEST_CASE("has_linear_resolution") {
  CHECK_FALSE(has_linear_resolution(mk("x1*x2^2*x3*x4^2\nx1^2*x2*x3^2*x4\n"), Q));
  CHECK(has_linear_resolution(mk("x1*x2^2*x3*x4^2\nx1^2*x2*x3^2*x4\nx1^2*x2*x3*x4^2\n"), Q));
  CHECK(has_linear_resolution(mk("x1\nx2\nx3\n"), Q));
  CHECK_FALSE(has_linear_resolution(mk("x1\nx2*x3\n"), Q));  // mixed degrees
}

TEST_CASE("caps") {
  BettiOptions opt;
  opt.max_gens = 2;
  CHECK_THROWS_AS(multigraded_betti(matchpow::testing::five_gen_ideal(), Q, opt),
                  CapExceededError);
}

TEST_SUITE_END();
