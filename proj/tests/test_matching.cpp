#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "matchpow/matching.hpp"
#include "oracles.hpp"

using namespace matchpow;
using matchpow::testing::mk;

TEST_SUITE_BEGIN("matching-powers");

TEST_CASE("generator_matchings on the five-generator ideal") {
  auto I = matchpow::testing::five_gen_ideal();
  CHECK(generator_matchings(I, 2).size() == 9);
  CHECK(generator_matchings(I, 1).size() == 5);  // all singletons
  CHECK(generator_matchings(I, 5).empty());      // nu(I) = 4
  for (const auto& M : generator_matchings(I, 3)) {
    REQUIRE(M.size() == 3);
    for (size_t a = 0; a < M.size(); ++a)
      for (size_t b = a + 1; b < M.size(); ++b)
        CHECK(support_disjoint(I.gens()[static_cast<size_t>(M[a])],
                               I.gens()[static_cast<size_t>(M[b])]));
  }
}

TEST_CASE("matching powers of the five-generator ideal match the frozen lists") {
  auto I = matchpow::testing::five_gen_ideal();
  CHECK(matching_power(I, 1) == I);
  CHECK(matching_power(I, 2) ==
        mk("x1^2*x2^2\nx1^2*x3^2\nx1^2*x3*x4\nx1^2*x5^5\nx2^2*x3^2\n"
           "x2^2*x3*x4\nx2^2*x5^5\nx3^2*x5^5\nx3*x4*x5^5\n"));
  CHECK(matching_power(I, 3) ==
        mk("x1^2*x2^2*x3^2\nx1^2*x2^2*x3*x4\nx1^2*x2^2*x5^5\nx1^2*x3^2*x5^5\n"
           "x1^2*x3*x4*x5^5\nx2^2*x3^2*x5^5\nx2^2*x3*x4*x5^5\n"));
  CHECK(matching_power(I, 4) == mk("# vars: x1 x2 x3 x4 x5\nx1^2*x2^2*x3^2*x5^5\nx1^2*x2^2*x3*x4*x5^5\n"));
  CHECK(matching_power(I, 5).is_zero());
}

TEST_CASE("complete intersection: all k-fold products, nu = m") {
  auto I = mk("x1^2\nx2^3\nx3*x4\n");  // pairwise disjoint supports
  CHECK(monomial_grade(I) == 3);
  for (int k = 1; k <= 3; ++k) {
    auto P = matching_power(I, k);
    int binom = k == 2 ? 3 : 1;
    CHECK(P.num_gens() == (k == 1 ? 3 : binom));
  }
  CHECK(matching_power(I, 3) == mk("x1^2*x2^3*x3*x4\n"));
}

TEST_CASE("squarefree ideal: matching power is the squarefree power") {
  // I(C4): products of k disjoint edges
  auto I = mk("a*b\nb*c\nc*d\nd*a\n");
  auto P2 = matching_power(I, 2);
  CHECK(P2 == mk("a*b*c*d\n"));
  CHECK(is_squarefree(P2));
  // every generator is a squarefree monomial of I^k: product of two gens
  for (const auto& g : P2.gens()) CHECK(g.degree() == 4);
}

TEST_CASE("monomial_grade") {
  CHECK(monomial_grade(matchpow::testing::five_gen_ideal()) == 4);
  CHECK(monomial_grade(matchpow::testing::cubic_cycle()) == 2);
  SUBCASE("agrees with the exhaustive oracle") {
    std::mt19937 rng(17);
    for (int t = 0; t < 150; ++t) {
      int n = 2 + static_cast<int>(rng() % 5);
      int m = 1 + static_cast<int>(rng() % 8);
      std::vector<Monomial> gens;
      for (int i = 0; i < m; ++i) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        int s = 1 + static_cast<int>(rng() % 3);
        for (int q = 0; q < s; ++q) e[static_cast<size_t>(rng() % n)] += 1 + static_cast<int>(rng() % 2);
        gens.push_back(Monomial(e));
      }
      MonomialIdeal I(make_ambient(n), gens);
      if (I.is_zero()) continue;
      CHECK(monomial_grade(I) == oracle::naive_monomial_grade(I));
    }
  }
}

TEST_CASE("nonzero exactly up to the monomial grade") {
  std::mt19937 rng(23);
  for (int t = 0; t < 30; ++t) {
    int n = 3 + static_cast<int>(rng() % 3);
    std::vector<Monomial> gens;
    for (int i = 0; i < 5; ++i) {
      std::vector<int> e(static_cast<size_t>(n), 0);
      e[static_cast<size_t>(rng() % n)] += 1;
      e[static_cast<size_t>(rng() % n)] += 1;
      gens.push_back(Monomial(e));
    }
    MonomialIdeal I(make_ambient(n), gens);
    int nu = monomial_grade(I);
    for (int k = 1; k <= nu; ++k) CHECK_FALSE(matching_power(I, k).is_zero());
    CHECK(matching_power(I, nu + 1).is_zero());
  }
}

TEST_CASE("polarization commutes with matching powers") {
  std::mt19937 rng(29);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<Monomial> gens;
    int m = 2 + static_cast<int>(rng() % 4);
    for (int i = 0; i < m; ++i) {
      std::vector<int> e(static_cast<size_t>(n), 0);
      int s = 1 + static_cast<int>(rng() % 2);
      for (int q = 0; q < s; ++q) e[static_cast<size_t>(rng() % n)] = 1 + static_cast<int>(rng() % 3);
      gens.push_back(Monomial(e));
    }
    MonomialIdeal I(make_ambient(n), gens);
    if (I.is_zero() || I.is_whole_ring()) continue;
    auto P = polarize(I);
    CHECK(monomial_grade(P) == monomial_grade(I));
    int nu = monomial_grade(I);
    for (int k = 1; k <= nu; ++k)
      CHECK(same_generators_by_name(polarize(matching_power(I, k)), matching_power(P, k)));
  }
}

TEST_CASE("every generator of I^[k] is a k-fold product with additive support") {
  auto I = matchpow::testing::cubic_cycle();
  auto P2 = matching_power(I, 2);
  for (const auto& g : P2.gens()) CHECK(support(g).size() == 4);
}

TEST_CASE("errors") {
  auto Z = MonomialIdeal::zero(make_ambient(2));
  CHECK_THROWS_AS(matching_power(Z, 1), ZeroIdealError);
  CHECK_THROWS_AS(monomial_grade(Z), ZeroIdealError);
  CHECK_THROWS_AS(generator_matchings(matchpow::testing::five_gen_ideal(), 0),
                  InvalidArgumentError);
}

TEST_SUITE_END();
