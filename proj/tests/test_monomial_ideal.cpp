#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "matchpow/ideal.hpp"
#include "oracles.hpp"

using namespace matchpow;
using matchpow::testing::mk;
using matchpow::testing::mono;

TEST_SUITE_BEGIN("core-monomials");

TEST_CASE("support") {
  CHECK(support(mono({2, 0, 1})) == VarSubset{0, 2});
  CHECK(support(mono({0, 0, 0})).empty());
  // the generator x3x4 of the five-generator ideal
  CHECK(support(mono({0, 0, 1, 1, 0})) == VarSubset{2, 3});
}

TEST_CASE("var_degree") {
  CHECK(var_degree(mono({0, 0, 0, 0, 5}), 4) == 5);
  CHECK(var_degree(mono({0, 0}), 1) == 0);
  CHECK(var_degree(mono({1, 2}), 1) == 2);
  CHECK_THROWS_AS(var_degree(mono({1, 2}), 2), IndexError);
  CHECK_THROWS_AS(var_degree(mono({1, 2}), -1), IndexError);
}

TEST_CASE("lcm") {
  // generators of I(D)^[2] in the 4-cycle example
  CHECK(lcm(mono({1, 2, 1, 2}), mono({2, 1, 2, 1})) == mono({2, 2, 2, 2}));
  Monomial u = mono({3, 0, 1});
  CHECK(lcm(u, mono({0, 0, 0})) == u);
  CHECK(lcm(u, u) == u);
  CHECK_THROWS_AS(lcm(u, mono({1, 1})), AmbientMismatchError);
}

TEST_CASE("lcm is the least common multiple (exhaustive small case)") {
  for (int a0 = 0; a0 <= 2; ++a0)
    for (int a1 = 0; a1 <= 2; ++a1)
      for (int b0 = 0; b0 <= 2; ++b0)
        for (int b1 = 0; b1 <= 2; ++b1) {
          Monomial u = mono({a0, a1}), v = mono({b0, b1});
          Monomial l = lcm(u, v);
          CHECK(divides(u, l));
          CHECK(divides(v, l));
          for (int w0 = 0; w0 <= 4; ++w0)
            for (int w1 = 0; w1 <= 4; ++w1) {
              Monomial w = mono({w0, w1});
              if (divides(u, w) && divides(v, w)) CHECK(divides(l, w));
            }
        }
}

TEST_CASE("divides") {
  CHECK(divides(mono({0, 0, 1, 1}), mono({0, 0, 2, 1})));
  CHECK_FALSE(divides(mono({0, 0, 2, 0}), mono({0, 0, 1, 1})));
  CHECK(divides(mono({1, 1}), mono({1, 2})));
}

TEST_CASE("support_disjoint") {
  CHECK(support_disjoint(mono({2, 0, 0, 0, 0}), mono({0, 2, 0, 0, 0})));
  CHECK_FALSE(support_disjoint(mono({0, 0, 2, 0, 0}), mono({0, 0, 1, 1, 0})));
  CHECK(support_disjoint(mono({1, 2}), mono({0, 0})));
  // equivalent characterizations
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::vector<int> a(4), b(4);
    for (auto& x : a) x = static_cast<int>(rng() % 3);
    for (auto& x : b) x = static_cast<int>(rng() % 3);
    Monomial u = mono(a), v = mono(b);
    bool gcd_one = gcd(u, v).is_unit();
    CHECK(support_disjoint(u, v) == gcd_one);
  }
}

TEST_CASE("minimize_generators") {
  auto I = mk("x1\nx1*x2\n");
  CHECK(I.num_gens() == 1);
  CHECK(I.gens()[0] == mono({1, 0}));

  // incomparable pair stays put
  auto J = mk("a*b^2*c*d^2\na^2*b*c^2*d\n");
  CHECK(J.num_gens() == 2);

  SUBCASE("idempotent and order-independent") {
    std::mt19937 rng(3);
    for (int t = 0; t < 50; ++t) {
      std::vector<Monomial> gens;
      int m = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < m; ++i) {
        std::vector<int> e(3);
        for (auto& x : e) x = static_cast<int>(rng() % 3);
        gens.push_back(Monomial(e));
      }
      auto amb = make_ambient(3);
      MonomialIdeal a(amb, gens);
      std::shuffle(gens.begin(), gens.end(), rng);
      MonomialIdeal b(amb, gens);
      CHECK(a == b);
      MonomialIdeal again(amb, a.gens());
      CHECK(again == a);
    }
  }
}

TEST_CASE("the nine pair products of the five-generator ideal minimize to G(I^[2])") {
  // products of disjoint generator pairs, as listed
  auto I = mk(
      "x1^2*x2^2\nx1^2*x3^2\nx1^2*x3*x4\nx1^2*x5^5\nx2^2*x3^2\nx2^2*x3*x4\n"
      "x2^2*x5^5\nx3^2*x5^5\nx3*x4*x5^5\n");
  CHECK(I.num_gens() == 9);
}

TEST_CASE("initial_degree") {
  CHECK(initial_degree(matchpow::testing::five_gen_ideal()) == 2);
  CHECK(initial_degree(mk("a*b^2*c*d^2\na^2*b*c^2*d\n")) == 6);
  CHECK(initial_degree(mk("a*b*c*d\n")) == 4);
  CHECK_THROWS_AS(initial_degree(MonomialIdeal::zero(make_ambient(2))), ZeroIdealError);
}

TEST_CASE("bounding_multidegree") {
  auto I = matchpow::testing::five_gen_ideal();
  CHECK(bounding_multidegree(I) == std::vector<int>{2, 2, 2, 1, 5});
  CHECK(bounding_multidegree_total(I) == 12);

  auto ID = mk("a*b^2\nb*c^2\nc*d^2\nd*a^2\n");
  CHECK(bounding_multidegree(ID) == std::vector<int>{2, 2, 2, 2});
  CHECK(bounding_multidegree_total(ID) == 8);

  auto sq = mk("x1*x2\nx2*x3\n");
  CHECK(bounding_multidegree(sq) == std::vector<int>{1, 1, 1});
}

TEST_CASE("radical") {
  CHECK(radical(mk("x1^2\nx3*x4\n")) == mk("x1\nx3*x4\n"));
  auto sq = mk("x1*x2\nx2*x3\n");
  CHECK(radical(sq) == sq);
  CHECK(radical(radical(mk("a^2*b\nb^3\n"))) == radical(mk("a^2*b\nb^3\n")));
  CHECK(is_squarefree(radical(mk("a^2*b\nb^3\n"))));
}

TEST_CASE("polarize") {
  SUBCASE("single variable") {
    auto P = polarize(mk("x1^2\n"));
    CHECK(P.ambient()->names() == std::vector<std::string>{"x1_1", "x1_2"});
    CHECK(P.gens() == std::vector<Monomial>{mono({1, 1})});
  }
  SUBCASE("the polymatroidal square example") {
    auto P = polarize(mk("x1^2\nx1*x2\nx2^2\n"));
    CHECK(P.ambient()->names() ==
          std::vector<std::string>{"x1_1", "x1_2", "x2_1", "x2_2"});
    CHECK(P.num_gens() == 3);
    CHECK(same_generators_by_name(P, mk("x1_1*x1_2\nx1_1*x2_1\nx2_1*x2_2\n")));
  }
  SUBCASE("squarefree ideal polarizes to itself up to renaming") {
    auto I = mk("x1*x2\nx2*x3\n");
    auto P = polarize(I);
    CHECK(same_generators_by_name(
        P, I, {{"x1_1", "x1"}, {"x2_1", "x2"}, {"x3_1", "x3"}}));
  }
  SUBCASE("generator count and degrees preserved; depolarization recovers G(I)") {
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
      std::vector<Monomial> gens;
      for (int i = 0; i < 4; ++i) {
        std::vector<int> e(3);
        for (auto& x : e) x = static_cast<int>(rng() % 4);
        if (Monomial(e).is_unit()) e[0] = 1;
        gens.push_back(Monomial(e));
      }
      MonomialIdeal I(make_ambient(3), gens);
      auto P = polarize(I);
      CHECK(P.num_gens() == I.num_gens());
      CHECK(is_squarefree(P));
      CHECK(P.n() == bounding_multidegree_total(I));
      for (int g = 0; g < I.num_gens(); ++g)
        CHECK(P.gens()[static_cast<size_t>(g)].degree() ==
              I.gens()[static_cast<size_t>(g)].degree());
      CHECK(depolarize(P, I.ambient()) == I);
    }
  }
}

TEST_CASE("localize") {
  SUBCASE("substitute and minimize") {
    auto L = localize(mk("x1*x2\nx2*x3\n"), {1, 2});
    CHECK(L.ambient()->names() == std::vector<std::string>{"x2", "x3"});
    CHECK(L == mk("# vars: x2 x3\nx2\n"));
  }
  SUBCASE("full set is the identity") {
    auto I = matchpow::testing::five_gen_ideal();
    auto L = localize(I, {0, 1, 2, 3, 4});
    CHECK(same_generators_by_name(L, I));
  }
  SUBCASE("agrees with the saturation description on small instances") {
    std::mt19937 rng(5);
    for (int t = 0; t < 120; ++t) {
      int n = 2 + static_cast<int>(rng() % 3);  // up to 4 variables
      std::vector<Monomial> gens;
      int m = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < m; ++i) {
        std::vector<int> e(static_cast<size_t>(n));
        for (auto& x : e) x = static_cast<int>(rng() % 3);  // exponents <= 2
        if (Monomial(e).is_unit()) e[static_cast<size_t>(rng() % n)] = 1;
        gens.push_back(Monomial(e));
      }
      MonomialIdeal I(make_ambient(n), gens);
      VarSubset P;
      for (int i = 0; i < n; ++i)
        if (rng() % 2) P.push_back(i);
      if (P.empty()) P.push_back(0);
      CHECK(localize(I, P) == oracle::saturation_localize(I, P));
    }
  }
}

TEST_CASE("zero and whole ring conventions") {
  auto amb = make_ambient(2);
  auto Z = MonomialIdeal::zero(amb);
  CHECK(Z.is_zero());
  CHECK_FALSE(Z.is_whole_ring());
  auto R = MonomialIdeal::whole_ring(amb);
  CHECK(R.is_whole_ring());
  // a unit generator swallows the rest
  MonomialIdeal J(amb, {mono({1, 0}), mono({0, 0})});
  CHECK(J.is_whole_ring());
}

TEST_SUITE_END();
