#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "matchpow/graphs.hpp"
#include "matchpow/matching.hpp"

using namespace matchpow;
using matchpow::testing::mk;

TEST_SUITE_BEGIN("graphs");

static SimpleGraph path_graph(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return SimpleGraph(names, edges);
}

static SimpleGraph cycle_graph(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return SimpleGraph(names, edges);
}

TEST_CASE("edge_ideal") {
  SimpleGraph c4({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(edge_ideal(c4) == mk("a*b\nb*c\nc*d\nd*a\n"));
  SimpleGraph e({"u", "v"}, {{0, 1}});
  CHECK(edge_ideal(e).num_gens() == 1);
  CHECK(edge_ideal(path_graph(3)) == mk("x1*x2\nx2*x3\n"));
}

TEST_CASE("oriented_edge_ideal") {
  auto D = matchpow::testing::four_cycle_w2();
  CHECK(oriented_edge_ideal(D) == mk("a*b^2\nb*c^2\nc*d^2\nd*a^2\n"));

  SUBCASE("all weights one gives I(G)") {
    WeightedOrientedGraph D1({"a", "b", "c"}, {{0, 1}, {1, 2}}, {1, 1, 1});
    CHECK(oriented_edge_ideal(D1) == edge_ideal(D1.underlying()));
  }
  SUBCASE("the six-vertex example of the last section") {
    std::vector<std::pair<int, int>> arcs{{1, 0}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};
    for (int i = 1; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) arcs.push_back({i, j});
    WeightedOrientedGraph D6(
        {"x1", "x2", "x3", "x4", "x5", "x6"}, arcs, {2, 1, 1, 1, 1, 1});
    auto I = oriented_edge_ideal(D6);
    CHECK(I.num_gens() == 15);
    CHECK(I.contains(matchpow::testing::mono({2, 1, 0, 0, 0, 0})));  // x1^2 x2
    CHECK(monomial_grade(I) == 3);
  }
  SUBCASE("source weight violations") {
    WeightedOrientedGraph bad({"a", "b", "c"}, {{0, 1}, {1, 2}}, {2, 2, 3});
    CHECK(validate_weights(bad) == std::vector<int>{0});
    CHECK_THROWS_AS(oriented_edge_ideal(bad), WeightError);
    auto fixed = repair_weights(bad);
    CHECK(validate_weights(fixed).empty());
    CHECK(fixed.weight(0) == 1);
    CHECK(fixed.weight(1) == 2);
  }
  SUBCASE("non-source with weight > 1 is fine") {
    WeightedOrientedGraph D2({"x1", "x2", "x3"}, {{1, 0}, {1, 2}}, {2, 1, 1});
    CHECK(validate_weights(D2).empty());
  }
}

TEST_CASE("edge_weighted_ideal") {
  SimpleGraph e({"x1", "x2"}, {{0, 1}});
  EdgeWeightedGraph gw(e, {3});
  CHECK(edge_weighted_ideal(gw) == mk("x1^3*x2^3\n"));

  SimpleGraph tri({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}});
  EdgeWeightedGraph tw(tri, {1, 2, 2});
  auto I = edge_weighted_ideal(tw);
  // construct-then-minimize; with these weights nothing divides anything
  CHECK(I.num_gens() == 3);
  EdgeWeightedGraph all1(tri, {1, 1, 1});
  CHECK(edge_weighted_ideal(all1) == edge_ideal(tri));
}

TEST_CASE("matching_number") {
  for (int n = 2; n <= 8; ++n) CHECK(matching_number(path_graph(n)) == n / 2);
  for (int k = 1; k <= 3; ++k) CHECK(matching_number(cycle_graph(2 * k + 1)) == k);
  CHECK(matching_number(SimpleGraph({"u", "v"}, {{0, 1}})) == 1);

  SUBCASE("equals the monomial grade of the edge ideal") {
    std::mt19937 rng(301);
    for (int t = 0; t < 60; ++t) {
      int n = 3 + static_cast<int>(rng() % 5);
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng() % 2) edges.push_back({i, j});
      std::vector<std::string> names;
      for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
      SimpleGraph G(names, edges, /*allow_isolated=*/true);
      bool isolated = false;
      for (int v = 0; v < n; ++v)
        if (G.neighbors_mask(v) == 0) isolated = true;
      if (isolated || edges.empty()) continue;
      CHECK(matching_number(G) == monomial_grade(edge_ideal(G)));
    }
  }
}

TEST_CASE("induced_matching_number") {
  CHECK(induced_matching_number(SimpleGraph({"u", "v"}, {{0, 1}})) == 1);
  CHECK(induced_matching_number(path_graph(6)) == 2);
  CHECK(induced_matching_number(cycle_graph(4)) == 1);
}

TEST_CASE("weighted_induced_matching_number") {
  SUBCASE("all weights one reduces to im") {
    WeightedOrientedGraph D({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1, 1});
    CHECK(weighted_induced_matching_number(D) == induced_matching_number(D.underlying()));
  }
  SUBCASE("single arc with heavy head") {
    WeightedOrientedGraph D({"a", "b"}, {{0, 1}}, {1, 5});
    CHECK(weighted_induced_matching_number(D) == 5);
  }
  SUBCASE("two far-apart arcs with head weights 2 and 3") {
    WeightedOrientedGraph D({"a", "b", "c", "d", "e"},
                            {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {1, 2, 1, 1, 3});
    // induced matching {ab, de}: heads b and e
    CHECK(weighted_induced_matching_number(D) == 5);
  }
  SUBCASE("wim >= im always") {
    std::mt19937 rng(311);
    for (int t = 0; t < 40; ++t) {
      int n = 3 + static_cast<int>(rng() % 4);
      std::vector<std::pair<int, int>> arcs;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng() % 2) arcs.push_back(rng() % 2 ? std::make_pair(i, j) : std::make_pair(j, i));
      std::vector<std::string> names;
      for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
      std::vector<long> w(static_cast<size_t>(n), 1);
      WeightedOrientedGraph D(names, arcs, w);
      bool isolated = false;
      SimpleGraph G = D.underlying(true);
      for (int v = 0; v < n; ++v)
        if (G.neighbors_mask(v) == 0) isolated = true;
      if (isolated || arcs.empty()) continue;
      auto wts = w;
      for (int v = 0; v < n; ++v)
        if (!D.is_source(v)) wts[static_cast<size_t>(v)] = 1 + static_cast<long>(rng() % 3);
      WeightedOrientedGraph Dw(names, arcs, wts);
      CHECK(weighted_induced_matching_number(Dw) >=
            induced_matching_number(Dw.underlying()));
    }
  }
}

TEST_CASE("longest_induced_path") {
  for (int n = 2; n <= 7; ++n) CHECK(longest_induced_path(path_graph(n)) == n - 1);
  SimpleGraph k4({"a", "b", "c", "d"},
                 {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(longest_induced_path(k4) == 1);
  CHECK(longest_induced_path(cycle_graph(4)) == 2);
}

TEST_CASE("block_structure") {
  SUBCASE("trees: all blocks edges, no even cycle") {
    auto bs = block_structure(path_graph(5));
    CHECK(bs.blocks.size() == 4);
    for (const auto& b : bs.blocks) CHECK(b.kind == Block::Kind::edge);
    CHECK_FALSE(bs.has_even_cycle);
  }
  SUBCASE("C4: one 'other' block with an even cycle") {
    auto bs = block_structure(cycle_graph(4));
    REQUIRE(bs.blocks.size() == 1);
    CHECK(bs.blocks[0].kind == Block::Kind::other);
    CHECK(bs.has_even_cycle);
  }
  SUBCASE("two triangles sharing a vertex") {
    SimpleGraph g({"1", "2", "3", "4", "5"},
                  {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto bs = block_structure(g);
    REQUIRE(bs.blocks.size() == 2);
    for (const auto& b : bs.blocks) CHECK(b.kind == Block::Kind::odd_cycle);
    CHECK_FALSE(bs.has_even_cycle);
  }
}

TEST_CASE("perfect_matchings") {
  CHECK(perfect_matchings(SimpleGraph({"u", "v"}, {{0, 1}})).size() == 1);
  CHECK(perfect_matchings(cycle_graph(4)).size() == 2);
  CHECK(perfect_matchings(cycle_graph(5)).empty());
  SUBCASE("enumeration agrees with the DP count") {
    std::mt19937 rng(321);
    for (int t = 0; t < 50; ++t) {
      int n = 2 + static_cast<int>(rng() % 5);
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng() % 2) edges.push_back({i, j});
      std::vector<std::string> names;
      for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
      SimpleGraph G(names, edges, true);
      std::uint64_t full = (std::uint64_t{1} << n) - 1;
      CHECK(static_cast<long>(perfect_matchings(G).size()) ==
            count_perfect_matchings(G, full));
    }
  }
}

TEST_CASE("special cactus equivalences on random graphs") {
  std::mt19937 rng(331);
  for (int t = 0; t < 120; ++t) {
    int n = 2 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) edges.push_back({i, j});
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    SimpleGraph G(names, edges, true);
    auto bs = block_structure(G);
    bool blocks_ok = true;
    for (const auto& b : bs.blocks)
      if (b.kind == Block::Kind::other) blocks_ok = false;
    bool no_even = !bs.has_even_cycle;
    bool pm_ok = all_subgraphs_at_most_one_pm(G);
    CHECK(no_even == blocks_ok);
    CHECK(no_even == pm_ok);
  }
}

TEST_CASE("induced_subgraph") {
  auto D = matchpow::testing::four_cycle_w2();
  auto full = induced_subgraph(D, {0, 1, 2, 3});
  CHECK(full.arcs() == D.arcs());
  auto edge = induced_subgraph(D, {0, 1});
  CHECK(edge.arcs() == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(edge.weight(0) == 2);
  CHECK_THROWS_AS(induced_subgraph(D, {0, 7}), IndexError);
  SUBCASE("ideal in the parent ambient") {
    auto I = oriented_edge_ideal_in_parent(D, {0, 1, 2});
    CHECK(I.n() == 4);
    CHECK(I.num_gens() == 2);  // arcs (a,b) and (b,c)
  }
}

TEST_CASE("radical of matching powers of I(D) recovers I(G) powers") {
  auto D = matchpow::testing::four_cycle_w2();
  auto ID = oriented_edge_ideal(D);
  auto IG = edge_ideal(D.underlying());
  int nu = monomial_grade(ID);
  CHECK(nu == matching_number(D.underlying()));
  for (int k = 1; k <= nu; ++k)
    CHECK(radical(matching_power(ID, k)) == matching_power(IG, k));
}

TEST_SUITE_END();
