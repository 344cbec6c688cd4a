#include "antiramsey/theorem6.hpp"

#include "antiramsey/constructions.hpp"
#include "antiramsey/oracle.hpp"
#include "antiramsey/rainbow.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ar;
using namespace ar::testing;

TEST_CASE("weighted color count on the small bases") {
  SizeFunction f211({2, 1, 1});
  CHECK(weighted_color_count(ColoredGraph::rainbow(Graph::complete(3)), f211) == 5);
  ColoredGraph star = color_edges(Graph::complete(3), {{0, 1, 0}, {0, 2, 0}, {1, 2, 1}});
  CHECK(weighted_color_count(star, f211) == 3);
  CHECK(weighted_color_count(ColoredGraph::monochromatic(Graph::complete(3)),
                             SizeFunction({3, 2, 1})) == 1);
}

TEST_CASE("weighted count equals the materialized blow-up, exhaustively") {
  for (int r = 2; r <= 4; ++r) {
    Graph kr = Graph::complete(r);
    for (const auto& rgs : naive_partitions(kr.edge_count())) {
      ColoredGraph base(kr, rgs);
      std::vector<int> fv;
      for (int i = 0; i < r; ++i) fv.push_back(rand_int(1, 3));
      SizeFunction f(fv);
      CHECK(weighted_color_count(base, f) == blow_up(base, f).color_count());
    }
  }
}

TEST_CASE("theorem6 engine on the worked examples") {
  CHECK(ar_via_theorem6(PartiteSpec({2, 1, 1}), 3).value == 3);
  CHECK(ar_via_theorem6(PartiteSpec({2, 2, 2, 2}), 4).value == 18);
  CHECK(ar_via_theorem6(PartiteSpec({2, 2, 2, 2, 2}), 4).value == 25);
}

TEST_CASE("theorem6 engine agrees with the closed formulas") {
  // k-partite instances
  for (const auto& sizes : std::vector<std::vector<int>>{{2, 1, 1}, {2, 2, 1}, {3, 2, 1},
                                                          {2, 2, 2}, {2, 1, 1, 1}, {2, 2, 2, 1},
                                                          {3, 3, 2}}) {
    PartiteSpec spec(sizes);
    int k = spec.part_count();
    ArResult via6 = ar_via_theorem6(spec, k);
    CHECK(via6.value == ar_kpartite(spec, k).value);
    CHECK(via6.method == "theorem6");
  }

  // triangle instances with r > 3
  for (const auto& sizes : std::vector<std::vector<int>>{{2, 1, 1, 1}, {2, 2, 1, 1},
                                                          {1, 1, 1, 1, 1}, {3, 2, 2, 1}}) {
    PartiteSpec spec(sizes);
    CHECK(ar_via_theorem6(spec, 3).value == ar_multipartite_k3(spec).value);
  }

  // balanced instances with r > k
  CHECK(ar_via_theorem6(PartiteSpec({1, 1, 1, 1, 1}), 4).value == ar_balanced(5, 1, 4).value);
  CHECK(ar_via_theorem6(PartiteSpec({2, 2, 2, 2, 2}), 4).value == ar_balanced(5, 2, 4).value);
}

TEST_CASE("theorem6 engine agrees with the brute-force oracle") {
  for (const auto& sizes : std::vector<std::vector<int>>{{2, 1, 1}, {2, 2, 1}, {3, 2, 1},
                                                          {1, 1, 1, 1}, {2, 1, 1, 1}}) {
    PartiteSpec spec(sizes);
    Graph host = Graph::complete_multipartite(spec);
    for (int k = 3; k <= spec.part_count(); ++k) {
      CHECK(ar_via_theorem6(spec, k).value == brute_force_ar(host, k).value);
    }
  }
}

TEST_CASE("theorem6 beats the Turan coloring on skewed sizes") {
  // K_{7,5,4,4,2} vs K_4. The best two-group rainbow base scores
  // 187 - 28 - 38 + 1 = 122 (groups {7,4} | {5,4,2}), but a rainbow
  // hourglass with the size-7 vertex at the shared apex scores
  // 20+35+28 + 28+14+8 + 1 = 134. The engine must find the latter.
  PartiteSpec spec({7, 5, 4, 4, 2});
  ArResult res = ar_via_theorem6(spec, 4);
  CHECK(res.value == 134);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->color_count() == 134);
  CHECK_FALSE(contains_rainbow_clique(*res.witness, 4));

  // the hand-built hourglass base reproduces the bound
  Graph k5 = Graph::complete(5);
  ColoredGraph hourglass_base = color_edges(
      k5, {{0, 1, 0}, {0, 2, 1}, {1, 2, 2},     // triangle at the apex 0
           {0, 3, 3}, {0, 4, 4}, {3, 4, 5},     // second triangle at 0
           {1, 3, 6}, {1, 4, 6}, {2, 3, 6}, {2, 4, 6}});
  CHECK_FALSE(contains_rainbow_clique(hourglass_base, 4));
  CHECK(weighted_color_count(hourglass_base, SizeFunction({7, 5, 4, 4, 2})) == 134);
}

TEST_CASE("theorem6 covers unbalanced hosts with no closed formula") {
  // r > k >= 4, unbalanced: formulas do not apply; engine and oracle agree
  PartiteSpec spec({2, 1, 1, 1, 1});
  ArResult via6 = ar_via_theorem6(spec, 4);
  OracleOptions opts;
  opts.edge_cap = 14;
  ArResult oracle = brute_force_ar(Graph::complete_multipartite(spec), 4, opts);
  CHECK(via6.value == oracle.value);
  CHECK(via6.value == 11);
  REQUIRE(via6.witness.has_value());
  CHECK_FALSE(contains_rainbow_clique(*via6.witness, 4));
}

TEST_CASE("theorem6 witnesses satisfy the contract") {
  for (const auto& [sizes, k] : std::vector<std::pair<std::vector<int>, int>>{
           {{2, 1, 1}, 3}, {{2, 2, 2, 2}, 4}, {{2, 2, 1, 1}, 3}, {{1, 1, 1, 1, 1}, 4}}) {
    ArResult res = ar_via_theorem6(PartiteSpec(sizes), k);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->color_count() == res.value);
    CHECK_FALSE(contains_rainbow_clique(*res.witness, k));
  }
}

TEST_CASE("theorem6 results do not depend on seeding or worker count") {
  PartiteSpec spec({2, 2, 1, 1});
  Theorem6Options seq;
  Theorem6Options unseeded;
  unseeded.use_seed = false;
  Theorem6Options parallel;
  parallel.jobs = 3;

  ArResult a = ar_via_theorem6(spec, 3, seq);
  ArResult b = ar_via_theorem6(spec, 3, unseeded);
  ArResult c = ar_via_theorem6(spec, 3, parallel);
  CHECK(a.value == b.value);
  CHECK(a.value == c.value);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  REQUIRE(c.witness.has_value());
  CHECK(a.witness->edge_colors() == b.witness->edge_colors());
  CHECK(a.witness->edge_colors() == c.witness->edge_colors());

  ArResult d = ar_via_theorem6(PartiteSpec({2, 2, 2, 2}), 4, parallel);
  CHECK(d.value == 18);
}

TEST_CASE("theorem6 rejects out-of-range instances") {
  CHECK_THROWS_AS(ar_via_theorem6(PartiteSpec({1, 1}), 3), ValidationError);  // r < k
  Theorem6Options small_cap;
  small_cap.base_cap = 4;
  CHECK_THROWS_AS(ar_via_theorem6(PartiteSpec({1, 1, 1, 1, 1}), 3, small_cap), CapacityError);
}

TEST_CASE("degenerate hosts without any K_k") {
  // r < k: every coloring qualifies, the rainbow coloring attains e(G)
  PartiteSpec spec({2, 2});
  Graph host = Graph::complete_multipartite(spec);
  ColoredGraph all_rainbow = ColoredGraph::rainbow(host);
  CHECK_FALSE(contains_rainbow_clique(all_rainbow, 3));
  // the oracle still answers: no K_3 exists, so ar = e(G)
  CHECK(brute_force_ar(host, 3).value == host.edge_count());
}
