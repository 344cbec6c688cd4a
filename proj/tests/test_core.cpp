#include <algorithm>
#include <filesystem>
#include <set>

#include "antiramsey/blowup.hpp"
#include "antiramsey/classify.hpp"
#include "antiramsey/constructions.hpp"
#include "antiramsey/interchange.hpp"
#include "antiramsey/isomorphism.hpp"
#include "antiramsey/rainbow.hpp"
#include "antiramsey/symmetry.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace ar;
using namespace ar::testing;

TEST_CASE("partite spec validation and sorting") {
  CHECK_THROWS_AS(PartiteSpec({}), ValidationError);
  CHECK_THROWS_AS(PartiteSpec({3}), ValidationError);
  CHECK_THROWS_AS(PartiteSpec({2, 0}), ValidationError);
  CHECK_THROWS_AS(PartiteSpec({2, -1, 1}), ValidationError);

  PartiteSpec spec({1, 3, 2});
  CHECK(spec.sizes() == std::vector<int>{3, 2, 1});
  CHECK(spec.vertex_count() == 6);
  CHECK(spec.edge_count() == 11);
  CHECK_FALSE(spec.balanced());
  CHECK(PartiteSpec({2, 2, 2}).balanced());
}

TEST_CASE("complete multipartite hosts") {
  Graph k3 = Graph::complete_multipartite(PartiteSpec({1, 1, 1}));
  CHECK(k3.edge_count() == 3);

  Graph b2 = Graph::complete_multipartite(PartiteSpec({2, 1, 1}));
  CHECK(b2.edge_count() == 5);
  CHECK(b2.part_count() == 3);

  Graph g = Graph::complete_multipartite(PartiteSpec({3, 2, 2, 1}));
  CHECK(g.edge_count() == 23);

  // multipartite invariants: no intra-part edge, every cross pair present
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      CHECK(g.adjacent(u, v) == (g.part_of(u) != g.part_of(v)));
    }
  }
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), ValidationError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 3}}), ValidationError);
  Graph g = Graph::from_edges(4, {{2, 1}, {0, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 2));
  CHECK(g.edge_index(3, 2) == -1);
}

TEST_CASE("coloring validation and partition sanity") {
  Graph k3 = Graph::complete(3);
  CHECK_THROWS_AS(ColoredGraph(k3, {0, 2, 2}), ValidationError);  // gap at 1
  CHECK_THROWS_AS(ColoredGraph(k3, {0, 1}), ValidationError);     // missing edge
  ColoredGraph cg(k3, {0, 1, 0});
  CHECK(cg.color_count() == 2);

  for (int trial = 0; trial < 25; ++trial) {
    Graph host = Graph::complete_multipartite(random_spec(2, 4, 3, 8));
    if (host.edge_count() == 0) continue;
    ColoredGraph rnd = random_coloring(host);
    int total = 0;
    for (int size : rnd.class_sizes()) {
      CHECK(size > 0);
      total += size;
    }
    CHECK(total == host.edge_count());
  }
}

TEST_CASE("color classification on the small instances") {
  Graph k3 = Graph::complete(3);

  ColoredGraph mono = ColoredGraph::monochromatic(k3);
  ColorClassification cls = classify_colors(mono);
  CHECK(cls.s0 == std::vector<int>{0});
  CHECK(cls.s1.empty());
  CHECK(cls.s2.empty());

  // b on v0v1 and v0v2, a on v1v2: b saturated by v0 only, a exclusive
  ColoredGraph two = color_edges(k3, {{0, 1, 0}, {0, 2, 0}, {1, 2, 1}});
  cls = classify_colors(two);
  REQUIRE(cls.s1.size() == 1);
  CHECK(cls.s1[0].first == 0);
  CHECK(cls.s1[0].second == 0);
  REQUIRE(cls.s2.size() == 1);
  CHECK(cls.s2[0].first == 1);

  ColoredGraph rk4 = ColoredGraph::rainbow(Graph::complete(4));
  cls = classify_colors(rk4);
  CHECK(cls.s2.size() == 6);
  CHECK(cls.s0.empty());
  CHECK(cls.s1.empty());
}

TEST_CASE("exclusive-color law and saturation sum over random colorings") {
  for (int trial = 0; trial < 60; ++trial) {
    Graph host = Graph::complete_multipartite(random_spec(2, 4, 3, 8));
    if (host.edge_count() == 0) continue;
    ColoredGraph cg = random_coloring(host, rand_int(1, host.edge_count()));
    ColorClassification cls = classify_colors(cg);
    auto sizes = cg.class_sizes();

    for (int c = 0; c < cg.color_count(); ++c) {
      CHECK((cls.saturation(c) == 2) == (sizes[c] == 1));
    }

    long long sum = 0;
    for (int v = 0; v < host.vertex_count(); ++v) sum += saturated_color_degree(cg, v);
    CHECK(sum == static_cast<long long>(cls.s1.size()) + 2 * cls.s2.size());
  }
}

TEST_CASE("saturated color degree examples") {
  ColoredGraph rk4 = ColoredGraph::rainbow(Graph::complete(4));
  for (int v = 0; v < 4; ++v) CHECK(saturated_color_degree(rk4, v) == 3);

  ColoredGraph mono = ColoredGraph::monochromatic(Graph::complete(3));
  for (int v = 0; v < 3; ++v) CHECK(saturated_color_degree(mono, v) == 0);

  ColoredGraph two = color_edges(Graph::complete(3), {{0, 1, 0}, {0, 2, 0}, {1, 2, 1}});
  CHECK(saturated_color_degree(two, 0) == 1);
  CHECK(saturated_color_degree(two, 1) == 1);
  CHECK(saturated_color_degree(two, 2) == 1);
}

TEST_CASE("rainbow clique detection") {
  CHECK(contains_rainbow_clique(ColoredGraph::rainbow(Graph::complete(4)), 4));
  CHECK_FALSE(contains_rainbow_clique(normal_coloring(PartiteSpec({1, 1, 1})), 3));
  CHECK_FALSE(contains_rainbow_clique(turan_coloring(5, 1, 4), 4));
  CHECK_THROWS_AS(contains_rainbow_clique(ColoredGraph::rainbow(Graph::complete(3)), 1),
                  ValidationError);

  auto witness = find_rainbow_clique(ColoredGraph::rainbow(Graph::complete(5)), 4);
  REQUIRE(witness.has_value());
  CHECK(witness->size() == 4);
}

TEST_CASE("rainbow clique agrees with the naive subset scan") {
  for (int trial = 0; trial < 200; ++trial) {
    Graph host = Graph::complete_multipartite(random_spec(2, 5, 3, 8));
    if (host.edge_count() == 0) continue;
    ColoredGraph cg = random_coloring(host, rand_int(1, host.edge_count()));
    for (int k = 3; k <= 4; ++k) {
      CHECK(contains_rainbow_clique(cg, k) == naive_contains_rainbow_clique(cg, k));
    }
  }
}

TEST_CASE("vertex symmetry") {
  // star with two leaves, distinct exclusive colors: leaves symmetric
  Graph star2 = Graph::complete_multipartite(PartiteSpec({2, 1}));
  ColoredGraph excl = color_edges(star2, {{0, 2, 0}, {1, 2, 1}});
  CHECK(vertices_symmetric(excl, 0, 1));

  // both edges one shared color: still symmetric (no saturated colors at leaves? both
  // leaves see the same non-saturated pattern)
  ColoredGraph shared = color_edges(star2, {{0, 2, 0}, {1, 2, 0}});
  CHECK(vertices_symmetric(shared, 0, 1));

  // three leaves: one leaf on a shared color, one on an exclusive color
  Graph star3 = Graph::complete_multipartite(PartiteSpec({3, 1}));
  ColoredGraph mixed = color_edges(star3, {{0, 3, 0}, {1, 3, 0}, {2, 3, 1}});
  CHECK_FALSE(vertices_symmetric(mixed, 0, 2));
  CHECK(vertices_symmetric(mixed, 0, 1));

  CHECK_THROWS_AS(vertices_symmetric(excl, 0, 2), ValidationError);  // adjacent
  CHECK_THROWS_AS(vertices_symmetric(excl, 0, 0), ValidationError);

  // different neighborhoods: not symmetric, no error (non-adjacent pair)
  Graph path = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  ColoredGraph pc = ColoredGraph::rainbow(path);
  CHECK_FALSE(vertices_symmetric(pc, 0, 2));
}

TEST_CASE("blow-up copies are symmetric") {
  for (int trial = 0; trial < 20; ++trial) {
    int r = rand_int(2, 4);
    ColoredGraph base = random_coloring(Graph::complete(r), rand_int(1, 4));
    std::vector<int> f;
    for (int i = 0; i < r; ++i) f.push_back(rand_int(1, 3));
    ColoredGraph blown = blow_up(base, SizeFunction(f));
    const Graph& g = blown.graph();
    for (int u = 0; u < g.vertex_count(); ++u) {
      for (int v = u + 1; v < g.vertex_count(); ++v) {
        if (g.part_of(u) == g.part_of(v)) CHECK(vertices_symmetric(blown, u, v));
      }
    }
  }
}

TEST_CASE("colored isomorphism basics") {
  ColoredGraph rain = ColoredGraph::rainbow(Graph::complete(3));
  ColoredGraph mono = ColoredGraph::monochromatic(Graph::complete(3));
  CHECK(colored_isomorphic(rain, rain));
  CHECK_FALSE(colored_isomorphic(rain, mono));

  // the four book classes are pairwise non-isomorphic
  std::vector<ColoredGraph> books = book_colorings(2, true);
  REQUIRE(books.size() == 4);
  for (size_t i = 0; i < books.size(); ++i) {
    for (size_t j = i + 1; j < books.size(); ++j) {
      CHECK_FALSE(colored_isomorphic(books[i], books[j]));
      CHECK(canonical_form(books[i]) != canonical_form(books[j]));
    }
  }
}

TEST_CASE("canonical form respects isomorphism") {
  int pairs_checked = 0;
  while (pairs_checked < 200) {
    Graph host = Graph::complete_multipartite(random_spec(2, 4, 3, 7));
    if (host.edge_count() == 0) continue;
    ColoredGraph cg = random_coloring(host, rand_int(1, host.edge_count()));
    ColoredGraph relabeled = random_relabel(cg);
    CHECK(canonical_form(cg) == canonical_form(relabeled));
    CHECK(colored_isomorphic(cg, relabeled));
    ++pairs_checked;
  }

  // colorings with different class-size multisets must get different keys
  int negatives = 0;
  while (negatives < 50) {
    Graph host = Graph::complete_multipartite(random_spec(2, 4, 3, 7));
    if (host.edge_count() < 2) continue;
    ColoredGraph a = random_coloring(host, rand_int(1, host.edge_count()));
    ColoredGraph b = random_coloring(host, rand_int(1, host.edge_count()));
    auto sizes_of = [](const ColoredGraph& cg) {
      auto s = cg.class_sizes();
      std::sort(s.begin(), s.end());
      return s;
    };
    if (sizes_of(a) == sizes_of(b)) continue;
    CHECK(canonical_form(a) != canonical_form(b));
    CHECK_FALSE(colored_isomorphic(a, b));
    ++negatives;
  }
}

TEST_CASE("interchange format round trip and validation") {
  ColoredGraph cg = normal_coloring(PartiteSpec({2, 1, 1}));
  std::string text = colored_graph_to_text(cg, "normal");
  ColoredGraph back = colored_graph_from_text(text);
  CHECK(back.graph().part_sizes() == cg.graph().part_sizes());
  CHECK(back.edge_colors() == cg.edge_colors());

  std::string path = (std::filesystem::temp_directory_path() / "ar_roundtrip.json").string();
  save_colored_graph(cg, path, "normal");
  ColoredGraph loaded = load_colored_graph(path);
  CHECK(loaded.edge_colors() == cg.edge_colors());
  CHECK(seed_name_of_file(path) == "normal");
  std::filesystem::remove(path);

  CHECK_THROWS_AS(colored_graph_from_text("{"), ValidationError);
  CHECK_THROWS_AS(colored_graph_from_text("{\"edges\": []}"), ValidationError);
  CHECK_THROWS_AS(colored_graph_from_text("{\"partite_sizes\": [1, 2], \"edges\": []}"),
                  ValidationError);  // unsorted sizes
  // missing edge
  CHECK_THROWS_AS(
      colored_graph_from_text("{\"partite_sizes\": [1, 1], \"edges\": []}"),
      ValidationError);
  // intra-part pair
  CHECK_THROWS_AS(colored_graph_from_text(
                      "{\"partite_sizes\": [2, 1], \"edges\": [[0, 1, 0], [0, 2, 1], [1, 2, 2]]}"),
                  ValidationError);
  // color gap
  CHECK_THROWS_AS(colored_graph_from_text(
                      "{\"partite_sizes\": [1, 1, 1], \"edges\": [[0,1,0],[0,2,2],[1,2,0]]}"),
                  ValidationError);
  // duplicate edge
  CHECK_THROWS_AS(colored_graph_from_text(
                      "{\"partite_sizes\": [1, 1, 1], \"edges\": [[0,1,0],[1,0,1],[0,2,2],[1,2,3]]}"),
                  ValidationError);
}
