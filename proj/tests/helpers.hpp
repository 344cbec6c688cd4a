#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "antiramsey/colored_graph.hpp"
#include "antiramsey/partite.hpp"

namespace ar::testing {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240817);
  return gen;
}

inline int rand_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

// Random multipartite spec with at most max_vertices in total.
inline PartiteSpec random_spec(int min_parts, int max_parts, int max_size, int max_vertices) {
  for (;;) {
    int r = rand_int(min_parts, max_parts);
    std::vector<int> sizes;
    int total = 0;
    for (int i = 0; i < r; ++i) {
      int s = rand_int(1, max_size);
      sizes.push_back(s);
      total += s;
    }
    if (total <= max_vertices) return PartiteSpec(sizes);
  }
}

// Random restricted-growth coloring; max_colors > 0 caps the palette to
// bias toward repeated colors.
inline ColoredGraph random_coloring(const Graph& g, int max_colors = 0) {
  std::vector<int> colors(g.edge_count());
  int used = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    int hi = used;  // choosing 'used' opens a new color
    if (max_colors > 0 && hi > max_colors - 1) hi = max_colors - 1;
    int c = rand_int(0, hi);
    colors[e] = c;
    if (c == used) ++used;
  }
  return ColoredGraph(g, colors);
}

// Builds a coloring from explicit (u, v, color) triples; every host edge
// must appear exactly once.
inline ColoredGraph color_edges(const Graph& g,
                                const std::vector<std::tuple<int, int, int>>& triples) {
  std::vector<int> colors(g.edge_count(), -1);
  for (const auto& [u, v, c] : triples) colors.at(g.edge_index(u, v)) = c;
  return ColoredGraph(g, colors);
}

// Independent rainbow-clique oracle: enumerate all k-subsets with a 0/1
// selector, check completeness and pairwise distinct colors.
inline bool naive_contains_rainbow_clique(const ColoredGraph& cg, int k) {
  const Graph& g = cg.graph();
  int n = g.vertex_count();
  if (k > n) return false;
  std::vector<int> selector(n, 0);
  std::fill(selector.end() - k, selector.end(), 1);
  std::sort(selector.begin(), selector.end());
  do {
    std::vector<int> verts;
    for (int i = 0; i < n; ++i) {
      if (selector[i]) verts.push_back(i);
    }
    bool clique = true;
    std::vector<int> colors;
    for (size_t i = 0; i < verts.size() && clique; ++i) {
      for (size_t j = i + 1; j < verts.size() && clique; ++j) {
        if (!g.adjacent(verts[i], verts[j])) {
          clique = false;
        } else {
          colors.push_back(cg.color(verts[i], verts[j]));
        }
      }
    }
    if (!clique) continue;
    std::sort(colors.begin(), colors.end());
    if (std::adjacent_find(colors.begin(), colors.end()) == colors.end()) return true;
  } while (std::next_permutation(selector.begin(), selector.end()));
  return false;
}

// All set partitions of {0..m-1} as restricted-growth strings: the
// reference enumerator for engine tests.
inline std::vector<std::vector<int>> naive_partitions(int m) {
  std::vector<std::vector<int>> out;
  if (m == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> cur(m, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == m) {
      out.push_back(cur);
      return;
    }
    for (int c = 0; c <= used; ++c) {
      cur[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  rec(0, 0);
  return out;
}

// Random relabeling of a colored graph: parts mapped onto equal-size
// parts, vertices shuffled within parts, colors renamed. For graphs
// without parts, any vertex permutation.
inline ColoredGraph random_relabel(const ColoredGraph& cg) {
  const Graph& g = cg.graph();
  int n = g.vertex_count();

  std::vector<int> vperm(n);
  if (g.has_parts()) {
    int pc = g.part_count();
    std::vector<std::vector<Vertex>> members(pc);
    for (int v = 0; v < n; ++v) members[g.part_of(v)].push_back(v);

    std::map<int, std::vector<int>> by_size;
    for (int p = 0; p < pc; ++p) by_size[static_cast<int>(members[p].size())].push_back(p);
    std::vector<int> part_image(pc);
    for (auto& [size, group] : by_size) {
      std::vector<int> shuffled = group;
      std::shuffle(shuffled.begin(), shuffled.end(), rng());
      for (size_t i = 0; i < group.size(); ++i) part_image[group[i]] = shuffled[i];
    }
    for (int p = 0; p < pc; ++p) {
      std::vector<Vertex> target = members[part_image[p]];
      std::shuffle(target.begin(), target.end(), rng());
      for (size_t i = 0; i < members[p].size(); ++i) vperm[members[p][i]] = target[i];
    }
  } else if (g.is_complete()) {
    for (int v = 0; v < n; ++v) vperm[v] = v;
    std::shuffle(vperm.begin(), vperm.end(), rng());
  } else {
    // arbitrary shuffles are not adjacency-preserving here; rename colors only
    for (int v = 0; v < n; ++v) vperm[v] = v;
  }

  std::vector<int> cperm(cg.color_count());
  for (int c = 0; c < cg.color_count(); ++c) cperm[c] = c;
  std::shuffle(cperm.begin(), cperm.end(), rng());

  std::vector<int> colors(g.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    int target = g.edge_index(vperm[ed.u], vperm[ed.v]);
    colors[target] = cperm[cg.edge_color(e)];
  }
  return ColoredGraph(g, colors);
}

}  // namespace ar::testing
