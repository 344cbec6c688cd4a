#include "antiramsey/blowup.hpp"

#include <numeric>

#include "antiramsey/classify.hpp"

namespace ar {

SizeFunction::SizeFunction(std::vector<int> v) : values(std::move(v)) {
  if (values.empty()) throw ValidationError("size function needs a non-empty domain");
  for (int x : values) {
    if (x < 1) throw ValidationError("size function values must be positive");
  }
}

SizeFunction SizeFunction::uniform(int vertex_count, int t) {
  return SizeFunction(std::vector<int>(vertex_count, t));
}

int SizeFunction::total() const {
  return std::accumulate(values.begin(), values.end(), 0);
}

ColoredGraph blow_up(const ColoredGraph& base, const SizeFunction& f) {
  const Graph& bg = base.graph();
  if (f.vertex_count() != bg.vertex_count()) {
    throw ValidationError("size function domain must match the base vertex set");
  }

  int r = bg.vertex_count();
  std::vector<int> offset(r + 1, 0);
  for (int i = 0; i < r; ++i) offset[i + 1] = offset[i] + f(i);
  int n = offset[r];

  // Complete bases blow up to complete multipartite hosts (blown parts in
  // base vertex order); other bases yield plain graphs.
  Graph host = [&] {
    if (bg.is_complete() && r >= 2) {
      return Graph::complete_multipartite_ordered(f.values);
    }
    std::vector<Edge> edges;
    for (const Edge& be : bg.edges()) {
      for (int s = 0; s < f(be.u); ++s) {
        for (int t = 0; t < f(be.v); ++t) {
          edges.push_back(make_edge(offset[be.u] + s, offset[be.v] + t));
        }
      }
    }
    return Graph::from_edges(n, std::move(edges));
  }();

  ColorClassification cls = classify_colors(base);
  int base_colors = base.color_count();

  // Fresh ids are appended after the base ids in ascending base-color
  // order; copy (0,...) keeps the base id.
  int next_fresh = base_colors;
  std::vector<int> star_first(base_colors, -1);
  std::vector<std::vector<int>> pair_ids(base_colors);
  std::vector<Vertex> sat_vertex(base_colors, -1);
  for (int c = 0; c < base_colors; ++c) {
    if (cls.saturation(c) == 1) {
      for (const auto& [color, vert] : cls.s1) {
        if (color == c) sat_vertex[c] = vert;
      }
      star_first[c] = next_fresh;
      next_fresh += f(sat_vertex[c]) - 1;
    } else if (cls.saturation(c) == 2) {
      Edge e{};
      for (const auto& [color, edge] : cls.s2) {
        if (color == c) e = edge;
      }
      pair_ids[c].resize(static_cast<size_t>(f(e.u)) * f(e.v));
      pair_ids[c][0] = c;
      for (size_t idx = 1; idx < pair_ids[c].size(); ++idx) pair_ids[c][idx] = next_fresh++;
    }
  }

  std::vector<int> colors(host.edge_count(), -1);
  for (const Edge& be : bg.edges()) {
    int c = base.color(be.u, be.v);
    int sat = cls.saturation(c);
    for (int s = 0; s < f(be.u); ++s) {
      for (int t = 0; t < f(be.v); ++t) {
        int e = host.edge_index(offset[be.u] + s, offset[be.v] + t);
        int id = c;
        if (sat == 1) {
          int copy = sat_vertex[c] == be.u ? s : t;
          id = copy == 0 ? c : star_first[c] + copy - 1;
        } else if (sat == 2) {
          id = pair_ids[c][static_cast<size_t>(s) * f(be.v) + t];
        }
        colors[e] = id;
      }
    }
  }
  return ColoredGraph(std::move(host), to_restricted_growth(colors));
}

}  // namespace ar
