#include "antiramsey/classify.hpp"

#include <algorithm>

namespace ar {

ColorClassification classify_colors(const ColoredGraph& cg) {
  const Graph& g = cg.graph();
  ColorClassification out;
  out.saturation_of.assign(cg.color_count(), 0);

  auto classes = cg.classes();
  for (int c = 0; c < cg.color_count(); ++c) {
    const auto& edge_ids = classes[c];
    if (edge_ids.size() == 1) {
      out.s2.push_back({c, g.edge(edge_ids[0])});
      out.saturation_of[c] = 2;
      continue;
    }
    // Two distinct edges share at most one vertex, so the set of vertices
    // meeting every edge of a multi-edge class has size 0 or 1.
    const Edge& first = g.edge(edge_ids[0]);
    Vertex cand[2] = {first.u, first.v};
    bool alive[2] = {true, true};
    for (size_t i = 1; i < edge_ids.size(); ++i) {
      const Edge& e = g.edge(edge_ids[i]);
      for (int s = 0; s < 2; ++s) {
        if (alive[s] && e.u != cand[s] && e.v != cand[s]) alive[s] = false;
      }
      if (!alive[0] && !alive[1]) break;
    }
    if (alive[0]) {
      out.s1.push_back({c, cand[0]});
      out.saturation_of[c] = 1;
    } else if (alive[1]) {
      out.s1.push_back({c, cand[1]});
      out.saturation_of[c] = 1;
    } else {
      out.s0.push_back(c);
      out.saturation_of[c] = 0;
    }
  }
  return out;
}

std::vector<int> saturated_colors(const ColoredGraph& cg, Vertex v) {
  if (v < 0 || v >= cg.graph().vertex_count()) {
    throw ValidationError("vertex out of range");
  }
  ColorClassification cls = classify_colors(cg);
  std::vector<int> out;
  for (const auto& [color, vert] : cls.s1) {
    if (vert == v) out.push_back(color);
  }
  for (const auto& [color, edge] : cls.s2) {
    if (edge.u == v || edge.v == v) out.push_back(color);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int saturated_color_degree(const ColoredGraph& cg, Vertex v) {
  return static_cast<int>(saturated_colors(cg, v).size());
}

}  // namespace ar
