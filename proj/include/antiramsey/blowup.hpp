#pragma once

#include <vector>

#include "antiramsey/colored_graph.hpp"

namespace ar {

// Size function f: V(base) -> positive integers for blow-ups.
struct SizeFunction {
  explicit SizeFunction(std::vector<int> values);
  static SizeFunction uniform(int vertex_count, int t);

  int operator()(Vertex v) const { return values.at(v); }
  int vertex_count() const { return static_cast<int>(values.size()); }
  int total() const;

  std::vector<int> values;
};

// Blow-up of a colored graph: vertex v_i becomes an independent set of
// f(v_i) copies. Colors follow the saturation buckets of the base:
//   - a color saturated by no vertex is copied verbatim to every blown edge;
//   - a color saturated by v_i splits into f(v_i) colors, one per copy of v_i;
//   - an exclusive color on v_i v_j splits into f(v_i) * f(v_j) colors,
//     one per blown edge.
// Fresh colors are appended after the surviving base ids in a fixed order.
// When the base is complete the result carries partite structure.
ColoredGraph blow_up(const ColoredGraph& base, const SizeFunction& f);

}  // namespace ar
