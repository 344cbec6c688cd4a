#pragma once

#include <utility>
#include <vector>

#include "antiramsey/colored_graph.hpp"

namespace ar {

// Saturation buckets of a coloring. A color is saturated by a vertex when
// every edge of that color meets the vertex. Every color is saturated by
// 0, 1 or 2 vertices; two saturating vertices force a single-edge class
// (an exclusive color).
struct ColorClassification {
  std::vector<int> s0;                          // saturated by no vertex
  std::vector<std::pair<int, Vertex>> s1;       // color -> unique saturating vertex
  std::vector<std::pair<int, Edge>> s2;         // color -> its unique edge
  std::vector<int> saturation_of;               // per color id: 0, 1 or 2

  int saturation(int color) const { return saturation_of.at(color); }
};

ColorClassification classify_colors(const ColoredGraph& cg);

// d^s(v): number of colors saturated by v.
int saturated_color_degree(const ColoredGraph& cg, Vertex v);

// Colors saturated by v, ascending.
std::vector<int> saturated_colors(const ColoredGraph& cg, Vertex v);

}  // namespace ar
