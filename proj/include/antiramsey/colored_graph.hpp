#pragma once

#include <vector>

#include "antiramsey/graph.hpp"

namespace ar {

// Edge coloring stored as a partition of the edge set into color classes.
// Color ids are dense: 0..color_count()-1, every class non-empty. Colorings
// are equivalence classes under color renaming; operations treat them so.
class ColoredGraph {
 public:
  ColoredGraph(Graph g, std::vector<int> edge_colors);

  static ColoredGraph monochromatic(Graph g);
  static ColoredGraph rainbow(Graph g);

  const Graph& graph() const { return g_; }
  int color_count() const { return colors_; }
  int edge_color(int edge_idx) const { return color_of_.at(edge_idx); }
  int color(Vertex u, Vertex v) const;
  const std::vector<int>& edge_colors() const { return color_of_; }

  std::vector<std::vector<int>> classes() const;  // color id -> edge indices
  std::vector<int> class_sizes() const;

 private:
  Graph g_;
  std::vector<int> color_of_;
  int colors_ = 0;
};

// Relabel colors by first occurrence over the fixed edge order, producing a
// restricted-growth string; identity on already-canonical labelings.
std::vector<int> to_restricted_growth(const std::vector<int>& colors);

}  // namespace ar
