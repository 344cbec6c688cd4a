#include "antiramsey/colored_graph.hpp"

#include <algorithm>

namespace ar {

ColoredGraph::ColoredGraph(Graph g, std::vector<int> edge_colors)
    : g_(std::move(g)), color_of_(std::move(edge_colors)) {
  if (static_cast<int>(color_of_.size()) != g_.edge_count()) {
    throw ValidationError("coloring must assign exactly one color per edge");
  }
  int max_color = -1;
  for (int c : color_of_) {
    if (c < 0) throw ValidationError("negative color id");
    max_color = std::max(max_color, c);
  }
  colors_ = max_color + 1;
  std::vector<char> seen(colors_, 0);
  for (int c : color_of_) seen[c] = 1;
  for (int c = 0; c < colors_; ++c) {
    if (!seen[c]) {
      throw ValidationError("color ids must be dense: id " + std::to_string(c) + " unused");
    }
  }
}

ColoredGraph ColoredGraph::monochromatic(Graph g) {
  if (g.edge_count() == 0) throw ValidationError("cannot color an edgeless graph");
  std::vector<int> colors(g.edge_count(), 0);
  return ColoredGraph(std::move(g), std::move(colors));
}

ColoredGraph ColoredGraph::rainbow(Graph g) {
  if (g.edge_count() == 0) throw ValidationError("cannot color an edgeless graph");
  std::vector<int> colors(g.edge_count());
  for (int e = 0; e < static_cast<int>(colors.size()); ++e) colors[e] = e;
  return ColoredGraph(std::move(g), std::move(colors));
}

int ColoredGraph::color(Vertex u, Vertex v) const {
  int e = g_.edge_index(u, v);
  if (e < 0) throw ValidationError("color() queried on a non-edge");
  return color_of_[e];
}

std::vector<std::vector<int>> ColoredGraph::classes() const {
  std::vector<std::vector<int>> out(colors_);
  for (int e = 0; e < g_.edge_count(); ++e) out[color_of_[e]].push_back(e);
  return out;
}

std::vector<int> ColoredGraph::class_sizes() const {
  std::vector<int> out(colors_, 0);
  for (int c : color_of_) ++out[c];
  return out;
}

std::vector<int> to_restricted_growth(const std::vector<int>& colors) {
  std::vector<int> relabel(colors.size(), -1);
  std::vector<int> out(colors.size());
  int next = 0;
  for (size_t i = 0; i < colors.size(); ++i) {
    int c = colors[i];
    if (c < 0 || c >= static_cast<int>(relabel.size())) {
      relabel.resize(std::max<size_t>(relabel.size(), c + 1), -1);
    }
    if (relabel[c] < 0) relabel[c] = next++;
    out[i] = relabel[c];
  }
  return out;
}

}  // namespace ar
