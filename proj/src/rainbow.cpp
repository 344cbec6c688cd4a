#include "antiramsey/rainbow.hpp"

namespace ar {

namespace {

// Extends the current clique (vertices in `chosen`, all pairwise adjacent
// with pairwise distinct edge colors) by vertices > chosen.back().
bool extend(const ColoredGraph& cg, int k, std::vector<Vertex>& chosen,
            std::vector<char>& color_used) {
  if (static_cast<int>(chosen.size()) == k) return true;
  const Graph& g = cg.graph();
  int start = chosen.empty() ? 0 : chosen.back() + 1;
  // Not enough vertices left to finish the clique.
  int needed = k - static_cast<int>(chosen.size());
  for (Vertex v = start; v + needed <= g.vertex_count(); ++v) {
    bool ok = true;
    for (Vertex u : chosen) {
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // Colors of the new edges must be fresh and pairwise distinct.
    std::vector<int> added;
    for (Vertex u : chosen) {
      int c = cg.color(u, v);
      if (color_used[c]) {
        ok = false;
        break;
      }
      color_used[c] = 1;
      added.push_back(c);
    }
    if (ok) {
      chosen.push_back(v);
      if (extend(cg, k, chosen, color_used)) return true;
      chosen.pop_back();
    }
    for (int c : added) color_used[c] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_rainbow_clique(const ColoredGraph& cg, int k) {
  if (k < 2) throw ValidationError("rainbow clique size must be at least 2");
  if (k > cg.graph().vertex_count()) return std::nullopt;
  std::vector<Vertex> chosen;
  std::vector<char> color_used(cg.color_count(), 0);
  if (extend(cg, k, chosen, color_used)) return chosen;
  return std::nullopt;
}

bool contains_rainbow_clique(const ColoredGraph& cg, int k) {
  return find_rainbow_clique(cg, k).has_value();
}

}  // namespace ar
