#include "antiramsey/symmetry.hpp"

#include <algorithm>
#include <map>

#include "antiramsey/classify.hpp"

namespace ar {

namespace {

void check_pair(const ColoredGraph& cg, Vertex u, Vertex v) {
  const Graph& g = cg.graph();
  if (u == v) throw ValidationError("symmetry needs two distinct vertices");
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) {
    throw ValidationError("vertex out of range");
  }
  if (g.adjacent(u, v)) throw ValidationError("symmetry is defined for non-adjacent vertices");
}

}  // namespace

bool vertices_symmetric(const ColoredGraph& cg, Vertex u, Vertex v) {
  check_pair(cg, u, v);
  const Graph& g = cg.graph();
  if (g.neighbors(u) != g.neighbors(v)) return false;

  std::vector<int> su = saturated_colors(cg, u);
  std::vector<int> sv = saturated_colors(cg, v);
  if (su.size() != sv.size()) return false;

  auto in_su = [&](int c) { return std::binary_search(su.begin(), su.end(), c); };
  auto in_sv = [&](int c) { return std::binary_search(sv.begin(), sv.end(), c); };

  // sigma has no freedom: every saturated color of u appears at u, so the
  // edges pin sigma(a) = c(vx) for any x with c(ux) = a.
  std::map<int, int> sigma;
  std::map<int, int> sigma_inv;
  for (Vertex x : g.neighbors(u)) {
    int a = cg.color(u, x);
    int b = cg.color(v, x);
    if (!in_su(a)) {
      if (b != a) return false;
      continue;
    }
    if (!in_sv(b)) return false;
    auto it = sigma.find(a);
    if (it != sigma.end()) {
      if (it->second != b) return false;
    } else {
      if (sigma_inv.count(b)) return false;  // not injective
      sigma[a] = b;
      sigma_inv[b] = a;
    }
  }
  // sigma is total on S(u) and injective into S(v) of equal size: bijection.
  return true;
}

ColoredGraph symmetrize(const ColoredGraph& cg, Vertex v, Vertex u) {
  check_pair(cg, u, v);
  const Graph& g = cg.graph();
  if (g.neighbors(u) != g.neighbors(v)) {
    throw ValidationError("symmetrization needs N(u) = N(v)");
  }

  std::vector<int> su = saturated_colors(cg, u);
  auto fresh_of = [&](int a) {
    auto it = std::lower_bound(su.begin(), su.end(), a);
    return cg.color_count() + static_cast<int>(it - su.begin());
  };
  auto in_su = [&](int c) { return std::binary_search(su.begin(), su.end(), c); };

  std::vector<int> colors = cg.edge_colors();
  for (Vertex x : g.neighbors(v)) {
    int a = cg.color(u, x);
    colors[g.edge_index(v, x)] = in_su(a) ? fresh_of(a) : a;
  }

  // Compact to dense ids; surviving old ids keep their relative order and
  // fresh ids follow them.
  std::vector<int> used(colors.begin(), colors.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::map<int, int> relabel;
  for (size_t i = 0; i < used.size(); ++i) relabel[used[i]] = static_cast<int>(i);
  for (int& c : colors) c = relabel[c];

  return ColoredGraph(g, std::move(colors));
}

}  // namespace ar
