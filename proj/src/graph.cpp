#include "antiramsey/graph.hpp"

#include <algorithm>

namespace ar {

void Graph::build_index() {
  edge_index_.assign(static_cast<size_t>(n_) * n_, -1);
  for (int e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[e];
    edge_index_[static_cast<size_t>(ed.u) * n_ + ed.v] = e;
    edge_index_[static_cast<size_t>(ed.v) * n_ + ed.u] = e;
  }
}

Graph Graph::from_edges(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 0) throw ValidationError("negative vertex count");
  Graph g;
  g.n_ = vertex_count;
  for (Edge& e : edges) {
    if (e.u == e.v) throw ValidationError("loop edge rejected");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= vertex_count) throw ValidationError("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw ValidationError("duplicate edge rejected");
  }
  g.edges_ = std::move(edges);
  g.build_index();
  return g;
}

Graph Graph::complete(int vertex_count) {
  std::vector<Edge> edges;
  for (int u = 0; u < vertex_count; ++u) {
    for (int v = u + 1; v < vertex_count; ++v) edges.push_back({u, v});
  }
  return from_edges(vertex_count, std::move(edges));
}

Graph Graph::complete_multipartite(const PartiteSpec& spec) {
  return complete_multipartite_ordered(spec.sizes());
}

Graph Graph::complete_multipartite_ordered(const std::vector<int>& sizes) {
  if (sizes.size() < 2) throw ValidationError("multipartite host needs at least 2 parts");
  int n = 0;
  for (int s : sizes) {
    if (s < 1) throw ValidationError("partite set sizes must be positive");
    n += s;
  }
  std::vector<int> part_of(n);
  int next = 0;
  for (size_t p = 0; p < sizes.size(); ++p) {
    for (int i = 0; i < sizes[p]; ++i) part_of[next++] = static_cast<int>(p);
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) edges.push_back({u, v});
    }
  }
  Graph g = from_edges(n, std::move(edges));
  g.part_of_ = std::move(part_of);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
  return edge_index_[static_cast<size_t>(u) * n_ + v];
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (int u = 0; u < n_; ++u) {
    if (u != v && adjacent(u, v)) out.push_back(u);
  }
  return out;
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u) {
    if (u != v && adjacent(u, v)) ++d;
  }
  return d;
}

int Graph::part_count() const {
  if (part_of_.empty()) return 0;
  return *std::max_element(part_of_.begin(), part_of_.end()) + 1;
}

std::vector<int> Graph::part_sizes() const {
  std::vector<int> sizes(part_count(), 0);
  for (int p : part_of_) ++sizes[p];
  return sizes;
}

bool Graph::is_complete() const {
  return edge_count() == n_ * (n_ - 1) / 2;
}

}  // namespace ar
