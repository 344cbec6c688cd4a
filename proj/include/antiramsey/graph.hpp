#pragma once

#include <vector>

#include "antiramsey/partite.hpp"
#include "antiramsey/types.hpp"

namespace ar {

// Simple undirected graph with O(1) adjacency and edge-index lookup.
// Optionally carries partite structure: part_of is set when the graph was
// built as a complete multipartite host (vertices numbered part by part,
// every cross-part pair an edge, no intra-part edge).
class Graph {
 public:
  Graph() = default;  // empty graph

  static Graph from_edges(int vertex_count, std::vector<Edge> edges);
  static Graph complete(int vertex_count);
  static Graph complete_multipartite(const PartiteSpec& spec);
  // Same, but keeps the given part order (used by blow-ups, whose parts
  // follow base vertex order rather than sorted sizes).
  static Graph complete_multipartite_ordered(const std::vector<int>& sizes);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int idx) const { return edges_.at(idx); }

  bool adjacent(Vertex u, Vertex v) const;
  int edge_index(Vertex u, Vertex v) const;  // -1 when not an edge
  std::vector<Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;

  bool has_parts() const { return !part_of_.empty(); }
  int part_of(Vertex v) const { return part_of_.at(v); }
  int part_count() const;
  std::vector<int> part_sizes() const;  // in part order, not re-sorted

  bool is_complete() const;

 private:
  void build_index();

  int n_ = 0;
  std::vector<Edge> edges_;      // sorted lexicographically, unique
  std::vector<int> part_of_;    // empty when no partite structure
  std::vector<int> edge_index_;  // n*n flattened, -1 for non-edges
};

}  // namespace ar
