#pragma once

#include <stdexcept>
#include <string>

namespace ar {

// Input violates a documented precondition or file contract.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact computation would exceed a configured size limit.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Vertex = int;

// Unordered vertex pair, normalized u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
};

inline bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
inline bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
inline bool operator<(const Edge& a, const Edge& b) {
  return a.u != b.u ? a.u < b.u : a.v < b.v;
}

inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

}  // namespace ar
