#pragma once

#include <optional>
#include <vector>

#include "antiramsey/colored_graph.hpp"

namespace ar {

// Searches for k vertices inducing a complete subgraph whose C(k,2) edges
// carry pairwise distinct colors. Returns the witness vertex set if found.
std::optional<std::vector<Vertex>> find_rainbow_clique(const ColoredGraph& cg, int k);

bool contains_rainbow_clique(const ColoredGraph& cg, int k);

}  // namespace ar
