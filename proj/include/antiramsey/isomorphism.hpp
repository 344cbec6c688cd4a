#pragma once

#include <string>

#include "antiramsey/colored_graph.hpp"

namespace ar {

// Colored-graph isomorphism: a vertex bijection preserving adjacency
// together with a color bijection. When both graphs carry partite
// structure the vertex bijection must map parts onto parts of equal size.
// Decided by exhaustive search with fingerprint pruning; intended for the
// desk-scale hosts this library enumerates.
bool colored_isomorphic(const ColoredGraph& a, const ColoredGraph& b);

// Canonical key: two colored graphs get equal keys iff colored_isomorphic
// holds. Minimizes the restricted-growth color string (plus adjacency for
// non-multipartite graphs) over all part-respecting vertex permutations.
std::string canonical_form(const ColoredGraph& cg);

// Plain graph isomorphism helpers (no colors, no parts), used for the
// extremal-graph enumeration.
std::string graph_canonical_key(const Graph& g);
bool graphs_isomorphic(const Graph& a, const Graph& b);

}  // namespace ar
