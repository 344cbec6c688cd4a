#pragma once

#include "antiramsey/colored_graph.hpp"

namespace ar {

// True when non-adjacent u, v have N(u) = N(v) and there is a bijection
// sigma between their saturated color sets with c(vx) = c(ux) for
// non-saturated colors and c(vx) = sigma(c(ux)) for saturated ones, over
// all x in N(v). sigma is pinned edge-by-edge, so existence reduces to a
// consistency and injectivity check. Rejects adjacent or equal u, v.
bool vertices_symmetric(const ColoredGraph& cg, Vertex u, Vertex v);

// Recolors the edges at v to mirror u's pattern: colors not saturated by u
// are copied, colors saturated by u get fresh replacements. Requires u, v
// non-adjacent with N(u) = N(v). The color count changes by exactly
// d^s(u) - d^s(v) and u, v are symmetric in the result.
ColoredGraph symmetrize(const ColoredGraph& cg, Vertex v, Vertex u);

}  // namespace ar
