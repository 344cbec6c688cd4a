#pragma once

#include <vector>

#include "antiramsey/blowup.hpp"
#include "antiramsey/colored_graph.hpp"

namespace ar {

// Turan graph T_{n,parts}: complete multipartite on n vertices, part sizes
// differing by at most one, parts listed largest first.
Graph turan_graph(int n, int parts);

// Base coloring of K_k: rainbow except the two edges v_{k-2}v_k, v_{k-1}v_k
// share one color (vertices 0-based: edges (k-3,k-1) and (k-2,k-1)).
ColoredGraph normal_base(int k);

// Base coloring of K_r: rainbow on E(T_{r,parts}) plus one common color on
// the remaining edges.
ColoredGraph rainbow_turan_base(int r, int parts);

// Base coloring of K_r with no rainbow triangle: consecutive vertex pairs
// get exclusive colors, edges from pair j to all earlier pairs share one
// color per j, and (odd r) the last vertex's star gets one color.
ColoredGraph matching_base(int r);

// Normal coloring of K_{n1,...,nk}: blow-up of normal_base(k) with
// f(v_i) = n_i. No rainbow K_k; color count
// sum n_i n_j - n_k (n_{k-1} + n_{k-2} - 1). Requires k = r >= 3.
ColoredGraph normal_coloring(const PartiteSpec& spec);

// Turan coloring of K_r^t for the target K_k: blow-up of
// rainbow_turan_base(r, k-2) with f = t. No rainbow K_k; color count
// t^2 * ex(K_r, K_{k-1}) + 1. Requires r > k >= 4, t >= 1.
ColoredGraph turan_coloring(int r, int t, int k);

// Rainbow-triangle-free coloring of K_{n1,...,nr} with the maximum color
// count: blow-up of matching_base(r) with f = sizes. Requires r >= 3.
ColoredGraph matching_coloring(const PartiteSpec& spec);

// All colorings of the book B_n = K_{n,1,1} with colors {a_0,...,a_n}:
// c(xy) = a_0 and each page z_i is one of (a_i,a_i), (a_i,a_0), (a_0,a_i).
// 3^n raw colorings; with dedupe, one representative per isomorphism class
// (first in generation order). Every output has n+1 colors and no rainbow
// triangle. Vertex layout: z_1..z_n = 0..n-1, x = n, y = n+1.
std::vector<ColoredGraph> book_colorings(int n, bool dedupe = false);

// Non-totally-symmetric extremal coloring of K_r^{t1+t2} for K_k, built
// from two distinct one-vertex Turan extensions of T_{r-1,k-2}: the listed
// edges get exclusive colors, everything else one common color. Requires
// r > k >= 4, (k-2) not dividing r, t1, t2 >= 1.
ColoredGraph example1_coloring(int r, int k, int t1, int t2);

}  // namespace ar
