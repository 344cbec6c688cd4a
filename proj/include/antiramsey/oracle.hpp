#pragma once

#include <string>
#include <vector>

#include "antiramsey/formulas.hpp"
#include "antiramsey/partition_search.hpp"
#include "antiramsey/theorem6.hpp"

namespace ar {

struct OracleOptions {
  int edge_cap = 13;  // Bell growth: partitions of the edge set are searched
  int jobs = 1;
  search::Stats* stats = nullptr;
};

// Exact ar(host, K_k) by exhaustive partition search over the host's edge
// set. Ground truth for every formula at desk scale.
ArResult brute_force_ar(const Graph& host, int k, const OracleOptions& opts = {});

// All extremal colorings up to colored isomorphism.
struct ExtremalFamily {
  Graph host;
  int k = 0;
  long long ar_value = 0;
  std::vector<ColoredGraph> representatives;  // sorted by canonical key
  std::vector<std::string> canonical_keys;    // parallel to representatives
  bool complete = false;                      // true when search was exhaustive
};

ExtremalFamily enumerate_extremal(const Graph& host, int k, const OracleOptions& opts = {});

// Writes one interchange file per representative plus a manifest
// ("manifest.json") into dir; returns the manifest path. File order is
// byte-stable: representatives sorted by canonical key.
std::string save_extremal_family(const ExtremalFamily& family, const std::string& dir);

// Membership test against the three extremal shapes for complete k-partite
// hosts: (1) all colors exclusive except one repeated pair on two disjoint
// edges across four singleton parts; (2) a Construction-1 book coloring on
// parts of sizes (n_{k-2}, 1, 1), everything else exclusive; (3) one
// repeated star color per vertex of a smallest part, spanning two parts
// whose sizes add to n_{k-2} + n_{k-1}, everything else exclusive.
// Matching is structural, up to reordering parts of equal size.
enum class Theorem8Tag { construction1, construction2, construction3, none };

const char* to_string(Theorem8Tag tag);

Theorem8Tag classify_theorem8(const ColoredGraph& cg, int k);

// Reference graphs for the exceptional extremal cases.
Graph hourglass_graph();  // two triangles sharing a vertex
Graph house_graph();      // 4-cycle plus a triangle roof
Graph prism_graph();      // two disjoint triangles plus a perfect matching

// All (K_k - e)-free graphs on n vertices with dirac_extremal_bound(n, k)
// edges, up to graph isomorphism, sorted by canonical key.
// Requires k >= 4, k + 1 <= n <= 8.
std::vector<Graph> dirac_extremal_graphs(int n, int k);

// Names a graph from the extremal family: "turan", "hourglass", "house",
// "prism" or "other".
std::string dirac_graph_name(const Graph& g, int n, int k);

// Checks that the argmax bases of the blow-up maximization for K_r^t are
// exactly the "rainbow extremal graph plus one common color" colorings.
struct Theorem10Report {
  int r = 0, t = 0, k = 0;
  long long max_weighted = 0;
  int base_count = 0;                     // argmax bases up to isomorphism
  std::vector<BaseColoringScore> bases;   // the argmax bases themselves
  std::vector<std::string> family_found;  // names of exclusive-edge subgraphs
  std::vector<std::string> expected;      // names from dirac_extremal_graphs
  bool pass = false;
  std::string detail;
};

Theorem10Report verify_theorem10(int r, int t, int k, const OracleOptions& opts = {});

}  // namespace ar
