#pragma once

#include <string>

#include "antiramsey/colored_graph.hpp"

namespace ar {

// Colored-graph interchange format (JSON):
//   {
//     "partite_sizes": [2, 1, 1],           // sorted non-increasing
//     "edges": [[0, 2, 0], [0, 3, 1], ...], // [u, v, colorId], 0-based
//     "seed_name": "normal"                 // optional provenance tag
//   }
// The host is the complete multipartite graph on the given sizes with
// vertices numbered part by part. Validation enforces: sizes valid and
// sorted, every cross-part pair present exactly once, no loops or
// intra-part edges, color ids dense with no empty class.

std::string colored_graph_to_text(const ColoredGraph& cg, const std::string& seed_name = "");
ColoredGraph colored_graph_from_text(const std::string& text);

void save_colored_graph(const ColoredGraph& cg, const std::string& path,
                        const std::string& seed_name = "");
ColoredGraph load_colored_graph(const std::string& path);

// seed_name recorded in a file, empty when absent.
std::string seed_name_of_file(const std::string& path);

}  // namespace ar
