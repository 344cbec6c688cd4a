#include "antiramsey/interchange.hpp"

#include <fstream>

#include "json.hpp"

namespace ar {

namespace {

nlohmann::json to_json(const ColoredGraph& cg, const std::string& seed_name) {
  const Graph& g = cg.graph();
  if (!g.has_parts()) {
    throw ValidationError("interchange format requires a complete multipartite host");
  }
  nlohmann::json j;
  j["partite_sizes"] = g.part_sizes();
  nlohmann::json edges = nlohmann::json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    edges.push_back({g.edge(e).u, g.edge(e).v, cg.edge_color(e)});
  }
  j["edges"] = std::move(edges);
  if (!seed_name.empty()) j["seed_name"] = seed_name;
  return j;
}

ColoredGraph from_json(const nlohmann::json& j) {
  if (!j.contains("partite_sizes")) {
    throw ValidationError("missing field 'partite_sizes'");
  }
  if (!j.contains("edges")) {
    throw ValidationError("missing field 'edges'");
  }
  std::vector<int> sizes;
  try {
    sizes = j.at("partite_sizes").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("field 'partite_sizes': ") + e.what());
  }
  for (size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i - 1] < sizes[i]) {
      throw ValidationError("field 'partite_sizes' must be sorted non-increasing");
    }
  }
  PartiteSpec spec(sizes);
  Graph host = Graph::complete_multipartite(spec);

  std::vector<int> colors(host.edge_count(), -1);
  if (!j.at("edges").is_array()) throw ValidationError("field 'edges' must be an array");
  size_t row = 0;
  for (const auto& item : j.at("edges")) {
    if (!item.is_array() || item.size() != 3) {
      throw ValidationError("field 'edges' row " + std::to_string(row) +
                            ": expected a [u, v, colorId] triple");
    }
    int u, v, c;
    try {
      u = item.at(0).get<int>();
      v = item.at(1).get<int>();
      c = item.at(2).get<int>();
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError("field 'edges' row " + std::to_string(row) + ": " + e.what());
    }
    int e = host.edge_index(u, v);
    if (e < 0) {
      throw ValidationError("field 'edges' row " + std::to_string(row) + ": pair (" +
                            std::to_string(u) + "," + std::to_string(v) +
                            ") is not an edge of the host");
    }
    if (colors[e] >= 0) {
      throw ValidationError("field 'edges' row " + std::to_string(row) + ": duplicate edge (" +
                            std::to_string(u) + "," + std::to_string(v) + ")");
    }
    if (c < 0) {
      throw ValidationError("field 'edges' row " + std::to_string(row) + ": negative color id");
    }
    colors[e] = c;
    ++row;
  }
  for (int e = 0; e < host.edge_count(); ++e) {
    if (colors[e] < 0) {
      throw ValidationError("field 'edges': host edge (" + std::to_string(host.edge(e).u) + "," +
                            std::to_string(host.edge(e).v) + ") has no color");
    }
  }
  return ColoredGraph(std::move(host), std::move(colors));  // density checked here
}

}  // namespace

std::string colored_graph_to_text(const ColoredGraph& cg, const std::string& seed_name) {
  return to_json(cg, seed_name).dump(2) + "\n";
}

ColoredGraph colored_graph_from_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed document: ") + e.what());
  }
  return from_json(j);
}

void save_colored_graph(const ColoredGraph& cg, const std::string& path,
                        const std::string& seed_name) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open for writing: " + path);
  out << colored_graph_to_text(cg, seed_name);
}

ColoredGraph load_colored_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return colored_graph_from_text(text);
}

std::string seed_name_of_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed document: ") + e.what());
  }
  return j.value("seed_name", "");
}

}  // namespace ar
