#include "antiramsey/report.hpp"

#include <fstream>

#include "antiramsey/types.hpp"
#include "json.hpp"

namespace ar {

std::string RunReport::to_text() const {
  nlohmann::json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  j["text_results"] = text_results;
  j["timing_ms"] = timing_ms;
  j["nodes"] = nodes;
  j["pruned"] = pruned;
  j["outputs"] = outputs;
  return j.dump(2) + "\n";
}

RunReport RunReport::from_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
  RunReport r;
  r.command = j.value("command", "");
  if (j.contains("inputs")) r.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
  if (j.contains("results")) r.results = j.at("results").get<std::map<std::string, long long>>();
  if (j.contains("text_results")) {
    r.text_results = j.at("text_results").get<std::map<std::string, std::string>>();
  }
  r.timing_ms = j.value("timing_ms", 0.0);
  r.nodes = j.value("nodes", 0ll);
  r.pruned = j.value("pruned", 0ll);
  if (j.contains("outputs")) r.outputs = j.at("outputs").get<std::vector<std::string>>();
  return r;
}

void RunReport::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open for writing: " + path);
  out << to_text();
}

RunReport RunReport::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return from_text(text);
}

}  // namespace ar
