#pragma once

#include <map>
#include <string>
#include <vector>

namespace ar {

// Machine-readable record of one CLI run. Values are kept as strings for
// flexible echoing; numeric results round-trip exactly through the JSON
// encoding (they are written as JSON numbers).
struct RunReport {
  std::string command;
  std::map<std::string, std::string> inputs;
  std::map<std::string, long long> results;
  std::map<std::string, std::string> text_results;
  double timing_ms = 0.0;
  long long nodes = 0;
  long long pruned = 0;
  std::vector<std::string> outputs;

  std::string to_text() const;
  static RunReport from_text(const std::string& text);
  void save(const std::string& path) const;
  static RunReport load(const std::string& path);
};

}  // namespace ar
