#include <filesystem>
#include <fstream>

#include "antiramsey/interchange.hpp"
#include "antiramsey/oracle.hpp"
#include "json.hpp"

namespace ar {

std::string save_extremal_family(const ExtremalFamily& family, const std::string& dir) {
  if (!family.host.has_parts()) {
    throw ValidationError("only complete multipartite hosts serialize to the "
                          "interchange format");
  }
  std::filesystem::create_directories(dir);

  nlohmann::json manifest;
  manifest["partite_sizes"] = family.host.part_sizes();
  manifest["k"] = family.k;
  manifest["ar_value"] = family.ar_value;
  manifest["count"] = family.representatives.size();
  manifest["complete"] = family.complete;

  std::vector<std::string> files;
  for (size_t i = 0; i < family.representatives.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "extremal_%03zu.json", i);
    std::filesystem::path path = std::filesystem::path(dir) / name;
    save_colored_graph(family.representatives[i], path.string(), "extremal");
    files.push_back(name);
  }
  manifest["representatives"] = files;

  std::filesystem::path mpath = std::filesystem::path(dir) / "manifest.json";
  std::ofstream out(mpath);
  if (!out) throw ValidationError("cannot open for writing: " + mpath.string());
  out << manifest.dump(2) << "\n";
  return mpath.string();
}

}  // namespace ar
