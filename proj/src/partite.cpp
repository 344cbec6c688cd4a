#include "antiramsey/partite.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ar {

PartiteSpec::PartiteSpec(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.size() < 2) {
    throw ValidationError("partite spec needs at least 2 parts, got " +
                          std::to_string(sizes_.size()));
  }
  for (int s : sizes_) {
    if (s < 1) {
      throw ValidationError("partite set sizes must be positive, got " + std::to_string(s));
    }
  }
  std::sort(sizes_.begin(), sizes_.end(), std::greater<int>());
}

int PartiteSpec::vertex_count() const {
  return std::accumulate(sizes_.begin(), sizes_.end(), 0);
}

long long PartiteSpec::edge_count() const {
  long long total = 0;
  for (size_t i = 0; i < sizes_.size(); ++i) {
    for (size_t j = i + 1; j < sizes_.size(); ++j) {
      total += static_cast<long long>(sizes_[i]) * sizes_[j];
    }
  }
  return total;
}

bool PartiteSpec::balanced() const {
  return std::all_of(sizes_.begin(), sizes_.end(), [&](int s) { return s == sizes_[0]; });
}

}  // namespace ar
