#pragma once

#include <vector>

#include "antiramsey/types.hpp"

namespace ar {

// Multiset of partite-set sizes n1 >= n2 >= ... >= nr >= 1 defining the
// complete multipartite host K_{n1,...,nr}. Sizes are re-sorted
// non-increasing on construction; r >= 2 is required (one part would give
// an edgeless host).
class PartiteSpec {
 public:
  explicit PartiteSpec(std::vector<int> sizes);

  int part_count() const { return static_cast<int>(sizes_.size()); }
  int size(int part) const { return sizes_.at(part); }
  const std::vector<int>& sizes() const { return sizes_; }

  int vertex_count() const;
  long long edge_count() const;  // sum over i<j of n_i * n_j
  bool balanced() const;         // all parts the same size

 private:
  std::vector<int> sizes_;
};

}  // namespace ar
