#pragma once

#include <functional>
#include <vector>

#include "antiramsey/graph.hpp"

namespace ar::search {

struct Stats {
  long long nodes = 0;
  long long bound_pruned = 0;
  long long rainbow_pruned = 0;
  long long completed = 0;

  Stats& operator+=(const Stats& o) {
    nodes += o.nodes;
    bound_pruned += o.bound_pruned;
    rainbow_pruned += o.rainbow_pruned;
    completed += o.completed;
    return *this;
  }
};

struct Options {
  int jobs = 1;
  // Optional seed assignment (a restricted-growth string over the host's
  // edge order). Must describe a coloring with no rainbow K_k; it enters
  // the candidate pool and initializes the incumbent.
  std::vector<int> seed_rgs;
  Stats* stats = nullptr;
  // Test hook, called per search node with the partial assignment and the
  // number of assigned edges.
  std::function<void(const std::vector<int>&, int)> node_hook;
};

struct MaxResult {
  long long best = -1;
  std::vector<int> best_rgs;  // lexicographically smallest argmax assignment
};

// Branch-and-bound maximum over all edge-set partitions of the host that
// leave no k-clique rainbow. The objective scores each finished class:
// a single edge (u,v) scores f(u)*f(v), a star with apex w scores f(w),
// anything else scores 1. The bound counts every unassigned edge as a
// fresh single-edge class, which never underestimates: growing a class can
// only lower its score. Pruning keeps ties alive so the returned witness
// is schedule-independent.
MaxResult maximize(const Graph& host, int k, const std::vector<long long>& f,
                   const Options& opts = {});

// Visits every partition with objective exactly `target` and no rainbow
// K_k. Emission order is deterministic (lexicographic in the
// restricted-growth string) regardless of worker count.
void collect(const Graph& host, int k, const std::vector<long long>& f, long long target,
             const std::function<void(const std::vector<int>&)>& emit,
             const Options& opts = {});

}  // namespace ar::search
