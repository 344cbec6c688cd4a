#include "antiramsey/partition_search.hpp"

#include <algorithm>
#include <climits>
#include <thread>

#include "antiramsey/types.hpp"

namespace ar::search {

namespace {

constexpr long long kNoFloor = LLONG_MIN / 4;

// k-cliques of the host, each stored as its edge indices and bucketed by
// the largest one. Two edges in distinct classes stay distinct in every
// descendant partition, so a clique needs testing exactly once: at the
// moment its last edge gets a class.
struct CliquePre {
  // flattened records per bucket: [count, e0, e1, ...]*
  std::vector<std::vector<int>> by_last_edge;

  CliquePre(const Graph& host, int k) : by_last_edge(host.edge_count() + 1) {
    if (k < 2) throw ValidationError("clique size must be at least 2");
    std::vector<Vertex> chosen;
    build(host, k, 0, chosen);
  }

  void build(const Graph& host, int k, Vertex start, std::vector<Vertex>& chosen) {
    if (static_cast<int>(chosen.size()) == k) {
      std::vector<int> ids;
      int last = -1;
      for (size_t i = 0; i < chosen.size(); ++i) {
        for (size_t j = i + 1; j < chosen.size(); ++j) {
          int e = host.edge_index(chosen[i], chosen[j]);
          ids.push_back(e);
          last = std::max(last, e);
        }
      }
      auto& bucket = by_last_edge[last];
      bucket.push_back(static_cast<int>(ids.size()));
      bucket.insert(bucket.end(), ids.begin(), ids.end());
      return;
    }
    int needed = k - static_cast<int>(chosen.size());
    for (Vertex v = start; v + needed <= host.vertex_count(); ++v) {
      bool ok = true;
      for (Vertex u : chosen) {
        if (!host.adjacent(u, v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(v);
      build(host, k, v + 1, chosen);
      chosen.pop_back();
    }
  }
};

struct ClassState {
  int kind;  // 0 single edge, 1 star, 2 spread with no common vertex
  Vertex a, b;
  long long score;
};

struct Engine {
  const Graph& host;
  const std::vector<long long>& f;
  const CliquePre& cliques;
  int m;
  std::vector<long long> suffix;  // suffix[i] = sum_{j >= i} f(u_j) f(v_j)

  std::vector<int> color;
  std::vector<ClassState> classes;
  long long total = 0;
  Stats stats;

  Engine(const Graph& h, const std::vector<long long>& fv, const CliquePre& cp)
      : host(h), f(fv), cliques(cp), m(h.edge_count()) {
    if (static_cast<int>(f.size()) != host.vertex_count()) {
      throw ValidationError("weight vector must cover all host vertices");
    }
    for (long long x : f) {
      if (x < 1) throw ValidationError("weights must be positive");
    }
    suffix.assign(m + 1, 0);
    for (int e = m - 1; e >= 0; --e) {
      const Edge& ed = host.edge(e);
      suffix[e] = suffix[e + 1] + f[ed.u] * f[ed.v];
    }
    color.assign(m, -1);
    classes.reserve(m);
  }

  // Class scores: single edge (u,v) -> f(u) f(v); star with apex w -> f(w);
  // spread -> 1. Joining a class never raises its score, so counting every
  // unassigned edge as a fresh single-edge class is an admissible bound.
  ClassState assign(int e, int c) {
    const Edge& ed = host.edge(e);
    color[e] = c;
    if (c == static_cast<int>(classes.size())) {
      ClassState fresh{0, ed.u, ed.v, f[ed.u] * f[ed.v]};
      classes.push_back(fresh);
      total += fresh.score;
      return ClassState{-1, 0, 0, 0};  // marker: class was created here
    }
    ClassState old = classes[c];
    ClassState next = old;
    if (old.kind == 0) {
      Vertex shared = -1;
      if (old.a == ed.u || old.a == ed.v) shared = old.a;
      if (old.b == ed.u || old.b == ed.v) shared = old.b;
      next = shared >= 0 ? ClassState{1, shared, -1, f[shared]} : ClassState{2, -1, -1, 1};
    } else if (old.kind == 1) {
      if (old.a != ed.u && old.a != ed.v) next = ClassState{2, -1, -1, 1};
    }
    classes[c] = next;
    total += next.score - old.score;
    return old;
  }

  void undo(int e, int c, const ClassState& saved) {
    color[e] = -1;
    if (saved.kind == -1) {
      total -= classes.back().score;
      classes.pop_back();
      return;
    }
    total += saved.score - classes[c].score;
    classes[c] = saved;
  }

  bool rainbow_at(int e) const {
    const auto& bucket = cliques.by_last_edge[e];
    for (size_t i = 0; i < bucket.size();) {
      int count = bucket[i];
      unsigned long long mask = 0;
      bool distinct = true;
      for (int j = 0; j < count; ++j) {
        unsigned long long bit = 1ull << color[bucket[i + 1 + j]];
        if (mask & bit) {
          distinct = false;
          break;
        }
        mask |= bit;
      }
      if (distinct) return true;
      i += count + 1;
    }
    return false;
  }
};

// Depth-first walk in restricted-growth (lexicographic) order. Exploration
// keeps ties alive (prune only strictly below *floor), so every assignment
// matching the final maximum is visited no matter how the incumbent moved.
struct DfsDriver {
  Engine& eng;
  const long long* floor;
  bool cap_classes;   // collect mode: opening class target+1 cannot pay off
  long long target;   // collect mode only
  const std::function<void(const std::vector<int>&, long long)>& on_complete;
  const std::function<void(const std::vector<int>&, int)>* hook;

  void run(int e) {
    ++eng.stats.nodes;
    if (hook && *hook) (*hook)(eng.color, e);
    if (e == eng.m) {
      ++eng.stats.completed;
      on_complete(eng.color, eng.total);
      return;
    }
    int limit = static_cast<int>(eng.classes.size());
    for (int c = 0; c <= limit; ++c) {
      if (cap_classes && c == limit && static_cast<long long>(limit) + 1 > target) break;
      ClassState saved = eng.assign(e, c);
      if (eng.rainbow_at(e)) {
        ++eng.stats.rainbow_pruned;
      } else if (eng.total + eng.suffix[e + 1] < *floor) {
        ++eng.stats.bound_pruned;
      } else {
        run(e + 1);
      }
      eng.undo(e, c, saved);
    }
  }
};

// Replays a full assignment; returns its objective. Rejects non-RGS input
// and assignments containing a rainbow k-clique.
long long replay(Engine& eng, const std::vector<int>& rgs) {
  if (static_cast<int>(rgs.size()) != eng.m) {
    throw ValidationError("seed assignment length must equal the edge count");
  }
  for (int e = 0; e < eng.m; ++e) {
    int c = rgs[e];
    if (c < 0 || c > static_cast<int>(eng.classes.size())) {
      throw ValidationError("seed assignment is not a restricted-growth string");
    }
    eng.assign(e, c);
    if (eng.rainbow_at(e)) {
      throw ValidationError("seed coloring contains a rainbow clique");
    }
  }
  return eng.total;
}

struct Prefixes {
  int depth = 0;
  std::vector<std::vector<int>> assignments;  // lexicographic order
};

// Partial assignments of the first `depth` edges surviving the rainbow
// check, in lexicographic order. Bound pruning is not applied here; floors
// only grow, so this is a superset of whatever a worker will explore.
Prefixes split_prefixes(Engine& eng, int want) {
  Prefixes out;
  out.assignments.push_back({});
  while (out.depth < eng.m && static_cast<int>(out.assignments.size()) < want * 4) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out.assignments) {
      std::vector<ClassState> saved;
      for (int e = 0; e < out.depth; ++e) saved.push_back(eng.assign(e, prefix[e]));
      int limit = static_cast<int>(eng.classes.size());
      for (int c = 0; c <= limit; ++c) {
        ClassState s = eng.assign(out.depth, c);
        if (!eng.rainbow_at(out.depth)) {
          next.push_back(prefix);
          next.back().push_back(c);
        }
        eng.undo(out.depth, c, s);
      }
      for (int e = out.depth - 1; e >= 0; --e) eng.undo(e, prefix[e], saved[e]);
    }
    out.assignments = std::move(next);
    ++out.depth;
    if (out.assignments.empty()) break;
  }
  return out;
}

bool better(long long v, const std::vector<int>& rgs, long long best,
            const std::vector<int>& best_rgs) {
  if (v != best) return v > best;
  if (best_rgs.empty()) return !rgs.empty();
  return rgs < best_rgs;
}

}  // namespace

MaxResult maximize(const Graph& host, int k, const std::vector<long long>& f,
                   const Options& opts) {
  if (host.edge_count() > 62) {
    throw CapacityError("partition search limited to 62 edges, got " +
                        std::to_string(host.edge_count()));
  }
  CliquePre cliques(host, k);

  long long seed_value = kNoFloor;
  std::vector<int> seed_rgs = opts.seed_rgs;
  if (!seed_rgs.empty()) {
    Engine probe(host, f, cliques);
    seed_value = replay(probe, seed_rgs);
  }

  MaxResult result;
  result.best = seed_value;
  result.best_rgs = seed_rgs;
  Stats totals;

  if (opts.jobs <= 1 || host.edge_count() == 0) {
    Engine eng(host, f, cliques);
    std::function<void(const std::vector<int>&, long long)> on_complete =
        [&](const std::vector<int>& rgs, long long value) {
          if (better(value, rgs, result.best, result.best_rgs)) {
            result.best = value;
            result.best_rgs = rgs;
          }
        };
    DfsDriver driver{eng, &result.best, false, 0, on_complete, &opts.node_hook};
    driver.run(0);
    totals = eng.stats;
  } else {
    Engine splitter(host, f, cliques);
    Prefixes prefixes = split_prefixes(splitter, opts.jobs);
    int jobs = opts.jobs;
    struct WorkerResult {
      long long best = kNoFloor;
      std::vector<int> best_rgs;
      Stats stats;
    };
    std::vector<WorkerResult> results(jobs);
    auto work = [&](int w) {
      Engine eng(host, f, cliques);
      WorkerResult& wr = results[w];
      wr.best = seed_value;
      wr.best_rgs = seed_rgs;
      // Workers never share incumbents: each subtree's exploration depends
      // only on this worker's own prefix sequence, so node counts depend on
      // the flags, never on thread scheduling.
      for (size_t p = w; p < prefixes.assignments.size(); p += jobs) {
        const std::vector<int>& prefix = prefixes.assignments[p];
        std::vector<ClassState> saved;
        for (int e = 0; e < prefixes.depth; ++e) saved.push_back(eng.assign(e, prefix[e]));
        if (eng.total + eng.suffix[prefixes.depth] >= wr.best) {
          std::function<void(const std::vector<int>&, long long)> on_complete =
              [&](const std::vector<int>& rgs, long long value) {
                if (better(value, rgs, wr.best, wr.best_rgs)) {
                  wr.best = value;
                  wr.best_rgs = rgs;
                }
              };
          DfsDriver driver{eng, &wr.best, false, 0, on_complete, nullptr};
          driver.run(prefixes.depth);
        }
        for (int e = prefixes.depth - 1; e >= 0; --e) eng.undo(e, prefix[e], saved[e]);
      }
      wr.stats = eng.stats;
    };
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
    for (const WorkerResult& wr : results) {
      totals += wr.stats;
      if (better(wr.best, wr.best_rgs, result.best, result.best_rgs)) {
        result.best = wr.best;
        result.best_rgs = wr.best_rgs;
      }
    }
  }
  if (opts.stats) *opts.stats += totals;
  if (result.best == kNoFloor) result.best = -1;
  return result;
}

void collect(const Graph& host, int k, const std::vector<long long>& f, long long target,
             const std::function<void(const std::vector<int>&)>& emit, const Options& opts) {
  if (host.edge_count() > 62) {
    throw CapacityError("partition search limited to 62 edges, got " +
                        std::to_string(host.edge_count()));
  }
  CliquePre cliques(host, k);
  Stats totals;
  long long floor = target;

  if (opts.jobs <= 1 || host.edge_count() == 0) {
    Engine eng(host, f, cliques);
    if (host.edge_count() == 0) {
      if (target == 0) emit({});
    } else {
      std::function<void(const std::vector<int>&, long long)> on_complete =
          [&](const std::vector<int>& rgs, long long value) {
            if (value == target) emit(rgs);
          };
      DfsDriver driver{eng, &floor, true, target, on_complete, &opts.node_hook};
      driver.run(0);
    }
    totals = eng.stats;
  } else {
    Engine splitter(host, f, cliques);
    Prefixes prefixes = split_prefixes(splitter, opts.jobs);
    int jobs = opts.jobs;
    std::vector<std::vector<std::vector<int>>> per_prefix(prefixes.assignments.size());
    std::vector<Stats> per_worker(jobs);
    auto work = [&](int w) {
      Engine eng(host, f, cliques);
      for (size_t p = w; p < prefixes.assignments.size(); p += jobs) {
        const std::vector<int>& prefix = prefixes.assignments[p];
        std::vector<ClassState> saved;
        for (int e = 0; e < prefixes.depth; ++e) saved.push_back(eng.assign(e, prefix[e]));
        if (eng.total + eng.suffix[prefixes.depth] >= target) {
          auto& out = per_prefix[p];
          std::function<void(const std::vector<int>&, long long)> on_complete =
              [&](const std::vector<int>& rgs, long long value) {
                if (value == target) out.push_back(rgs);
              };
          DfsDriver driver{eng, &floor, true, target, on_complete, nullptr};
          driver.run(prefixes.depth);
        }
        for (int e = prefixes.depth - 1; e >= 0; --e) eng.undo(e, prefix[e], saved[e]);
      }
      per_worker[w] = eng.stats;
    };
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
    for (const Stats& s : per_worker) totals += s;
    // Prefixes are in lexicographic order and each subtree emits in
    // lexicographic order: the merged stream matches the sequential one.
    for (const auto& bucket : per_prefix) {
      for (const auto& rgs : bucket) emit(rgs);
    }
  }
  if (opts.stats) *opts.stats += totals;
}

}  // namespace ar::search
