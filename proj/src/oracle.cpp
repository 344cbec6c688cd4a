#include "antiramsey/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "antiramsey/classify.hpp"
#include "antiramsey/constructions.hpp"
#include "antiramsey/isomorphism.hpp"

namespace ar {

ArResult brute_force_ar(const Graph& host, int k, const OracleOptions& opts) {
  if (k < 3) throw ValidationError("target clique size must be at least 3");
  if (host.edge_count() > opts.edge_cap) {
    throw CapacityError("host has " + std::to_string(host.edge_count()) +
                        " edges, above the edge cap of " + std::to_string(opts.edge_cap));
  }
  std::vector<long long> unit(host.vertex_count(), 1);
  search::Options sopts;
  sopts.jobs = opts.jobs;
  sopts.stats = opts.stats;
  search::MaxResult best = search::maximize(host, k, unit, sopts);

  ArResult res;
  res.value = best.best;
  res.method = "oracle";
  res.witness = ColoredGraph(host, best.best_rgs);
  return res;
}

ExtremalFamily enumerate_extremal(const Graph& host, int k, const OracleOptions& opts) {
  ArResult max = brute_force_ar(host, k, opts);

  ExtremalFamily family;
  family.host = host;
  family.k = k;
  family.ar_value = max.value;

  std::vector<long long> unit(host.vertex_count(), 1);
  search::Options sopts;
  sopts.jobs = opts.jobs;
  sopts.stats = opts.stats;

  // Emission order is deterministic, so the first partition hitting a key
  // is a stable class representative.
  std::map<std::string, ColoredGraph> reps;
  search::collect(host, k, unit, max.value,
                  [&](const std::vector<int>& rgs) {
                    ColoredGraph cg(host, rgs);
                    std::string key = canonical_form(cg);
                    reps.try_emplace(std::move(key), std::move(cg));
                  },
                  sopts);

  for (auto& [key, cg] : reps) {
    family.canonical_keys.push_back(key);
    family.representatives.push_back(std::move(cg));
  }
  family.complete = true;
  return family;
}

const char* to_string(Theorem8Tag tag) {
  switch (tag) {
    case Theorem8Tag::construction1: return "construction1";
    case Theorem8Tag::construction2: return "construction2";
    case Theorem8Tag::construction3: return "construction3";
    default: return "none";
  }
}

namespace {

// Sorted part sizes (descending) with original part ids.
struct PartView {
  std::vector<int> sizes_sorted;          // n_1 >= ... >= n_k
  std::vector<std::vector<Vertex>> members;  // by original part id
  std::vector<int> size_of;               // by original part id
};

PartView part_view(const Graph& g) {
  PartView pv;
  int pc = g.part_count();
  pv.members.resize(pc);
  for (int v = 0; v < g.vertex_count(); ++v) pv.members[g.part_of(v)].push_back(v);
  for (const auto& m : pv.members) pv.size_of.push_back(static_cast<int>(m.size()));
  pv.sizes_sorted = pv.size_of;
  std::sort(pv.sizes_sorted.begin(), pv.sizes_sorted.end(), std::greater<int>());
  return pv;
}

bool matches_construction1(const ColoredGraph& cg, int k, const PartView& pv) {
  if (k < 4) return false;
  const Graph& g = cg.graph();
  auto classes = cg.classes();
  std::vector<int> big;
  for (int c = 0; c < cg.color_count(); ++c) {
    if (classes[c].size() >= 2) big.push_back(c);
  }
  if (big.size() != 1 || classes[big[0]].size() != 2) return false;
  Edge e1 = g.edge(classes[big[0]][0]);
  Edge e2 = g.edge(classes[big[0]][1]);
  std::set<Vertex> ends{e1.u, e1.v, e2.u, e2.v};
  if (ends.size() != 4) return false;  // the two edges must be disjoint
  std::set<int> parts;
  for (Vertex v : ends) {
    if (pv.size_of[g.part_of(v)] != 1) return false;
    parts.insert(g.part_of(v));
  }
  return parts.size() == 4;
}

// Construction-1 pattern on the book induced by (Z-part, {x}, {y}): spine
// color a_0 on xy, each page either (a_i,a_i), (a_i,a_0) or (a_0,a_i) with
// pairwise distinct page colors.
bool book_pattern_ok(const ColoredGraph& cg, const std::vector<Vertex>& zs, Vertex x, Vertex y) {
  int a0 = cg.color(x, y);
  std::set<int> pages;
  for (Vertex z : zs) {
    int cx = cg.color(x, z);
    int cy = cg.color(y, z);
    int page;
    if (cx == cy) {
      if (cx == a0) return false;
      page = cx;
    } else if (cy == a0) {
      page = cx;
    } else if (cx == a0) {
      page = cy;
    } else {
      return false;
    }
    if (page == a0) return false;
    if (!pages.insert(page).second) return false;
  }
  return true;
}

bool matches_construction2(const ColoredGraph& cg, int k, const PartView& pv) {
  int n_km1 = pv.sizes_sorted[k - 2];  // n_{k-1}
  if (n_km1 != 1) return false;
  int n_km2 = pv.sizes_sorted[k - 3];  // n_{k-2}, the page count
  const Graph& g = cg.graph();
  auto classes = cg.classes();
  int pc = g.part_count();

  for (int pz = 0; pz < pc; ++pz) {
    if (pv.size_of[pz] != n_km2) continue;
    for (int px = 0; px < pc; ++px) {
      if (px == pz || pv.size_of[px] != 1) continue;
      for (int py = px + 1; py < pc; ++py) {
        if (py == pz || pv.size_of[py] != 1) continue;
        std::vector<char> in_book_part(pc, 0);
        in_book_part[pz] = in_book_part[px] = in_book_part[py] = 1;
        auto in_book = [&](const Edge& e) {
          return in_book_part[g.part_of(e.u)] && in_book_part[g.part_of(e.v)];
        };
        bool ok = true;
        for (int c = 0; c < cg.color_count() && ok; ++c) {
          bool all_in = true, any_in = false;
          for (int eid : classes[c]) {
            bool b = in_book(g.edge(eid));
            all_in = all_in && b;
            any_in = any_in || b;
          }
          // Every class lives inside the book or is a single outside edge.
          if (!all_in && (any_in || classes[c].size() != 1)) ok = false;
        }
        if (!ok) continue;
        if (book_pattern_ok(cg, pv.members[pz], pv.members[px][0], pv.members[py][0])) {
          return true;
        }
      }
    }
  }
  return false;
}

bool matches_construction3(const ColoredGraph& cg, int k, const PartView& pv) {
  const Graph& g = cg.graph();
  auto classes = cg.classes();
  int pc = g.part_count();
  int nk = pv.sizes_sorted[k - 1];
  long long pair_sum = pv.sizes_sorted[k - 3] + pv.sizes_sorted[k - 2];

  std::vector<int> big;
  for (int c = 0; c < cg.color_count(); ++c) {
    if (classes[c].size() >= 2) big.push_back(c);
  }

  for (int p = 0; p < pc; ++p) {
    if (pv.size_of[p] != nk) continue;
    if (big.size() != pv.members[p].size()) continue;
    bool ok = true;
    std::set<int> used_classes;
    for (Vertex u : pv.members[p]) {
      // Exactly one repeated class at u, a star covering two full parts
      // whose sizes add to n_{k-2} + n_{k-1}.
      int star = -1;
      for (int c : big) {
        bool at_u = false;
        for (int eid : classes[c]) {
          const Edge& e = g.edge(eid);
          if (e.u == u || e.v == u) at_u = true;
        }
        if (at_u) {
          if (star >= 0) {
            ok = false;
            break;
          }
          star = c;
        }
      }
      if (!ok || star < 0 || used_classes.count(star)) {
        ok = false;
        break;
      }
      used_classes.insert(star);
      std::set<Vertex> others;
      for (int eid : classes[star]) {
        const Edge& e = g.edge(eid);
        if (e.u != u && e.v != u) {
          ok = false;  // not a star at u
          break;
        }
        others.insert(e.u == u ? e.v : e.u);
      }
      if (!ok) break;
      std::set<int> other_parts;
      for (Vertex w : others) other_parts.insert(g.part_of(w));
      if (other_parts.size() != 2) {
        ok = false;
        break;
      }
      long long covered = 0, expected = 0;
      for (int q : other_parts) {
        expected += pv.size_of[q];
        for (Vertex w : pv.members[q]) covered += others.count(w);
      }
      if (covered != expected || expected != pair_sum) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

Theorem8Tag classify_theorem8(const ColoredGraph& cg, int k) {
  const Graph& g = cg.graph();
  if (!g.has_parts()) {
    throw ValidationError("classification needs a complete multipartite host");
  }
  if (g.part_count() != k) {
    throw ValidationError("host must be complete k-partite with k = " + std::to_string(k) +
                          ", got " + std::to_string(g.part_count()) + " parts");
  }
  if (k < 3) throw ValidationError("target clique size must be at least 3");

  PartView pv = part_view(g);
  if (matches_construction1(cg, k, pv)) return Theorem8Tag::construction1;
  if (matches_construction2(cg, k, pv)) return Theorem8Tag::construction2;
  if (matches_construction3(cg, k, pv)) return Theorem8Tag::construction3;
  return Theorem8Tag::none;
}

Graph hourglass_graph() {
  return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

Graph house_graph() {
  // 4-cycle 0-1-3-2 with roof vertex 4 on the edge {2,3}.
  return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
}

Graph prism_graph() {
  return Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
                               {0, 3}, {1, 4}, {2, 5}});
}

namespace {

// True when the graph would contain K_k - e after adding edge (u,v): some
// k-subset through u, v spanning at least C(k,2) - 1 edges.
bool creates_near_clique(const std::vector<std::vector<char>>& adj, int n, int k, Vertex u,
                         Vertex v) {
  std::vector<Vertex> pool;
  for (Vertex w = 0; w < n; ++w) {
    if (w != u && w != v) pool.push_back(w);
  }
  std::vector<Vertex> chosen;
  int need = k * (k - 1) / 2 - 1;
  std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
    if (static_cast<int>(chosen.size()) == k - 2) {
      int edges = 1;  // the new edge uv
      std::vector<Vertex> all{u, v};
      all.insert(all.end(), chosen.begin(), chosen.end());
      for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = i + 1; j < all.size(); ++j) {
          if (i == 0 && j == 1) continue;
          if (adj[all[i]][all[j]]) ++edges;
        }
      }
      return edges >= need;
    }
    for (size_t i = idx; i + (k - 2 - chosen.size()) <= pool.size(); ++i) {
      chosen.push_back(pool[i]);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace

std::vector<Graph> dirac_extremal_graphs(int n, int k) {
  long long target = dirac_extremal_bound(n, k);
  if (n > 8) throw CapacityError("extremal-graph enumeration limited to 8 vertices");

  Graph kn = Graph::complete(n);
  int m = kn.edge_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<Edge> chosen;
  std::map<std::string, Graph> found;

  std::function<void(int)> rec = [&](int idx) {
    if (static_cast<long long>(chosen.size()) == target) {
      Graph g = Graph::from_edges(n, chosen);
      std::string key = graph_canonical_key(g);
      found.try_emplace(std::move(key), std::move(g));
      return;
    }
    if (idx == m) return;
    if (static_cast<long long>(chosen.size()) + (m - idx) < target) return;
    const Edge& e = kn.edge(idx);
    if (!creates_near_clique(adj, n, k, e.u, e.v)) {
      adj[e.u][e.v] = adj[e.v][e.u] = 1;
      chosen.push_back(e);
      rec(idx + 1);
      chosen.pop_back();
      adj[e.u][e.v] = adj[e.v][e.u] = 0;
    }
    rec(idx + 1);
  };
  rec(0);

  std::vector<Graph> out;
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

std::string dirac_graph_name(const Graph& g, int n, int k) {
  std::string key = graph_canonical_key(g);
  if (key == graph_canonical_key(turan_graph(n, k - 2))) return "turan";
  if (k == 4 && n == 5) {
    if (key == graph_canonical_key(hourglass_graph())) return "hourglass";
    if (key == graph_canonical_key(house_graph())) return "house";
  }
  if (k == 4 && n == 6) {
    if (key == graph_canonical_key(prism_graph())) return "prism";
  }
  return "other";
}

Theorem10Report verify_theorem10(int r, int t, int k, const OracleOptions& opts) {
  if (k < 4) throw ValidationError("verification needs k >= 4");
  if (r <= k) throw ValidationError("verification needs r > k");
  if (t < 2) throw ValidationError("verification needs t >= 2 (t = 1 is the complete-graph case)");
  if (r > 5) throw CapacityError("verification enumerates base colorings of K_r; r <= 5 only");

  Theorem10Report report;
  report.r = r;
  report.t = t;
  report.k = k;

  Graph base_host = Graph::complete(r);
  std::vector<long long> f(r, t);

  search::Options sopts;
  sopts.jobs = opts.jobs;
  sopts.stats = opts.stats;
  sopts.seed_rgs = to_restricted_growth(rainbow_turan_base(r, k - 2).edge_colors());
  search::MaxResult best = search::maximize(base_host, k, f, sopts);
  report.max_weighted = best.best;

  std::map<std::string, ColoredGraph> bases;
  search::Options copts;
  copts.jobs = opts.jobs;
  copts.stats = opts.stats;
  search::collect(base_host, k, f, best.best,
                  [&](const std::vector<int>& rgs) {
                    ColoredGraph cg(base_host, rgs);
                    std::string key = canonical_form(cg);
                    bases.try_emplace(std::move(key), std::move(cg));
                  },
                  copts);
  report.base_count = static_cast<int>(bases.size());

  for (const Graph& g : dirac_extremal_graphs(r, k)) {
    report.expected.push_back(dirac_graph_name(g, r, k));
  }
  std::sort(report.expected.begin(), report.expected.end());

  bool all_ok = true;
  std::vector<std::string> names;
  for (const auto& [key, base] : bases) {
    report.bases.push_back({base, weighted_color_count(base, SizeFunction(std::vector<int>(r, t)))});
    auto classes = base.classes();
    std::vector<Edge> exclusive;
    int repeated = 0;
    for (int c = 0; c < base.color_count(); ++c) {
      if (classes[c].size() == 1) {
        exclusive.push_back(base.graph().edge(classes[c][0]));
      } else {
        ++repeated;
      }
    }
    if (repeated != 1) {
      all_ok = false;
      report.detail += "a maximum base has " + std::to_string(repeated) +
                       " repeated classes instead of one common color; ";
      continue;
    }
    Graph l = Graph::from_edges(r, exclusive);
    std::string name = dirac_graph_name(l, r, k);
    if (name == "other") {
      all_ok = false;
      report.detail += "a maximum base's rainbow part is not an expected extremal graph; ";
    }
    names.push_back(name);
  }
  std::sort(names.begin(), names.end());
  report.family_found = names;
  report.pass = all_ok && names == report.expected;
  if (report.pass) report.detail = "all maximum bases are a rainbow extremal graph plus one common color";
  return report;
}

}  // namespace ar
