#include "antiramsey/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "antiramsey/classify.hpp"

namespace ar {

namespace {

std::vector<int> sorted_class_sizes(const ColoredGraph& cg) {
  std::vector<int> sizes = cg.class_sizes();
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<int> vertex_saturation_degrees(const ColoredGraph& cg) {
  const Graph& g = cg.graph();
  std::vector<int> out(g.vertex_count(), 0);
  ColorClassification cls = classify_colors(cg);
  for (const auto& [color, vert] : cls.s1) out[vert] += 1;
  for (const auto& [color, edge] : cls.s2) {
    out[edge.u] += 1;
    out[edge.v] += 1;
  }
  return out;
}

struct IsoSearch {
  const ColoredGraph& a;
  const ColoredGraph& b;
  bool use_parts;
  std::vector<int> rho;        // a-vertex -> b-vertex, -1 unset
  std::vector<char> used;      // b-vertex taken
  std::vector<int> sigma;      // a-color -> b-color, -1 unset
  std::vector<int> sigma_inv;  // b-color -> a-color
  std::vector<int> part_map;   // a-part -> b-part, -1 unset
  std::vector<int> part_map_inv;
  std::vector<int> sig_a, sig_b;  // per-vertex fingerprints

  bool assign(int i) {
    const Graph& ga = a.graph();
    const Graph& gb = b.graph();
    if (i == ga.vertex_count()) return true;
    for (int w = 0; w < gb.vertex_count(); ++w) {
      if (used[w] || sig_a[i] != sig_b[w]) continue;
      if (use_parts) {
        int pa = ga.part_of(i), pb = gb.part_of(w);
        if (part_map[pa] >= 0 && part_map[pa] != pb) continue;
        if (part_map[pa] < 0 && part_map_inv[pb] >= 0) continue;
      }
      bool ok = true;
      std::vector<std::pair<int, int>> sigma_added;
      for (int j = 0; j < i && ok; ++j) {
        bool adj_a = ga.adjacent(i, j);
        if (adj_a != gb.adjacent(w, rho[j])) {
          ok = false;
          break;
        }
        if (!adj_a) continue;
        int ca = a.color(i, j);
        int cb = b.color(w, rho[j]);
        if (sigma[ca] >= 0) {
          if (sigma[ca] != cb) ok = false;
        } else if (sigma_inv[cb] >= 0) {
          ok = false;
        } else {
          sigma[ca] = cb;
          sigma_inv[cb] = ca;
          sigma_added.push_back({ca, cb});
        }
      }
      if (ok) {
        rho[i] = w;
        used[w] = 1;
        bool part_added = false;
        if (use_parts) {
          int pa = ga.part_of(i), pb = gb.part_of(w);
          if (part_map[pa] < 0) {
            part_map[pa] = pb;
            part_map_inv[pb] = pa;
            part_added = true;
          }
        }
        if (assign(i + 1)) return true;
        if (part_added) {
          int pa = ga.part_of(i);
          part_map_inv[part_map[pa]] = -1;
          part_map[pa] = -1;
        }
        used[w] = 0;
        rho[i] = -1;
      }
      for (auto [ca, cb] : sigma_added) {
        sigma[ca] = -1;
        sigma_inv[cb] = -1;
      }
    }
    return false;
  }
};

}  // namespace

bool colored_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  const Graph& ga = a.graph();
  const Graph& gb = b.graph();
  if (ga.vertex_count() != gb.vertex_count()) return false;
  if (ga.edge_count() != gb.edge_count()) return false;
  if (a.color_count() != b.color_count()) return false;
  if (sorted_class_sizes(a) != sorted_class_sizes(b)) return false;

  bool use_parts = ga.has_parts() && gb.has_parts();
  if (use_parts) {
    std::vector<int> pa = ga.part_sizes(), pb = gb.part_sizes();
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return false;
  }

  IsoSearch search{a, b, use_parts, {}, {}, {}, {}, {}, {}, {}, {}};
  int n = ga.vertex_count();
  search.rho.assign(n, -1);
  search.used.assign(n, 0);
  search.sigma.assign(a.color_count(), -1);
  search.sigma_inv.assign(b.color_count(), -1);
  int parts = use_parts ? std::max(ga.part_count(), gb.part_count()) : 0;
  search.part_map.assign(parts, -1);
  search.part_map_inv.assign(parts, -1);

  // Fingerprints invariant under isomorphism: degree and saturated degree.
  std::vector<int> sat_a = vertex_saturation_degrees(a);
  std::vector<int> sat_b = vertex_saturation_degrees(b);
  search.sig_a.resize(n);
  search.sig_b.resize(n);
  for (int v = 0; v < n; ++v) {
    int size_a = use_parts ? ga.part_sizes()[ga.part_of(v)] : 0;
    int size_b = use_parts ? gb.part_sizes()[gb.part_of(v)] : 0;
    search.sig_a[v] = (ga.degree(v) << 16) | (sat_a[v] << 8) | size_a;
    search.sig_b[v] = (gb.degree(v) << 16) | (sat_b[v] << 8) | size_b;
  }
  {
    std::vector<int> sa = search.sig_a, sb = search.sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  return search.assign(0);
}

namespace {

void append_byte(std::string& s, int value) {
  s.push_back(static_cast<char>(value & 0xff));
  s.push_back(static_cast<char>((value >> 8) & 0xff));
}

// Enumerates all part-respecting vertex orders: original parts are assigned
// to canonical slots (sorted by size descending, permuted within equal-size
// groups) and vertices are permuted within each part.
template <typename Fn>
void for_each_part_order(const Graph& g, Fn&& fn) {
  int r = g.part_count();
  std::vector<std::vector<Vertex>> part_verts(r);
  for (int v = 0; v < g.vertex_count(); ++v) part_verts[g.part_of(v)].push_back(v);

  std::vector<int> slot_parts(r);
  std::iota(slot_parts.begin(), slot_parts.end(), 0);
  std::stable_sort(slot_parts.begin(), slot_parts.end(), [&](int x, int y) {
    return part_verts[x].size() > part_verts[y].size();
  });

  // Group boundaries of equal-size runs in slot order.
  std::vector<std::pair<int, int>> groups;
  for (int i = 0; i < r;) {
    int j = i;
    while (j < r && part_verts[slot_parts[j]].size() == part_verts[slot_parts[i]].size()) ++j;
    groups.push_back({i, j});
    i = j;
  }

  std::vector<Vertex> order;
  order.reserve(g.vertex_count());
  std::vector<std::vector<Vertex>> perms(r);

  std::function<void(int)> vertex_orders = [&](int slot) {
    if (slot == r) {
      order.clear();
      for (int s = 0; s < r; ++s) {
        order.insert(order.end(), perms[s].begin(), perms[s].end());
      }
      fn(order);
      return;
    }
    std::vector<Vertex> vs = part_verts[slot_parts[slot]];
    std::sort(vs.begin(), vs.end());
    do {
      perms[slot] = vs;
      vertex_orders(slot + 1);
    } while (std::next_permutation(vs.begin(), vs.end()));
  };

  std::function<void(size_t)> part_assignments = [&](size_t gi) {
    if (gi == groups.size()) {
      vertex_orders(0);
      return;
    }
    auto [lo, hi] = groups[gi];
    std::vector<int> ids(slot_parts.begin() + lo, slot_parts.begin() + hi);
    std::sort(ids.begin(), ids.end());
    do {
      std::copy(ids.begin(), ids.end(), slot_parts.begin() + lo);
      part_assignments(gi + 1);
    } while (std::next_permutation(ids.begin(), ids.end()));
  };

  part_assignments(0);
}

std::string color_string_for_order(const ColoredGraph& cg, const std::vector<Vertex>& order,
                                   bool include_adjacency) {
  const Graph& g = cg.graph();
  int n = g.vertex_count();
  std::string s;
  std::vector<int> relabel(cg.color_count(), -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int e = g.edge_index(order[i], order[j]);
      if (include_adjacency) s.push_back(e >= 0 ? 1 : 0);
      if (e < 0) continue;
      int c = cg.edge_color(e);
      if (relabel[c] < 0) relabel[c] = next++;
      append_byte(s, relabel[c]);
    }
  }
  return s;
}

}  // namespace

std::string canonical_form(const ColoredGraph& cg) {
  const Graph& g = cg.graph();
  std::string best;
  bool first = true;
  auto consider = [&](const std::vector<Vertex>& order, bool include_adjacency) {
    std::string cand = color_string_for_order(cg, order, include_adjacency);
    if (first || cand < best) {
      best = std::move(cand);
      first = false;
    }
  };

  std::string header;
  if (g.has_parts()) {
    std::vector<int> sizes = g.part_sizes();
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    header.push_back(1);
    append_byte(header, g.vertex_count());
    append_byte(header, static_cast<int>(sizes.size()));
    for (int s : sizes) append_byte(header, s);
    for_each_part_order(g, [&](const std::vector<Vertex>& order) { consider(order, false); });
  } else {
    header.push_back(0);
    append_byte(header, g.vertex_count());
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      consider(perm, true);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return header + best;
}

std::string graph_canonical_key(const Graph& g) {
  int n = g.vertex_count();
  if (n > 12) throw CapacityError("graph canonical key limited to 12 vertices");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool first = true;
  do {
    std::string cand;
    cand.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        cand.push_back(g.adjacent(perm[i], perm[j]) ? 1 : 0);
      }
    }
    if (first || cand < best) {
      best = std::move(cand);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::string header;
  append_byte(header, n);
  return header + best;
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return graph_canonical_key(a) == graph_canonical_key(b);
}

}  // namespace ar
