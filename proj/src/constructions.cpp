#include "antiramsey/constructions.hpp"

#include <algorithm>
#include <set>

#include "antiramsey/isomorphism.hpp"

namespace ar {

Graph turan_graph(int n, int parts) {
  if (parts < 1 || parts > n) {
    throw ValidationError("Turan graph needs 1 <= parts <= n");
  }
  if (parts == 1) {
    return Graph::from_edges(n, {});  // edgeless
  }
  int q = n / parts, s = n % parts;
  std::vector<int> sizes;
  for (int i = 0; i < s; ++i) sizes.push_back(q + 1);
  for (int i = s; i < parts; ++i) sizes.push_back(q);
  return Graph::complete_multipartite_ordered(sizes);
}

ColoredGraph normal_base(int k) {
  if (k < 3) throw ValidationError("normal base needs k >= 3");
  Graph g = Graph::complete(k);
  std::vector<int> colors(g.edge_count());
  int shared = g.edge_index(k - 3, k - 1);
  int repeat = g.edge_index(k - 2, k - 1);
  int next = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (e == repeat) {
      colors[e] = colors[shared];
    } else {
      colors[e] = next++;
    }
  }
  return ColoredGraph(std::move(g), to_restricted_growth(colors));
}

ColoredGraph rainbow_turan_base(int r, int parts) {
  if (r < 2) throw ValidationError("base needs at least 2 vertices");
  Graph t = turan_graph(r, parts);
  Graph g = Graph::complete(r);
  std::vector<int> colors(g.edge_count());
  int next = 0;
  int common = t.edge_count();  // one id for everything outside the Turan graph
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    colors[e] = t.adjacent(ed.u, ed.v) ? next++ : common;
  }
  return ColoredGraph(std::move(g), to_restricted_growth(colors));
}

ColoredGraph matching_base(int r) {
  if (r < 3) throw ValidationError("matching base needs r >= 3");
  Graph g = Graph::complete(r);
  int pairs = r / 2;
  bool odd = (r % 2) != 0;
  auto pair_of = [](Vertex v) { return v / 2; };
  std::vector<int> colors(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (odd && ed.v == r - 1) {
      colors[e] = pairs + (pairs - 1);  // the odd vertex's star
    } else if (pair_of(ed.u) == pair_of(ed.v)) {
      colors[e] = pair_of(ed.u);  // exclusive color per matched pair
    } else {
      // Every triangle meeting two pairs sees this color twice.
      colors[e] = pairs + (std::max(pair_of(ed.u), pair_of(ed.v)) - 1);
    }
  }
  return ColoredGraph(std::move(g), to_restricted_growth(colors));
}

ColoredGraph normal_coloring(const PartiteSpec& spec) {
  int k = spec.part_count();
  if (k < 3) throw ValidationError("normal coloring needs at least 3 parts");
  return blow_up(normal_base(k), SizeFunction(spec.sizes()));
}

ColoredGraph turan_coloring(int r, int t, int k) {
  if (k < 4) throw ValidationError("Turan coloring needs k >= 4");
  if (r <= k) throw ValidationError("Turan coloring needs r > k");
  if (t < 1) throw ValidationError("Turan coloring needs t >= 1");
  return blow_up(rainbow_turan_base(r, k - 2), SizeFunction::uniform(r, t));
}

ColoredGraph matching_coloring(const PartiteSpec& spec) {
  if (spec.part_count() < 3) throw ValidationError("matching coloring needs r >= 3");
  return blow_up(matching_base(spec.part_count()), SizeFunction(spec.sizes()));
}

std::vector<ColoredGraph> book_colorings(int n, bool dedupe) {
  if (n < 1) throw ValidationError("book needs n >= 1 pages");
  std::vector<int> sizes{n, 1, 1};
  Graph host = Graph::complete_multipartite(PartiteSpec(sizes));
  Vertex x = n, y = n + 1;
  int spine = host.edge_index(x, y);

  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;

  std::vector<ColoredGraph> out;
  std::set<std::string> seen;
  for (long long code = 0; code < total; ++code) {
    std::vector<int> colors(host.edge_count());
    colors[spine] = 0;
    long long rest = code;
    for (int i = n - 1; i >= 0; --i) {
      int pattern = static_cast<int>(rest % 3);
      rest /= 3;
      int page_color = i + 1;
      int cx = pattern == 2 ? 0 : page_color;
      int cy = pattern == 1 ? 0 : page_color;
      colors[host.edge_index(x, i)] = cx;
      colors[host.edge_index(y, i)] = cy;
    }
    ColoredGraph cg(host, std::move(colors));
    if (dedupe) {
      std::string key = canonical_form(cg);
      if (!seen.insert(key).second) continue;
    }
    out.push_back(std::move(cg));
  }
  return out;
}

ColoredGraph example1_coloring(int r, int k, int t1, int t2) {
  if (k < 4) throw ValidationError("construction needs k >= 4");
  if (r <= k) throw ValidationError("construction needs r > k");
  if (t1 < 1 || t2 < 1) throw ValidationError("block sizes must be positive");
  if (r % (k - 2) == 0) {
    throw ValidationError("construction needs (k-2) not dividing r: the two Turan "
                          "extensions would coincide");
  }

  // T_{r-1,k-2} has at least two smallest parts; the extra vertex joins the
  // last (extension 1) or second-to-last (extension 2).
  Graph t = turan_graph(r - 1, k - 2);
  int pc = t.part_count();
  int part_last = pc - 1, part_second = pc - 2;
  std::vector<int> psizes = t.part_sizes();
  if (psizes[part_last] != psizes[part_second]) {
    throw ValidationError("internal: expected two smallest parts of equal size");
  }

  int tt = t1 + t2;
  Graph host = Graph::complete_multipartite_ordered(std::vector<int>(r, tt));
  auto copy_index = [&](Vertex v) { return v % tt; };
  auto base_of = [&](Vertex v) { return v / tt; };

  std::vector<int> colors(host.edge_count());
  std::vector<int> exclusive(host.edge_count(), 0);
  for (int e = 0; e < host.edge_count(); ++e) {
    const Edge& ed = host.edge(e);
    int bu = base_of(ed.u), bv = base_of(ed.v);
    bool excl;
    if (bu < r - 1 && bv < r - 1) {
      excl = t.adjacent(bu, bv);
    } else {
      // bv is the split part (host parts are consecutive, so bv == r-1).
      int avoided = copy_index(ed.v) < t1 ? part_last : part_second;
      excl = t.part_of(bu) != avoided;
    }
    exclusive[e] = excl ? 1 : 0;
  }
  int next = 0;
  int common = static_cast<int>(std::count(exclusive.begin(), exclusive.end(), 1));
  for (int e = 0; e < host.edge_count(); ++e) {
    colors[e] = exclusive[e] ? next++ : common;
  }
  return ColoredGraph(std::move(host), to_restricted_growth(colors));
}

}  // namespace ar
