#include "antiramsey/theorem6.hpp"

#include "antiramsey/classify.hpp"
#include "antiramsey/constructions.hpp"

namespace ar {

long long weighted_color_count(const ColoredGraph& base, const SizeFunction& f) {
  if (f.vertex_count() != base.graph().vertex_count()) {
    throw ValidationError("size function domain must match the base vertex set");
  }
  ColorClassification cls = classify_colors(base);
  long long total = static_cast<long long>(cls.s0.size());
  for (const auto& [color, vert] : cls.s1) total += f(vert);
  for (const auto& [color, edge] : cls.s2) {
    total += static_cast<long long>(f(edge.u)) * f(edge.v);
  }
  return total;
}

ArResult ar_via_theorem6(const PartiteSpec& spec, int k, const Theorem6Options& opts) {
  int r = spec.part_count();
  if (k < 3) throw ValidationError("target clique size must be at least 3");
  if (r < k) {
    throw ValidationError("host with fewer parts than k contains no K_k; every coloring "
                          "qualifies and the value degenerates to e(G)");
  }
  if (r > opts.base_cap) {
    throw CapacityError("base graph K_" + std::to_string(r) + " exceeds the cap of " +
                        std::to_string(opts.base_cap) + " (colorings of K_r are enumerated)");
  }

  Graph base_host = Graph::complete(r);
  std::vector<long long> f(spec.sizes().begin(), spec.sizes().end());

  search::Options sopts;
  sopts.jobs = opts.jobs;
  sopts.stats = opts.stats;
  if (opts.use_seed) {
    // A constructive rainbow-K_k-free base starts the incumbent; ties are
    // kept alive, so seeding never changes the value or the witness.
    ColoredGraph seed = k == 3            ? matching_base(r)
                        : r == k          ? normal_base(k)
                                          : rainbow_turan_base(r, k - 2);
    sopts.seed_rgs = to_restricted_growth(seed.edge_colors());
  }

  search::MaxResult best = search::maximize(base_host, k, f, sopts);
  ColoredGraph argmax_base(base_host, best.best_rgs);

  ArResult res;
  res.value = best.best;
  res.method = "theorem6";
  res.witness = blow_up(argmax_base, SizeFunction(spec.sizes()));
  return res;
}

}  // namespace ar
