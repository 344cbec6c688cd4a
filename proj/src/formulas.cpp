#include "antiramsey/formulas.hpp"

#include <algorithm>

#include "antiramsey/constructions.hpp"

namespace ar {

long long turan_graph_edges(int n, int parts) {
  if (parts < 1 || parts > n) throw ValidationError("need 1 <= parts <= n");
  long long q = n / parts, s = n % parts;
  long long squares = s * (q + 1) * (q + 1) + (parts - s) * q * q;
  return (static_cast<long long>(n) * n - squares) / 2;
}

long long turan_number(int n, int k) {
  if (k < 2) throw ValidationError("forbidden clique size must be at least 2");
  if (n < 1) throw ValidationError("need n >= 1");
  return turan_graph_edges(n, std::min(k - 1, n));
}

ArResult ar_complete(int n, int k) {
  if (k < 3) throw ValidationError("target clique size must be at least 3");
  if (n < k) throw ValidationError("need n >= k");
  if (k == 3) {
    ArResult res;
    res.value = n - 1;
    res.method = "theorem1";
    res.witness = matching_coloring(PartiteSpec(std::vector<int>(n, 1)));
    return res;
  }
  ArResult res;
  res.value = turan_number(n, k - 1) + 1;
  res.method = "theorem2";
  res.witness = blow_up(rainbow_turan_base(n, k - 2), SizeFunction::uniform(n, 1));
  return res;
}

ArResult ar_multipartite_k3(const PartiteSpec& spec) {
  int r = spec.part_count();
  if (r < 3) throw ValidationError("need at least 3 parts");
  const std::vector<int>& n = spec.sizes();
  long long value = 0;
  if (r % 2 == 1) {
    for (int i = 0; i + 1 < r - 1; i += 2) value += static_cast<long long>(n[i]) * n[i + 1];
    value += n[r - 1];
    value += (r - 1) / 2 - 1;
  } else {
    for (int i = 0; i + 1 < r; i += 2) value += static_cast<long long>(n[i]) * n[i + 1];
    value += r / 2 - 1;
  }
  ArResult res;
  res.value = value;
  res.method = "theorem3";
  res.witness = matching_coloring(spec);
  return res;
}

ArResult ar_kpartite(const PartiteSpec& spec, int k) {
  if (spec.part_count() != k) {
    throw ValidationError("formula applies to complete k-partite hosts only (r = k)");
  }
  if (k < 3) throw ValidationError("target clique size must be at least 3");
  const std::vector<int>& n = spec.sizes();
  long long value = spec.edge_count() -
                    static_cast<long long>(n[k - 1]) * (n[k - 2] + n[k - 3] - 1);
  ArResult res;
  res.value = value;
  res.method = "theorem4";
  res.witness = normal_coloring(spec);
  return res;
}

ArResult ar_balanced(int r, int t, int k) {
  if (k < 4) {
    throw ValidationError("k = 3 is served by ar_multipartite_k3; this formula needs k >= 4");
  }
  if (r < k) throw ValidationError("need r >= k");
  if (t < 1) throw ValidationError("need t >= 1");
  ArResult res;
  res.method = "theorem5";
  if (r == k) {
    long long kk = static_cast<long long>(k) * (k - 1) / 2;
    res.value = static_cast<long long>(t) * t * (kk - 2) + t;
    res.witness = normal_coloring(PartiteSpec(std::vector<int>(k, t)));
  } else {
    res.value = static_cast<long long>(t) * t * turan_number(r, k - 1) + 1;
    res.witness = turan_coloring(r, t, k);
  }
  return res;
}

long long dirac_extremal_bound(int n, int k) {
  if (k < 4) throw ValidationError("need k >= 4");
  if (n < k + 1) throw ValidationError("need n >= k + 1");
  return turan_graph_edges(n, k - 2);
}

}  // namespace ar
