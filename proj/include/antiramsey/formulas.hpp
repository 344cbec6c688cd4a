#pragma once

#include <optional>
#include <string>

#include "antiramsey/colored_graph.hpp"
#include "antiramsey/partite.hpp"

namespace ar {

// An anti-Ramsey value with the method that produced it and, when
// available, a witness coloring achieving the value with no rainbow K_k.
struct ArResult {
  long long value = 0;
  std::string method;
  std::optional<ColoredGraph> witness;
};

long long turan_graph_edges(int n, int parts);  // e(T_{n,parts})

// ex(K_n, K_k): maximum edges of a K_k-free subgraph of K_n. Argument is
// the forbidden clique size itself; equals e(T_{n,k-1}), and C(n,2) when
// n < k. Requires k >= 2.
long long turan_number(int n, int k);

// ar(K_n, K_k): n-1 for k = 3, ex(K_n, K_{k-1}) + 1 for k >= 4.
// Requires n >= k >= 3.
ArResult ar_complete(int n, int k);

// ar(K_{n1,...,nr}, K_3) for r >= 3 parts.
ArResult ar_multipartite_k3(const PartiteSpec& spec);

// ar(K_{n1,...,nk}, K_k): sum n_i n_j - n_k (n_{k-1} + n_{k-2} - 1).
// Requires r = k >= 3.
ArResult ar_kpartite(const PartiteSpec& spec, int k);

// ar(K_r^t, K_k) for r >= k >= 4: t^2 (C(k,2) - 2) + t when r = k,
// t^2 ex(K_r, K_{k-1}) + 1 when r > k. k = 3 is rejected with a redirect
// to ar_multipartite_k3.
ArResult ar_balanced(int r, int t, int k);

// ex(K_n, K_k - e) = e(T_{n,k-2}). Requires k >= 4, n >= k + 1.
long long dirac_extremal_bound(int n, int k);

}  // namespace ar
