#pragma once

#include "antiramsey/blowup.hpp"
#include "antiramsey/formulas.hpp"
#include "antiramsey/partition_search.hpp"

namespace ar {

// A base coloring of K_r together with its blow-up color count for a fixed
// size function.
struct BaseColoringScore {
  ColoredGraph base;
  long long weighted_count;
};

// Color count of blow_up(base, f) computed without materializing the
// blow-up: s0 + sum over S1 colors of f(saturating vertex) + sum over S2
// colors on v_i v_j of f(v_i) * f(v_j).
long long weighted_color_count(const ColoredGraph& base, const SizeFunction& f);

struct Theorem6Options {
  int base_cap = 7;      // maximum r; colorings of K_r are enumerated
  int jobs = 1;
  bool use_seed = true;  // start the incumbent from a constructive base
  search::Stats* stats = nullptr;
};

// ar(K_{n1,...,nr}, K_k) for r >= k >= 3 by exhaustive maximization of the
// blow-up color count over all rainbow-K_k-free colorings of K_r, with
// f(v_i) = n_i. Exact; the witness is the blow-up of the argmax base with
// the lexicographically smallest restricted-growth string.
ArResult ar_via_theorem6(const PartiteSpec& spec, int k, const Theorem6Options& opts = {});

}  // namespace ar
