#pragma once

// Co-occurrence (weighted clique-expansion) cut functions, their implicit
// sparsification, and a power-law instance generator.

#include <cstdint>
#include <span>
#include <vector>

#include "augsparse/reduce.hpp"

namespace augsparse {

struct CoocSet {
  std::vector<NodeId> members;
  double weight = 1.0;
};

struct CoocInstance {
  std::size_t n = 0;
  std::vector<CoocSet> sets;

  // Members distinct and in range, weights finite and positive.
  void validate() const;
  // Sum over sets of |c|^2, the cost of an explicit clique expansion.
  double clique_expansion_size() const;
};

// Sum_c w_c |S cap c| |c \ S|.
double cooc_cut_value(const CoocInstance& inst, std::span<const NodeId> side);

// One CB-gadget combination per set of size >= 2, from clique_cover(|c|, eps)
// scaled by w_c. Covers are cached per set size.
AugmentedGraph sparsify_cooc(const CoocInstance& inst, double eps, unsigned threads = 1);

// m sets with sizes drawn i.i.d. from P[K = k] ~ k^-gamma on [1, n] and
// members uniform without replacement. Deterministic for a fixed seed.
CoocInstance gen_powerlaw(std::size_t n, std::size_t m, double gamma, std::uint64_t seed);

// Probabilities P[K = k] for k = 1..n (index 0 unused, zero).
std::vector<double> powerlaw_pmf(std::size_t n, double gamma);

}  // namespace augsparse
