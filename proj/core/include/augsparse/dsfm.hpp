#pragma once

// Approximate minimization of cardinality-based decomposable submodular
// functions through one s-t min cut on a sparse reduced network.

#include <span>
#include <vector>

#include "augsparse/reduce.hpp"

namespace augsparse {

struct DsfmComponent {
  std::vector<NodeId> support;
  GscbFunction f;
};

struct DsfmInstance {
  std::size_t n = 0;
  std::vector<DsfmComponent> components;

  // Supports distinct and in range, len(f) = |support| + 1.
  void validate() const;
  Hypergraph to_hypergraph() const;
};

// Symmetric specs are mirrored over 0..k.
DsfmInstance to_dsfm(const Hypergraph& h);

// Sum_e f_e(|S cap support_e|).
double evaluate_f(const DsfmInstance& inst, std::span<const NodeId> side);

struct Seeds {
  std::vector<NodeId> include;
  std::vector<NodeId> exclude;
};

struct Solution {
  std::vector<NodeId> set;  // ascending original ids
  double value = 0.0;       // f(set), evaluated directly
  double cut_value = 0.0;   // min cut of the reduced network
  double a_priori_bound = 0.0;
  double epsilon = 0.0;
  std::size_t nodes = 0;
  std::size_t arcs = 0;
  std::size_t pieces = 0;  // gadgets over all components
  double cover_ms = 0.0;
  double build_ms = 0.0;
  double solve_ms = 0.0;
};

// Builds the s-t network at eps, enforces seeds with terminal arcs of
// capacity infinite_capacity(Sum_e max f_e), and returns the source side
// of the minimum cut. Throws DomainError when a node is in both seed sets.
Solution sparse_card(const DsfmInstance& inst, double eps, const Seeds& seeds = {},
                     unsigned threads = 1);

struct Ratio {
  double value = 1.0;
  // Set when the optimum is zero and the solution attains it.
  bool exact = false;
};

// sol.value / opt_value; a zero optimum yields {1, exact} when attained and
// +inf otherwise.
Ratio a_posteriori_ratio(const Solution& sol, double opt_value);

}  // namespace augsparse
