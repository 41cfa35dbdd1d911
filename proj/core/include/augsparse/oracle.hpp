#pragma once

// Exhaustive reference implementations and random instance generators used by
// tests, the acceptance runner and the `verify` command. Each oracle computes
// its quantity along its own arithmetic path and refuses large inputs.

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "augsparse/dsfm.hpp"
#include "augsparse/reduce.hpp"

namespace augsparse::oracle {

struct MinResult {
  std::vector<NodeId> set;
  double value = 0.0;
};

// Minimum of f over all 2^n subsets, n <= 22. Ties go to the
// lexicographically smallest sorted id list.
MinResult brute_min_f(const DsfmInstance& inst);

struct SandwichReport {
  bool ok = true;
  double max_ratio = 1.0;
  // First violating set, with the two sides of the failed inequality.
  std::vector<NodeId> violation;
  double cut = 0.0;
  double augmented = 0.0;
};

// Checks cut_H(S) <= augmented_cut(S) <= (1 + eps) cut_H(S) for every S,
// n <= 16, relative tolerance `rel_tol`.
SandwichReport brute_cut_sandwich(const Hypergraph& h, const AugmentedGraph& g, double eps,
                                  double rel_tol = 1e-9);

// Minimum number of positive-slope lines in a (1+eps) cover of w, r <= 20.
int min_cover_size_dp(const ScbFunction& w, double eps);
// Minimum total number of lines in a (1+eps) cover of w over 0..k, k <= 20.
int min_cover_size_dp(const GscbFunction& w, double eps);

// Minimum over auxiliary placements of the directed cut leaving
// {source} + {members with member_in} + T. At most 20 auxiliaries.
double brute_aux_mincut(const GraphFragment& fragment, const std::vector<bool>& member_in);

// Minimum s-t cut by enumeration, at most 20 non-terminal nodes.
double brute_min_st_cut(const FlowNetwork& net);

// Directed min cut of g's network with every original node pinned: S to the
// source side, the rest to the sink side. Solved by max flow.
double pinned_flow_cut(const AugmentedGraph& g, const std::vector<NodeId>& side);

// Random instance families.
using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);
int uniform_int(Rng& rng, int lo, int hi);  // inclusive
// Concave nondecreasing w(0..r) with w(0) = 0. `strict` forces strictly
// decreasing positive increments.
ScbFunction random_scb(Rng& rng, int r, bool strict = false);
// Nonnegative concave w(0..k).
GscbFunction random_gscb(Rng& rng, int k);
SplittingSpec random_catalog_spec(Rng& rng);
// Symmetric hypergraph with n nodes, up to max_edges hyperedges of sizes
// [min_size, max_size] and random catalog specs.
Hypergraph random_hypergraph(Rng& rng, int n, int max_edges, int min_size, int max_size);
DsfmInstance random_dsfm(Rng& rng, int n, int max_components, int max_support);
std::vector<NodeId> random_subset(Rng& rng, std::size_t n);

// Runs a compact randomized oracle suite, writing one line per check.
// Returns true when every check passes.
bool run_verify_suite(std::uint64_t seed, std::ostream& out);

}  // namespace augsparse::oracle
