#include <gtest/gtest.h>

#include <cmath>

#include "augsparse/dsfm.hpp"
#include "augsparse/error.hpp"
#include "augsparse/oracle.hpp"

namespace augsparse {
namespace {

// Second evaluation path: per-node membership lists instead of per-component
// scans.
double evaluate_by_membership(const DsfmInstance& inst, const std::vector<NodeId>& side) {
  std::vector<std::vector<std::size_t>> containing(inst.n);
  for (std::size_t e = 0; e < inst.components.size(); ++e) {
    for (NodeId v : inst.components[e].support) containing[v].push_back(e);
  }
  std::vector<int> count(inst.components.size(), 0);
  for (NodeId v : side) {
    for (std::size_t e : containing[v]) ++count[e];
  }
  double total = 0.0;
  for (std::size_t e = 0; e < inst.components.size(); ++e) {
    total += inst.components[e].f.values().at(count[e]);
  }
  return total;
}

DsfmInstance two_component_instance() {
  return {2, {{{0}, GscbFunction::create({1, 0})}, {{0, 1}, GscbFunction::create({0, 2, 0})}}};
}

TEST(EvaluateF, Examples) {
  const DsfmInstance zero{3, {{{0, 1}, GscbFunction::create({0, 1, 0})}}};
  EXPECT_EQ(evaluate_f(zero, {}), 0.0);
  const DsfmInstance clique{4, {{{0, 1, 2, 3}, GscbFunction::create({0, 3, 4, 3, 0})}}};
  const std::vector<NodeId> s{0};
  EXPECT_EQ(evaluate_f(clique, s), 3.0);
}

TEST(EvaluateF, MatchesSecondPath) {
  oracle::Rng rng(81);
  for (int t = 0; t < 100; ++t) {
    const DsfmInstance inst = oracle::random_dsfm(rng, oracle::uniform_int(rng, 1, 12), 6, 6);
    const auto side = oracle::random_subset(rng, inst.n);
    EXPECT_NEAR(evaluate_f(inst, side), evaluate_by_membership(inst, side), 1e-12);
  }
}

TEST(SparseCard, ZeroAtEmptySet) {
  const DsfmInstance inst{4,
                          {{{0, 1, 2}, GscbFunction::create({0, 2, 2, 1})},
                           {{2, 3}, GscbFunction::create({0, 1, 1})}}};
  const Solution sol = sparse_card(inst, 0.0);
  EXPECT_EQ(sol.value, 0.0);
  EXPECT_TRUE(sol.set.empty());
}

TEST(SparseCard, TwoComponentInstance) {
  const DsfmInstance inst = two_component_instance();
  // f(empty) = 1, f({0}) = 2, f({1}) = 3, f({0,1}) = 0.
  const oracle::MinResult brute = oracle::brute_min_f(inst);
  EXPECT_EQ(brute.value, 0.0);
  EXPECT_EQ(brute.set, (std::vector<NodeId>{0, 1}));
  const Solution sol = sparse_card(inst, 0.0);
  EXPECT_EQ(sol.set, brute.set);
  EXPECT_NEAR(sol.value, 0.0, 1e-12);
}

TEST(SparseCard, ExactAtZeroEps) {
  oracle::Rng rng(83);
  for (int t = 0; t < 100; ++t) {
    const DsfmInstance inst = oracle::random_dsfm(rng, oracle::uniform_int(rng, 1, 10), 5, 6);
    const double opt = oracle::brute_min_f(inst).value;
    const Solution sol = sparse_card(inst, 0.0);
    EXPECT_NEAR(sol.value, opt, 1e-9 * std::max(1.0, opt)) << "trial " << t;
    EXPECT_NEAR(sol.cut_value, sol.value, 1e-9 * std::max(1.0, opt));
  }
}

TEST(SparseCard, ApproximationAndCutConsistency) {
  oracle::Rng rng(89);
  for (int t = 0; t < 100; ++t) {
    const DsfmInstance inst = oracle::random_dsfm(rng, oracle::uniform_int(rng, 1, 10), 5, 6);
    const double opt = oracle::brute_min_f(inst).value;
    for (double eps : {0.1, 0.5, 1.0}) {
      const Solution sol = sparse_card(inst, eps);
      const double tol = 1e-9 * std::max(1.0, opt);
      EXPECT_LE(sol.value, (1 + eps) * opt + tol) << "trial " << t;
      EXPECT_LE(sol.value, sol.a_priori_bound + tol);
      EXPECT_LE(a_posteriori_ratio(sol, opt).value, 1 + eps + 1e-9);
      // The min cut equals the covered functions summed at the returned set.
      const AugmentedGraph g = build_st_network(inst.to_hypergraph(), eps);
      EXPECT_NEAR(sol.cut_value, augmented_cut(g, sol.set), tol);
    }
  }
}

TEST(SparseCard, ArcCountNonIncreasingInEps) {
  oracle::Rng rng(97);
  for (int t = 0; t < 20; ++t) {
    const DsfmInstance inst = oracle::random_dsfm(rng, 30, 10, 25);
    std::size_t previous = sparse_card(inst, 0.0).arcs;
    for (double eps : {0.01, 0.1, 0.5, 1.0, 2.0}) {
      const std::size_t arcs = sparse_card(inst, eps).arcs;
      EXPECT_LE(arcs, previous);
      previous = arcs;
    }
  }
}

TEST(SparseCard, SeedsAreEnforced) {
  const DsfmInstance inst = two_component_instance();
  Seeds seeds;
  seeds.exclude = {1};
  const Solution sol = sparse_card(inst, 0.0, seeds);
  EXPECT_EQ(sol.set, std::vector<NodeId>{});
  EXPECT_DOUBLE_EQ(sol.value, 1.0);

  seeds = {};
  seeds.include = {1};
  seeds.exclude = {0};
  EXPECT_EQ(sparse_card(inst, 0.0, seeds).set, std::vector<NodeId>{1});

  seeds.include = {0};
  seeds.exclude = {0};
  EXPECT_THROW(sparse_card(inst, 0.0, seeds), DomainError);
}

TEST(SparseCard, ReturnsMinimalSourceSide) {
  // f is zero on every set; the smallest minimizer is the empty set.
  const DsfmInstance inst{3, {{{0, 1, 2}, GscbFunction::create({0, 0, 0, 0})}}};
  EXPECT_TRUE(sparse_card(inst, 0.0).set.empty());
}

TEST(SparseCard, AcceptsMirroredSymmetricSpecs) {
  const Hypergraph h{4, {{{0, 1, 2, 3}, SplittingSpec::clique()}, {{0}, GscbFunction::create({2, 0})}}};
  const DsfmInstance inst = to_dsfm(h);
  EXPECT_EQ(inst.components[0].f.values(), (std::vector<double>{0, 3, 4, 3, 0}));
  const Solution sol = sparse_card(inst, 0.0);
  EXPECT_NEAR(sol.value, oracle::brute_min_f(inst).value, 1e-12);
}

TEST(APosterioriRatio, Cases) {
  Solution sol;
  sol.value = 3.0;
  EXPECT_DOUBLE_EQ(a_posteriori_ratio(sol, 2.0).value, 1.5);
  EXPECT_TRUE(std::isinf(a_posteriori_ratio(sol, 0.0).value));
  sol.value = 0.0;
  const Ratio r = a_posteriori_ratio(sol, 0.0);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.value, 1.0);
}

}  // namespace
}  // namespace augsparse
