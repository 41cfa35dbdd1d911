#include <gtest/gtest.h>

#include "augsparse/grid_benchmark.hpp"
#include "augsparse/oracle.hpp"

namespace augsparse {
namespace {

TEST(GridInstance, ComponentMix) {
  GridOptions options;
  options.width = 20;
  options.block = 5;
  const DsfmInstance inst = make_grid_instance(options);
  EXPECT_EQ(inst.n, 400u);
  std::size_t unary = 0, pairwise = 0, region = 0;
  for (const auto& c : inst.components) {
    if (c.support.size() == 1) ++unary;
    if (c.support.size() == 2) ++pairwise;
    if (c.support.size() == 25) ++region;
  }
  EXPECT_EQ(unary, 400u);
  EXPECT_EQ(pairwise, 2u * 20 * 19);
  EXPECT_EQ(region, 16u);
  EXPECT_NO_THROW(inst.validate());
}

TEST(GridInstance, DeterministicForSeed) {
  GridOptions options;
  options.width = 8;
  const DsfmInstance a = make_grid_instance(options);
  const DsfmInstance b = make_grid_instance(options);
  ASSERT_EQ(a.components.size(), b.components.size());
  for (std::size_t e = 0; e < a.components.size(); ++e) {
    EXPECT_EQ(a.components[e].f, b.components[e].f);
  }
}

TEST(GridSweep, SmallGridExactAndBounded) {
  GridOptions options;
  options.width = 4;
  options.block = 2;
  const DsfmInstance inst = make_grid_instance(options);
  const Sweep sweep = run_grid_sweep(inst, {1.0, 0.1});
  EXPECT_NEAR(sweep.exact.value, oracle::brute_min_f(inst).value, 1e-9);
  for (const SweepRow& row : sweep.rows) {
    EXPECT_LE(row.ratio, 1.0 + row.eps + 1e-9);
    EXPECT_LE(row.value, row.a_priori_bound + 1e-9);
  }
}

}  // namespace
}  // namespace augsparse
