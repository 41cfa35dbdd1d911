#pragma once

// Synthetic segmentation workload: a W x W 4-neighbour grid with unary
// potentials from a noisy disc image, pairwise potentials on grid edges and
// region potentials mu |A| |e \ A| over square blocks.

#include <cstdint>
#include <vector>

#include "augsparse/dsfm.hpp"

namespace augsparse {

struct GridOptions {
  int width = 50;
  int block = 10;
  double lambda = 0.5;
  double mu = 0.02;
  double noise = 0.35;
  std::uint64_t seed = 42;
};

DsfmInstance make_grid_instance(const GridOptions& options);

struct SweepRow {
  double eps = 0.0;
  std::size_t pieces = 0;
  std::size_t arcs = 0;
  double value = 0.0;
  // value / exact optimum; 1 when both are zero.
  double ratio = 1.0;
  double a_priori_bound = 0.0;
  double ms = 0.0;
};

struct Sweep {
  Solution exact;
  std::vector<SweepRow> rows;
};

// Solves the instance exactly (eps = 0), then once per entry of `eps_values`
// in the given order.
Sweep run_grid_sweep(const DsfmInstance& inst, const std::vector<double>& eps_values,
                     unsigned threads = 1);

}  // namespace augsparse
