#include "augsparse/grid_benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "augsparse/error.hpp"

namespace augsparse {
namespace {

double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& rng) {
  const double u = uniform01(rng);
  const double v = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

}  // namespace

DsfmInstance make_grid_instance(const GridOptions& options) {
  const int w = options.width;
  if (w < 1 || options.block < 1) throw DomainError("grid width and block must be positive");
  std::mt19937_64 rng(options.seed);
  DsfmInstance inst;
  inst.n = static_cast<std::size_t>(w) * w;
  auto id = [w](int row, int col) { return static_cast<NodeId>(row * w + col); };

  const double centre = (w - 1) / 2.0;
  const double radius = w / 3.0;
  for (int row = 0; row < w; ++row) {
    for (int col = 0; col < w; ++col) {
      const bool inside = std::hypot(row - centre, col - centre) <= radius;
      const double p =
          std::clamp((inside ? 1.0 : 0.0) + options.noise * gaussian(rng), 0.02, 0.98);
      // f(0): cost of leaving the pixel out; f(1): cost of taking it.
      inst.components.push_back({{id(row, col)}, GscbFunction::create({p, 1.0 - p})});
    }
  }
  const GscbFunction pair = GscbFunction::create({0.0, options.lambda, 0.0});
  for (int row = 0; row < w; ++row) {
    for (int col = 0; col < w; ++col) {
      if (col + 1 < w) inst.components.push_back({{id(row, col), id(row, col + 1)}, pair});
      if (row + 1 < w) inst.components.push_back({{id(row, col), id(row + 1, col)}, pair});
    }
  }
  for (int r0 = 0; r0 < w; r0 += options.block) {
    for (int c0 = 0; c0 < w; c0 += options.block) {
      std::vector<NodeId> members;
      for (int row = r0; row < std::min(w, r0 + options.block); ++row) {
        for (int col = c0; col < std::min(w, c0 + options.block); ++col) {
          members.push_back(id(row, col));
        }
      }
      const int k = static_cast<int>(members.size());
      if (k < 2) continue;
      std::vector<double> f(k + 1);
      for (int i = 0; i <= k; ++i) f[i] = options.mu * i * (k - i);
      inst.components.push_back({std::move(members), GscbFunction::create(std::move(f))});
    }
  }
  return inst;
}

Sweep run_grid_sweep(const DsfmInstance& inst, const std::vector<double>& eps_values,
                     unsigned threads) {
  Sweep sweep;
  sweep.exact = sparse_card(inst, 0.0, {}, threads);
  const double opt = sweep.exact.value;
  for (double eps : eps_values) {
    const Solution sol = sparse_card(inst, eps, {}, threads);
    SweepRow row;
    row.eps = eps;
    row.pieces = sol.pieces;
    row.arcs = sol.arcs;
    row.value = sol.value;
    row.ratio = a_posteriori_ratio(sol, opt).value;
    row.a_priori_bound = sol.a_priori_bound;
    row.ms = sol.cover_ms + sol.build_ms + sol.solve_ms;
    sweep.rows.push_back(row);
  }
  return sweep;
}

}  // namespace augsparse
