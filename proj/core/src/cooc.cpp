#include "augsparse/cooc.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <thread>

#include "augsparse/error.hpp"

namespace augsparse {
namespace {

// Uniform draws built directly on the engine output so results do not depend
// on the standard library's distribution implementations.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

void CoocInstance::validate() const {
  std::vector<std::size_t> stamp(n, static_cast<std::size_t>(-1));
  for (std::size_t c = 0; c < sets.size(); ++c) {
    const CoocSet& set = sets[c];
    if (!(std::isfinite(set.weight) && set.weight > 0.0)) {
      throw DomainError("set " + std::to_string(c) + " has a non-positive weight");
    }
    for (NodeId v : set.members) {
      if (v >= n) throw DomainError("set " + std::to_string(c) + " has a node outside [0, n)");
      if (stamp[v] == c) throw DomainError("set " + std::to_string(c) + " repeats a node");
      stamp[v] = c;
    }
  }
}

double CoocInstance::clique_expansion_size() const {
  double total = 0.0;
  for (const CoocSet& set : sets) {
    const auto k = static_cast<double>(set.members.size());
    total += k * k;
  }
  return total;
}

double cooc_cut_value(const CoocInstance& inst, std::span<const NodeId> side) {
  std::vector<char> in(inst.n, 0);
  for (NodeId v : side) {
    if (v >= inst.n) throw DomainError("cut set contains a node outside [0, n)");
    in[v] = 1;
  }
  double total = 0.0;
  for (const CoocSet& set : inst.sets) {
    double i = 0.0;
    for (NodeId v : set.members) i += in[v];
    total += set.weight * i * (static_cast<double>(set.members.size()) - i);
  }
  return total;
}

AugmentedGraph sparsify_cooc(const CoocInstance& inst, double eps, unsigned threads) {
  if (eps < 0.0) throw DomainError("eps must be nonnegative");
  inst.validate();
  using Clock = std::chrono::steady_clock;
  BuildStats stats;

  auto start = Clock::now();
  std::map<std::size_t, CcbParams> by_size;
  for (const CoocSet& set : inst.sets) {
    if (set.members.size() >= 2) by_size.emplace(set.members.size(), CcbParams{});
  }
  std::vector<std::map<std::size_t, CcbParams>::iterator> slots;
  for (auto it = by_size.begin(); it != by_size.end(); ++it) slots.push_back(it);
  // Each worker writes only its own slot; the map structure is not modified.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t s = next++; s < slots.size(); s = next++) {
      slots[s]->second = cover_to_ccb(clique_cover(static_cast<int>(slots[s]->first), eps));
    }
  };
  {
    std::vector<std::jthread> workers;
    const unsigned extra = std::min<unsigned>(threads, static_cast<unsigned>(slots.size()));
    for (unsigned t = 1; t < extra; ++t) workers.emplace_back(work);
    work();
  }
  stats.cover_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

  start = Clock::now();
  AugmentedGraphBuilder builder(inst.n);
  for (std::size_t c = 0; c < inst.sets.size(); ++c) {
    const CoocSet& set = inst.sets[c];
    stats.total_size += set.members.size();
    if (set.members.size() < 2) {
      stats.pieces.push_back(0);
      continue;
    }
    const CcbParams params = by_size.at(set.members.size()).scaled(set.weight);
    const auto k = static_cast<std::uint32_t>(set.members.size());
    builder.add(set.members, expand_ccb(k, params), params, static_cast<std::uint32_t>(c));
    stats.pieces.push_back(params.order());
  }
  stats.hyperedges = inst.sets.size();
  auto graph = std::move(builder).finish(std::move(stats));
  graph.record_build_time(
      std::chrono::duration<double, std::milli>(Clock::now() - start).count());
  return graph;
}

std::vector<double> powerlaw_pmf(std::size_t n, double gamma) {
  if (n < 1) throw DomainError("power law needs n >= 1");
  if (!(gamma > 1.0)) throw DomainError("power law needs gamma > 1");
  std::vector<double> pmf(n + 1, 0.0);
  double z = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    pmf[k] = std::pow(static_cast<double>(k), -gamma);
    z += pmf[k];
  }
  for (double& p : pmf) p /= z;
  return pmf;
}

CoocInstance gen_powerlaw(std::size_t n, std::size_t m, double gamma, std::uint64_t seed) {
  if (m < 1) throw DomainError("gen_powerlaw needs m >= 1");
  const std::vector<double> pmf = powerlaw_pmf(n, gamma);
  std::vector<double> cdf(n);
  double acc = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    acc += pmf[k];
    cdf[k - 1] = acc;
  }
  cdf.back() = 1.0;

  std::mt19937_64 rng(seed);
  CoocInstance inst;
  inst.n = n;
  inst.sets.reserve(m);
  std::vector<char> chosen(n, 0);
  for (std::size_t s = 0; s < m; ++s) {
    const double u = uniform01(rng);
    const std::size_t k =
        static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin()) + 1;
    CoocSet set;
    set.members.reserve(std::min(k, n));
    // Floyd's sampling: k distinct values from [0, n).
    for (std::size_t j = n - std::min(k, n); j < n; ++j) {
      auto t = static_cast<NodeId>(uniform_below(rng, j + 1));
      if (chosen[t]) t = static_cast<NodeId>(j);
      chosen[t] = 1;
      set.members.push_back(t);
    }
    for (NodeId v : set.members) chosen[v] = 0;
    std::sort(set.members.begin(), set.members.end());
    inst.sets.push_back(std::move(set));
  }
  return inst;
}

}  // namespace augsparse
