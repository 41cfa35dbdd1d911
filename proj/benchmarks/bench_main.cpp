#include <benchmark/benchmark.h>

#include "augsparse/cooc.hpp"
#include "augsparse/dsfm.hpp"
#include "augsparse/flownet.hpp"
#include "augsparse/grid_benchmark.hpp"
#include "augsparse/plcover.hpp"
#include "augsparse/reduce.hpp"

namespace {

using namespace augsparse;

// Greedy cover on sqrt penalties; exponential search keeps this near log r.
void BM_FindBestCoverSqrt(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const ScbFunction w = materialize_scb(SplittingSpec::sqrt(), 2 * r);
  for (auto _ : state) benchmark::DoNotOptimize(find_best_cover(w, 0.1));
  state.SetComplexityN(r);
}
BENCHMARK(BM_FindBestCoverSqrt)->RangeMultiplier(2)->Range(1 << 12, 1 << 20)->Complexity();

void BM_CliqueCover(benchmark::State& state) {
  const double eps = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(clique_cover(1000000, eps));
}
BENCHMARK(BM_CliqueCover)->Arg(1)->Arg(10)->Arg(100)->Arg(1000);

void BM_SparsifyCooc(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CoocInstance inst = gen_powerlaw(n, n, 2.5, 42);
  for (auto _ : state) benchmark::DoNotOptimize(sparsify_cooc(inst, 0.1));
}
BENCHMARK(BM_SparsifyCooc)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

// Max flow on the grid segmentation network at a given eps (in thousandths).
void BM_GridMaxFlow(benchmark::State& state) {
  GridOptions options;
  options.width = static_cast<int>(state.range(0));
  const Hypergraph h = make_grid_instance(options).to_hypergraph();
  const AugmentedGraph g = build_st_network(h, static_cast<double>(state.range(1)) / 1000.0);
  for (auto _ : state) benchmark::DoNotOptimize(max_flow_min_cut(g.net()));
  state.counters["arcs"] = static_cast<double>(g.net().arcs().size());
}
BENCHMARK(BM_GridMaxFlow)
    ->Args({50, 0})
    ->Args({50, 1000})
    ->Args({100, 0})
    ->Args({100, 1000})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
