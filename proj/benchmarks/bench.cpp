#include <benchmark/benchmark.h>

#include "chordal/chordal.hpp"
#include "chordal/clique_tree.hpp"
#include "chordal/contractibility.hpp"
#include "chordal/generators.hpp"
#include "chordal/separators.hpp"

using namespace chordal;

static void BM_McsOrder(benchmark::State& state) {
  Graph g = random_ktree(static_cast<int>(state.range(0)), 4, 7);
  for (auto _ : state) {
    auto order = mcs_order(g);
    benchmark::DoNotOptimize(order);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_McsOrder)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_BuildCliqueTree(benchmark::State& state) {
  Graph g = random_chordal(static_cast<int>(state.range(0)), 0.4, 11);
  for (auto _ : state) {
    CliqueTree t = build_clique_tree(g);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_BuildCliqueTree)->RangeMultiplier(2)->Range(16, 256);

static void BM_ConnectivityEnum(benchmark::State& state) {
  Graph g = random_ktree(static_cast<int>(state.range(0)), 3, 23);
  for (auto _ : state)
    benchmark::DoNotOptimize(detail::vertex_connectivity_enum(g));
}
BENCHMARK(BM_ConnectivityEnum)->DenseRange(8, 12, 2);

static void BM_ConnectivityFlow(benchmark::State& state) {
  Graph g = random_ktree(static_cast<int>(state.range(0)), 3, 23);
  for (auto _ : state)
    benchmark::DoNotOptimize(detail::vertex_connectivity_flow(g));
}
BENCHMARK(BM_ConnectivityFlow)->RangeMultiplier(2)->Range(16, 64);

static void BM_MinimalSeparators(benchmark::State& state) {
  Graph g = random_chordal(static_cast<int>(state.range(0)), 0.5, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(brute_force_minimal_separators(g));
}
BENCHMARK(BM_MinimalSeparators)->DenseRange(10, 16, 2);

static void BM_FullReport(benchmark::State& state) {
  Graph g = random_ktree(static_cast<int>(state.range(0)), 3, 19);
  for (auto _ : state) {
    ContractibilityReport rep = full_report(g);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_FullReport)->DenseRange(8, 12, 2);

BENCHMARK_MAIN();
