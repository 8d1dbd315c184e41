#include <benchmark/benchmark.h>

#include "emptytri/emptytri.hpp"

using namespace emptytri;

static void BM_EnumerateFast(benchmark::State& state) {
  const auto inst = gen_random(static_cast<std::uint32_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_empty_fast(inst.points));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateFast)->RangeMultiplier(2)->Range(16, 512)->Complexity();

static void BM_EnumerateBrute(benchmark::State& state) {
  const auto inst = gen_random(static_cast<std::uint32_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_empty_brute(inst.points));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateBrute)->RangeMultiplier(2)->Range(16, 64)->Complexity();

static void BM_CountsReportLowerBound(benchmark::State& state) {
  const auto inst = gen_lower_bound(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(counts_report(inst.points, inst.apex));
}
BENCHMARK(BM_CountsReportLowerBound)->Arg(10)->Arg(20)->Arg(40);

static void BM_IncidenceGraph(benchmark::State& state) {
  const auto inst = gen_random(static_cast<std::uint32_t>(state.range(0)), 2);
  const auto empty = enumerate_empty_fast(inst.points);
  Index x = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_incidence_graph(inst.points, x, empty));
    x = (x + 1) % inst.points.size();
  }
}
BENCHMARK(BM_IncidenceGraph)->Arg(32)->Arg(128)->Arg(512);

static void BM_KiteFreeMaximum(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_triangles_kite_free(static_cast<std::uint32_t>(state.range(0))));
  }
}
BENCHMARK(BM_KiteFreeMaximum)->DenseRange(8, 13)->Unit(benchmark::kMillisecond);

static void BM_RealizationTrials(benchmark::State& state) {
  RealizationTask task{paley9()};
  task.trial_budget = 10'000;
  task.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(search_realization(task));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(task.trial_budget));
}
BENCHMARK(BM_RealizationTrials)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
