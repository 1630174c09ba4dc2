#include <benchmark/benchmark.h>

#include <cmath>

#include "acq/engine.hpp"
#include "acq/generators.hpp"
#include "acq/oracle.hpp"
#include "acq/pathfinder.hpp"
#include "acq/strategies.hpp"
#include "fixtures.hpp"

namespace {

using namespace acq;

void BM_ReplayGoodTree(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const GoodTree tree = testing::random_good_tree(n, 1);
  const Hypergraph h(tree.tree());
  const StrategyTrace trace = good_tree_strategy(tree);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_trace(h, 2, trace.rounds).completed);
  }
  state.counters["rounds"] = static_cast<double>(trace.rounds.size());
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * trace.rounds.size()));
}
BENCHMARK(BM_ReplayGoodTree)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_GoodTreeStrategy(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const GoodTree tree = testing::random_good_tree(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(good_tree_strategy(tree).rounds.size());
}
BENCHMARK(BM_GoodTreeStrategy)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ConnectivityPipeline(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const EdgeSequence seq = gen_process(n, 3);
  const Graph g = snapshot(seq, connectivity_time(seq));
  for (auto _ : state) {
    benchmark::DoNotOptimize(good_spanning_tree_strategy(g, {64, 3}).rounds.size());
  }
}
BENCHMARK(BM_ConnectivityPipeline)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_Baranyai(benchmark::State& state) {
  const std::size_t big_n = static_cast<std::size_t>(state.range(0));
  const std::size_t s = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(baranyai(big_n, s).factors.size());
}
BENCHMARK(BM_Baranyai)->Args({12, 3})->Args({24, 3})->Args({16, 4})->Unit(benchmark::kMillisecond);

void BM_LoosePathStrategy(benchmark::State& state) {
  const std::size_t len = static_cast<std::size_t>(state.range(0));
  const std::size_t k = static_cast<std::size_t>(state.range(1));
  const LoosePath path = testing::random_loose_path(len, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(loose_path_strategy(path, k, 4).rounds.size());
}
BENCHMARK(BM_LoosePathStrategy)->Args({61, 2})->Args({121, 2})->Args({31, 3})
    ->Unit(benchmark::kMillisecond);

void BM_DfsLoosePath(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Hypergraph h = gen_hrnp(n, 3, long_path_constant(3, 0.5) / (double(n) * n), 5);
  for (auto _ : state) benchmark::DoNotOptimize(dfs_loose_path(h, 5).length());
}
BENCHMARK(BM_DfsLoosePath)->Arg(60)->Arg(120);

void BM_ExactAc(benchmark::State& state) {
  const Hypergraph h(Graph::path(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(exact_ac(h, 2));
}
BENCHMARK(BM_ExactAc)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
