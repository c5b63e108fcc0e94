#include <benchmark/benchmark.h>

#include "lesgp/decomposition.hpp"
#include "lesgp/enumerate.hpp"
#include "lesgp/green.hpp"

namespace {

const std::vector<lesgp::LeSemigroup>& order4() {
  static const auto corpus = [] {
    lesgp::EnumerationTask task;
    task.n = 4;
    return lesgp::enumerate_le_semigroups(task);
  }();
  return corpus;
}

void BM_EnumerateCanonical(benchmark::State& state) {
  lesgp::EnumerationTask task;
  task.n = static_cast<std::size_t>(state.range(0));
  lesgp::EnumerationOptions opt;
  opt.jobs = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lesgp::enumerate_le_semigroups(task, opt));
}
BENCHMARK(BM_EnumerateCanonical)->Args({3, 1})->Args({4, 1})->Args({5, 1})->Args({5, 4})
    ->Unit(benchmark::kMillisecond);

void BM_Lattices(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(lesgp::enumerate_lattices(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_Lattices)->DenseRange(4, 6);

void BM_CanonicalKey(benchmark::State& state) {
  const auto& corpus = order4();
  for (auto _ : state) {
    for (const auto& s : corpus) benchmark::DoNotOptimize(lesgp::canonical_key(s));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_CanonicalKey);

void BM_JClasses(benchmark::State& state) {
  const auto& corpus = order4();
  for (auto _ : state) {
    for (const auto& s : corpus) benchmark::DoNotOptimize(lesgp::j_classes(s));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_JClasses);

void BM_CheckAll(benchmark::State& state) {
  const auto& corpus = order4();
  for (auto _ : state) {
    for (const auto& s : corpus) benchmark::DoNotOptimize(lesgp::check_all(s));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_CheckAll)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
