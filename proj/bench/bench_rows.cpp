#include "twoloop/homology.hpp"

#include <benchmark/benchmark.h>

using namespace twoloop;

namespace {

void BM_RowsSerial(benchmark::State& state) {
  const auto c = static_cast<ParityCase>(state.range(0));
  const auto max_t = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(rank_rows_serial(c, max_t));
}

void BM_RowsParallel(benchmark::State& state) {
  const auto c = static_cast<ParityCase>(state.range(0));
  const auto max_t = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(rank_rows_parallel(c, max_t));
}

void cases(benchmark::internal::Benchmark* b) {
  for (ParityCase c : kAllCases) {
    for (int t : {23, 40}) b->Args({static_cast<int>(c), t});
  }
  b->ArgNames({"case", "max_t"})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_RowsSerial)->Apply(cases);
BENCHMARK(BM_RowsParallel)->Apply(cases)->UseRealTime();

BENCHMARK_MAIN();
