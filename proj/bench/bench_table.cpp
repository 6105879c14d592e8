#include <benchmark/benchmark.h>

#include "fusionkit/fusion_ring.hpp"

namespace {

using fusionkit::FusionContext;

void table_args(benchmark::internal::Benchmark* b) {
  for (auto [N, k] : {std::pair{3, 4}, {4, 3}, {4, 4}, {5, 3}}) b->Args({N, k});
}

void BM_TableSerial(benchmark::State& state) {
  const FusionContext ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(fusionkit::full_table_serial(ctx));
}
BENCHMARK(BM_TableSerial)->Apply(table_args)->Unit(benchmark::kMillisecond);

void BM_TableParallel(benchmark::State& state) {
  const FusionContext ctx(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(fusionkit::full_table(ctx));
}
BENCHMARK(BM_TableParallel)->Apply(table_args)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
