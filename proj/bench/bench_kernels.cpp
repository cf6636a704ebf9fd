// Serial reference paths against their OpenMP counterparts.
//   ramsat_bench --benchmark_filter=Verify
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "ramsat/constructions.hpp"
#include "ramsat/oracle.hpp"
#include "ramsat/poset.hpp"
#include "ramsat/saturation.hpp"

namespace {

using namespace ramsat;

void BM_VerifySerial(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const Graph g = construct_r4t(t).graph;
  for (auto _ : state) benchmark::DoNotOptimize(is_doubly_saturated_serial(g, 4, t));
  state.SetLabel("n=" + std::to_string(g.order()));
}

void BM_VerifyParallel(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const Graph g = construct_r4t(t).graph;
  const VerifyOptions opts{.use_rotation_symmetry = false, .parallel = true};
  for (auto _ : state) benchmark::DoNotOptimize(is_doubly_saturated(g, 4, t, opts));
  state.SetLabel("n=" + std::to_string(g.order()));
}

void BM_VerifyParallelSymmetric(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const Graph g = construct_r4t(t).graph;
  for (auto _ : state) benchmark::DoNotOptimize(is_doubly_saturated(g, 4, t));
  state.SetLabel("n=" + std::to_string(g.order()));
}

void BM_PaleyScanSerial(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(paley_scan_serial(s, 200, PaleyCheck::kFull));
}

void BM_PaleyScanParallel(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(paley_scan(s, 200, PaleyCheck::kFull));
}

void BM_OracleSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_oracle(n, 3, 4, EnumerationOptions{.parallel = false}));
}

void BM_OracleParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_oracle(n, 3, 4, EnumerationOptions{.parallel = true}));
}

void BM_PosetSerial(benchmark::State& state) {
  const auto classes = enumerate_good_classes(7, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(build_poset(classes, 3, 4, PosetOptions{.parallel = false}));
}

void BM_PosetParallel(benchmark::State& state) {
  const auto classes = enumerate_good_classes(7, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(build_poset(classes, 3, 4, PosetOptions{.parallel = true}));
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallelSymmetric)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PaleyScanSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PaleyScanParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PosetSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PosetParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
