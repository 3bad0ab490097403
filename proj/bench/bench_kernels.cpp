// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <random>

#include "strrec/experiment.hpp"
#include "strrec/universal.hpp"

using namespace strrec;

namespace {

void BM_CodeLengths(benchmark::State& state, Execution exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RunLengthBitsCompressor c;
  for (auto _ : state) {
    auto v = exec == Execution::kSerial ? kernels::code_lengths_serial(n, c)
                                        : kernels::code_lengths_parallel(n, c);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << n));
}

void BM_SubstringCounts(benchmark::State& state, Execution exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t len = 6;
  std::vector<Mask> members;
  std::mt19937_64 rng(1);
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    if (rng() % 2 == 0) members.push_back(x);
  }
  for (auto _ : state) {
    auto v = exec == Execution::kSerial
                 ? kernels::substring_counts_serial(members, n, len)
                 : kernels::substring_counts_parallel(members, n, len);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(members.size()));
}

void BM_Sweep(benchmark::State& state, Execution exec) {
  SweepSpec spec;
  spec.algos = {"naive", "rle", "lz-prefix", "lz-substring"};
  spec.families = {"random", "copy-paste(8)"};
  spec.lengths = {2000};
  spec.sigmas = {4};
  spec.reps = 2;
  for (auto _ : state) {
    auto rows = run_experiments(spec, exec);
    benchmark::DoNotOptimize(rows.data());
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_CodeLengths, serial, Execution::kSerial)
    ->DenseRange(12, 20, 4);
BENCHMARK_CAPTURE(BM_CodeLengths, parallel, Execution::kParallel)
    ->DenseRange(12, 20, 4);
BENCHMARK_CAPTURE(BM_SubstringCounts, serial, Execution::kSerial)
    ->DenseRange(10, 18, 4);
BENCHMARK_CAPTURE(BM_SubstringCounts, parallel, Execution::kParallel)
    ->DenseRange(10, 18, 4);
BENCHMARK_CAPTURE(BM_Sweep, serial, Execution::kSerial)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Sweep, parallel, Execution::kParallel)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
