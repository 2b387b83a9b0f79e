#include <benchmark/benchmark.h>

#include "nilcert/nilcert.hpp"

namespace {

using namespace nilcert;

void BM_Multiply(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = random_gaussian_matrix(rng, n);
  const auto y = random_gaussian_matrix(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Multiply)->RangeMultiplier(2)->Range(4, 256)->Complexity(benchmark::oNCubed);

void BM_HermitianEigenvalues(benchmark::State& state) {
  Rng rng(2);
  const auto h = random_hermitian(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(h));
}
BENCHMARK(BM_HermitianEigenvalues)->RangeMultiplier(2)->Range(4, 128);

void BM_NilpotencyIndex(benchmark::State& state) {
  Rng rng(3);
  const auto t = random_nilpotent(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nilpotency_index(t));
}
BENCHMARK(BM_NilpotencyIndex)->RangeMultiplier(2)->Range(4, 64);

void BM_Analyze(benchmark::State& state) {
  Rng rng(4);
  const auto t = random_nilpotent(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(t));
}
BENCHMARK(BM_Analyze)->DenseRange(2, 8, 2);

void BM_VolterraReport(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(volterra_report(static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_VolterraReport)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
