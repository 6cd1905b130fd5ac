// Serial reference vs OpenMP kernels on the bulk verification workloads.
#include <benchmark/benchmark.h>

#include "crystbraid/parallel.hpp"

namespace {

constexpr std::uint64_t kSeed = 20240601;

void BM_DichotomySerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cryst::bulk::torsion_dichotomy_serial(static_cast<int>(state.range(0))));
}
void BM_DichotomyParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cryst::bulk::torsion_dichotomy_parallel(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DichotomySerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DichotomyParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ConjugacySerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(cryst::bulk::conjugacy_sampling_serial(static_cast<int>(state.range(0)), 200, kSeed));
}
void BM_ConjugacyParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(cryst::bulk::conjugacy_sampling_parallel(static_cast<int>(state.range(0)), 200, kSeed));
}
BENCHMARK(BM_ConjugacySerial)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjugacyParallel)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_FrobeniusSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cryst::bulk::frobenius_sampling_serial(16, kSeed));
}
void BM_FrobeniusParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cryst::bulk::frobenius_sampling_parallel(16, kSeed));
}
BENCHMARK(BM_FrobeniusSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrobeniusParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
