#include <benchmark/benchmark.h>

#include "klcalc/audit.hpp"

using namespace klcalc;

static void BM_BuildRealization(benchmark::State& state) {
  const RootSystem rs = build_root_system(RootType::E, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_realization(rs));
}
BENCHMARK(BM_BuildRealization)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_RandomJacobi(benchmark::State& state) {
  const LieRealization L = build_realization(build_root_system(RootType::E, 7));
  for (auto _ : state) benchmark::DoNotOptimize(audit_brackets_random(L, 1000, 1));
}
BENCHMARK(BM_RandomJacobi)->Unit(benchmark::kMillisecond);

static void BM_ExhaustiveJacobiF4(benchmark::State& state) {
  const LieRealization L = build_realization(build_root_system(RootType::F, 4));
  for (auto _ : state) benchmark::DoNotOptimize(audit_brackets_exhaustive(L));
}
BENCHMARK(BM_ExhaustiveJacobiF4)->Unit(benchmark::kMillisecond);
