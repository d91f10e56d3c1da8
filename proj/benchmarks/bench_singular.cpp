#include <benchmark/benchmark.h>

#include "klcalc/singular.hpp"

using namespace klcalc;

static void BM_BuildWn(benchmark::State& state) {
  const int half = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const LieRealization L = build_realization(build_root_system(RootType::D, 2 * half));
  for (auto _ : state) benchmark::DoNotOptimize(build_w_n(L, n));
}
BENCHMARK(BM_BuildWn)->Args({2, 1})->Args({2, 2})->Args({3, 1})->Unit(benchmark::kMillisecond);

static void BM_BuildVn(benchmark::State& state) {
  const LieRealization L = build_realization(build_root_system(RootType::D, 6));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_v_n(L, n));
}
BENCHMARK(BM_BuildVn)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_IsSingularE7(benchmark::State& state) {
  const LieRealization L = build_realization(build_root_system(RootType::E, 7));
  const StateVector v = build_vE7(L).vector;
  for (auto _ : state) benchmark::DoNotOptimize(is_singular(L, v));
}
BENCHMARK(BM_IsSingularE7)->Unit(benchmark::kMillisecond);

static void BM_EnumerateInvolutions(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_involutions(l));
}
BENCHMARK(BM_EnumerateInvolutions)->DenseRange(3, 6);
