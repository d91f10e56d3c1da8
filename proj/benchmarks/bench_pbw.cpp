#include <benchmark/benchmark.h>

#include "klcalc/affine_pbw.hpp"

using namespace klcalc;

static void BM_GradedBasisZeroWeight(benchmark::State& state) {
  const LieRealization L = build_realization(build_root_system(RootType::D, 4));
  const Weight zero(4);
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(graded_basis(L, zero, degree));
  state.counters["monomials"] = static_cast<double>(graded_basis(L, zero, degree).size());
}
BENCHMARK(BM_GradedBasisZeroWeight)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_SingularKernel(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const LieRealization L = build_realization(build_root_system(RootType::D, l));
  Weight w(l);
  for (int i = 0; i < l; ++i) w[i] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(singular_kernel(L, Rational(2 - l), w, l / 2));
}
BENCHMARK(BM_SingularKernel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_ApplyWithCache(benchmark::State& state) {
  const LieRealization L = build_realization(build_root_system(RootType::E, 7));
  const auto ops = raising_operators(L);
  const std::uint32_t e = L.root_vector(L.root_system().theta());
  const StateVector v = create(L, Rational(-4), {{e, -2}, {e, -1}, {0, -1}});
  AffineAction act(L, Rational(-4));
  for (auto _ : state)
    for (const auto& g : ops) benchmark::DoNotOptimize(act.apply(g, v));
}
BENCHMARK(BM_ApplyWithCache);
