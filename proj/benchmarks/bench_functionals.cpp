#include <benchmark/benchmark.h>

#include "stechkin/constants.hpp"
#include "stechkin/functionals.hpp"
#include "stechkin/sampling.hpp"

using namespace stechkin;

static void BM_Gamma(benchmark::State& state) {
  Rng rng(1);
  const auto a = sample_monotone_simplex(rng, static_cast<std::size_t>(state.range(0)));
  const Exponent q = Exponent::finite(2.5);
  for (auto _ : state) benchmark::DoNotOptimize(gamma(a, q).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Gamma)->RangeMultiplier(10)->Range(10, 1000000)->Complexity(benchmark::oN);

static void BM_WeakGamma(benchmark::State& state) {
  Rng rng(2);
  const auto a = sample_monotone_simplex(rng, static_cast<std::size_t>(state.range(0)));
  const Exponent q = Exponent::finite(2.5);
  for (auto _ : state) benchmark::DoNotOptimize(weak_gamma(a, q).value);
}
BENCHMARK(BM_WeakGamma)->RangeMultiplier(10)->Range(10, 1000000);

static void BM_Zeta(benchmark::State& state) {
  const double q = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(zeta(q, 1e-12).value);
}
BENCHMARK(BM_Zeta)->Arg(11)->Arg(20)->Arg(100);
