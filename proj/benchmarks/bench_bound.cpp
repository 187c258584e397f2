#include <benchmark/benchmark.h>

#include "stechkin/bound_engine.hpp"

using namespace stechkin;

static void BM_BoundPowerFamily(benchmark::State& state) {
  const auto b = AuxSequence::power_family(0.88);
  const Exponent q = Exponent::finite(2.0);
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(c_b(q, b, 100, m).supremum.value);
}
BENCHMARK(BM_BoundPowerFamily)->Arg(50000)->Arg(200000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_OptimizeP(benchmark::State& state) {
  const Exponent q = Exponent::finite(1.4);
  for (auto _ : state) benchmark::DoNotOptimize(optimize_p(q).bound);
}
BENCHMARK(BM_OptimizeP);
