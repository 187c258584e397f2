#include <benchmark/benchmark.h>

#include "stechkin/continuous.hpp"
#include "stechkin/sampling.hpp"

using namespace stechkin;

static void BM_StrongContIndicator(benchmark::State& state) {
  const auto f = StepFunction::normalized_indicator(1.0);
  const Exponent q = Exponent::finite(1.5);
  for (auto _ : state) benchmark::DoNotOptimize(strong_cont_lhs(f, q).value);
}
BENCHMARK(BM_StrongContIndicator);

static void BM_StrongContStaircase(benchmark::State& state) {
  Rng rng(3);
  std::vector<StepFunction> fs;
  for (int i = 0; i < 16; ++i) fs.push_back(random_step_function(rng, static_cast<std::size_t>(state.range(0))));
  const Exponent q = Exponent::finite(2.0);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(strong_cont_lhs(fs[i++ % fs.size()], q).value);
}
BENCHMARK(BM_StrongContStaircase)->Arg(4)->Arg(32);
