#include <benchmark/benchmark.h>

#include "stechkin/extremal.hpp"

using namespace stechkin;

static void BM_VertexSum(benchmark::State& state) {
  const Exponent q = Exponent::finite(static_cast<double>(state.range(1)) / 10.0);
  const auto k0 = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vertex_sum(q, k0));
}
// q = 2 takes the square-root path.
BENCHMARK(BM_VertexSum)->Args({1000000, 20})->Args({1000000, 30});

static void BM_SimplexSearch(benchmark::State& state) {
  const Exponent q = Exponent::finite(3.0);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simplex_vertex_search(q, n).best_ratio);
}
BENCHMARK(BM_SimplexSearch)->Arg(1000)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
