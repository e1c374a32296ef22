#include <benchmark/benchmark.h>

#include "polycount/analysis.hpp"
#include "polycount/counts.hpp"
#include "polycount/polynomial.hpp"

using namespace polycount;

// Every iteration starts from an empty cache, so these measure cold recursion.

static void BM_QCount(benchmark::State& state) {
  const long m = state.range(0);
  for (auto _ : state) {
    CountEngine engine;
    benchmark::DoNotOptimize(engine.q_count(1, {m, m}));
  }
}
BENCHMARK(BM_QCount)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_PRecursive(benchmark::State& state) {
  const long m = state.range(0);
  for (auto _ : state) {
    CountEngine engine;
    benchmark::DoNotOptimize(engine.p_recursive(1, {m, m}));
  }
}
BENCHMARK(BM_PRecursive)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_PFromQ(benchmark::State& state) {
  const long m = state.range(0);
  for (auto _ : state) {
    CountEngine engine;
    benchmark::DoNotOptimize(engine.p_from_q(1, {m, m}));
  }
}
BENCHMARK(BM_PFromQ)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_FitQ(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    CountEngine engine;
    benchmark::DoNotOptimize(fit_quasipoly(Family::Q, g, n, engine));
  }
}
BENCHMARK(BM_FitQ)->Args({1, 1})->Args({0, 4})->Args({1, 2})->Args({2, 1})->Unit(benchmark::kMillisecond);

static void BM_Interpolate(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::vector<Rational> nodes;
  for (std::size_t i = 0; i < k; ++i) nodes.emplace_back(static_cast<long>(2 * i + 1));
  const std::vector<std::vector<Rational>> grid{nodes, nodes, nodes};
  Tensor t{{k, k, k}, {}};
  for (std::size_t i = 0; i < k * k * k; ++i) t.values.emplace_back(static_cast<long>(i * i % 97));
  for (auto _ : state) benchmark::DoNotOptimize(interpolate(grid, t));
}
BENCHMARK(BM_Interpolate)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
