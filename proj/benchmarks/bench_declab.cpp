#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "acceptance.hpp"
#include "declab/homology.hpp"
#include "declab/kan.hpp"
#include "space.hpp"

using namespace declab;

static void BM_EnumerateMaps(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_maps(Ordinal(n), Ordinal(n)));
}
BENCHMARK(BM_EnumerateMaps)->DenseRange(2, 6, 2);

static void BM_SplitUniqueness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_split_uniqueness(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SplitUniqueness)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SimplexLevel(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto x = simplex(3);
    benchmark::DoNotOptimize(x.size(m));
  }
}
BENCHMARK(BM_SimplexLevel)->DenseRange(2, 5);

static void BM_HomYoneda(benchmark::State& state) {
  const auto x = boundary(3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hom(simplex(n), x));
}
BENCHMARK(BM_HomYoneda)->DenseRange(1, 4);

static void BM_TotalLevel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Total t(dec(boundary(2)));
    benchmark::DoNotOptimize(t.size(n));
  }
}
BENCHMARK(BM_TotalLevel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_CotensorLevel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Cotensor c(std::make_shared<const SSet>(boundary(3)), simplex(1));
    benchmark::DoNotOptimize(c.size(n));
  }
}
BENCHMARK(BM_CotensorLevel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_Snf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(5);
  MatrixZ m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<std::int64_t>(rng() % 19) - 9;
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_Snf)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

static void BM_Homology(benchmark::State& state) {
  const auto x = product(boundary(2), boundary(2)).sset();
  for (auto _ : state) benchmark::DoNotOptimize(homology(x, 2));
}
BENCHMARK(BM_Homology)->Unit(benchmark::kMillisecond);

static void BM_Check(benchmark::State& state, const char* space, int which) {
  const SSet x = cli::parse_space(space);
  for (auto _ : state) {
    switch (which) {
      case 0:
        benchmark::DoNotOptimize(check_two_routes(dec(x), 4));
        break;
      case 1:
        benchmark::DoNotOptimize(check_counit(x, 4));
        break;
      case 2:
        benchmark::DoNotOptimize(check_comparison(x, 3));
        break;
      default:
        benchmark::DoNotOptimize(check_unit_homology(x, 2));
    }
  }
}
BENCHMARK_CAPTURE(BM_Check, two_routes_boundary3, "boundary(3)", 0)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Check, counit_boundary3, "boundary(3)", 1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Check, comparison_square, "product(simplex(1), simplex(1))", 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Check, unit_homology_boundary3, "boundary(3)", 3)->Unit(benchmark::kMillisecond);

static void BM_Criterion(benchmark::State& state) {
  const int id = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cli::run_criterion(id));
}
BENCHMARK(BM_Criterion)->DenseRange(1, 8)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
