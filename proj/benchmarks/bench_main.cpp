#include <benchmark/benchmark.h>

#include <random>

#include "goncurve/gonality_engine.hpp"

using namespace goncurve;

static RationalMatrix random_matrix(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> draw(-1000, 1000);
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Rational(draw(rng), 1 + std::abs(draw(rng)));
  return m;
}

static void ExactNullspace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RationalMatrix m = random_matrix(n - 2, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(exact_nullspace(m));
  state.SetComplexityN(n);
}
BENCHMARK(ExactNullspace)->DenseRange(8, 40, 8)->Complexity();

static void UpperBound(benchmark::State& state) {
  const auto family = state.range(0) ? Family::binary : Family::irreducible;
  const int g = static_cast<int>(state.range(1));
  CurveDocument d = random_curve(family, g, 7);
  GonalityConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(upper_bound(d.curve, config));
}
BENCHMARK(UpperBound)->ArgsProduct({{0, 1}, {2, 4, 6, 8, 10}})->Unit(benchmark::kMillisecond);

static void LowerBound(benchmark::State& state) {
  const auto family = state.range(0) ? Family::binary : Family::irreducible;
  CurveDocument d = random_curve(family, static_cast<int>(state.range(1)), 7);
  GonalityConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(lower_bound(d.curve, config));
}
BENCHMARK(LowerBound)->ArgsProduct({{0, 1}, {3, 5, 7}})->Unit(benchmark::kMillisecond);

static void NewtonAntisymmetric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int dim = rank2_codimension(n, n, true) + 1;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> draw(-9, 9);
  std::vector<RationalMatrix> basis;
  for (int b = 0; b < dim; ++b) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        m(i, j) = draw(rng);
        m(j, i) = -m(i, j);
      }
    basis.push_back(m);
  }
  auto space = LinearMatrixSpace::exact(n, n, true, basis);
  SolverConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(find_rank_le2(space, config));
}
BENCHMARK(NewtonAntisymmetric)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
