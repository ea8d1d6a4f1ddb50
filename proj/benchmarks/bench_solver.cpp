#include <benchmark/benchmark.h>

#include <random>

#include "mixroots/families.hpp"
#include "mixroots/solver.hpp"
#include "mixroots/univariate.hpp"

using namespace mixroots;

static void BM_SolveRhie3(benchmark::State& state) {
  const MixedPolynomial f = rhie3();
  for (auto _ : state) benchmark::DoNotOptimize(solve_all(f));
}
BENCHMARK(BM_SolveRhie3)->Unit(benchmark::kMillisecond);

static void BM_SolveExample(benchmark::State& state) {
  const MixedPolynomial f = example_f();
  for (auto _ : state) benchmark::DoNotOptimize(solve_all(f));
}
BENCHMARK(BM_SolveExample)->Unit(benchmark::kMillisecond);

static void BM_SolvePhi(benchmark::State& state) {
  const MixedPolynomial f = phi_t({rhie3(), static_cast<int>(state.range(0)), 3e-5, BifurcationVariant::phi});
  for (auto _ : state) benchmark::DoNotOptimize(solve_all(f));
}
BENCHMARK(BM_SolvePhi)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Resultant(benchmark::State& state) {
  const BivariatePair pair = bivariate_pair(example_f());
  for (auto _ : state) benchmark::DoNotOptimize(sylvester_resultant(pair.F, pair.G));
}
BENCHMARK(BM_Resultant)->Unit(benchmark::kMicrosecond);

static void BM_Aberth(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> c(state.range(0) + 1);
  for (auto& x : c) x = {u(rng), u(rng)};
  const UnivariatePolynomial p(c);
  for (auto _ : state) benchmark::DoNotOptimize(univariate_roots(p));
}
BENCHMARK(BM_Aberth)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
