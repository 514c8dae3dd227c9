// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "kloospath/dft.hpp"
#include "kloospath/membership.hpp"
#include "kloospath/stochastic.hpp"

using namespace kloospath;

namespace {

void BM_ClassifyParallel(benchmark::State& state) {
  const auto p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(classify_prime(p, 1, PathKind::Plain));
}

void BM_ClassifySerial(benchmark::State& state) {
  const auto p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(classify_prime_serial(p, 1, PathKind::Plain));
}

std::vector<cplx> random_input(std::size_t n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  std::vector<cplx> x(n);
  for (auto& v : x) v = cplx(g(rng), g(rng));
  return x;
}

void BM_DftBluestein(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DftPlan plan(n);
  const auto x = random_input(n);
  for (auto _ : state) benchmark::DoNotOptimize(plan.forward(x));
}

void BM_DftNaive(benchmark::State& state) {
  const auto x = random_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dft_naive(x));
}

const PathFn kZero = [](double) { return cplx(0.0); };

void BM_MonteCarloParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mc_ball_probability(kZero, 0.5, 64, state.range(0), 1));
}

void BM_MonteCarloSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mc_ball_probability_serial(kZero, 0.5, 64, state.range(0), 1));
}

}  // namespace

BENCHMARK(BM_ClassifyParallel)->Arg(229)->Arg(557)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClassifySerial)->Arg(229)->Arg(557)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DftBluestein)->Arg(228)->Arg(556)->Arg(3570);
BENCHMARK(BM_DftNaive)->Arg(228)->Arg(556)->Arg(3570);
BENCHMARK(BM_MonteCarloParallel)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MonteCarloSerial)->Arg(2000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
