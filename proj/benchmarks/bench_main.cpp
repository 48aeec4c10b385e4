#include <benchmark/benchmark.h>

#include <vector>

#include "aggfn/aggfn.hpp"

namespace {

using namespace aggfn;

FuzzyMeasure bench_measure(int n) {
  Rng rng(2024);
  std::uint32_t full = (1u << n) - 1u;
  std::vector<double> v(size_t{1} << n);
  for (std::uint32_t mask = 1; mask < full; ++mask) v[mask] = rng.unit();
  v[0] = 0.0;
  v[full] = 1.0;
  for (std::uint32_t mask = 1; mask < full; ++mask)
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) v[mask] = std::max(v[mask], v[mask & ~(1u << i)]);
  return FuzzyMeasure::validate(std::move(v));
}

void BM_choquet(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto mu = bench_measure(n);
  Rng rng(7);
  std::vector<double> x = rng.vector(n, 0.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(choquet(x, mu));
}
BENCHMARK(BM_choquet)->Arg(3)->Arg(6)->Arg(10)->Arg(16);

void BM_sugeno(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto mu = bench_measure(n);
  Rng rng(7);
  std::vector<double> x = rng.vector(n, 0.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(sugeno(x, mu));
}
BENCHMARK(BM_sugeno)->Arg(3)->Arg(6)->Arg(10)->Arg(16);

void BM_sugeno_disjunctive(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto mu = bench_measure(n);
  Rng rng(7);
  std::vector<double> x = rng.vector(n, 0.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(sugeno_disjunctive(x, mu));
}
BENCHMARK(BM_sugeno_disjunctive)->Arg(3)->Arg(6)->Arg(10)->Arg(16);

void BM_quasi_arithmetic_mean(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(7);
  std::vector<double> x = rng.vector(n, 0.1, 10.0);
  Generator f = Generator::log();
  for (auto _ : state) benchmark::DoNotOptimize(quasi_arithmetic_mean(x, f));
}
BENCHMARK(BM_quasi_arithmetic_mean)->Arg(4)->Arg(64)->Arg(1024);

void BM_lagrangian_mean(benchmark::State& state) {
  Generator f = Generator::reciprocal();
  for (auto _ : state) benchmark::DoNotOptimize(lagrangian_mean(0.7, 8.3, f));
}
BENCHMARK(BM_lagrangian_mean);

void BM_measure_validate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto mu = bench_measure(n);
  std::vector<double> raw(mu.values().begin(), mu.values().end());
  for (auto _ : state) {
    auto copy = raw;
    benchmark::DoNotOptimize(FuzzyMeasure::validate(std::move(copy)));
  }
}
BENCHMARK(BM_measure_validate)->Arg(6)->Arg(10)->Arg(16);

void BM_classify_measure(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto mu = bench_measure(n);
  for (auto _ : state) benchmark::DoNotOptimize(classify_measure(mu));
}
BENCHMARK(BM_classify_measure)->Arg(4)->Arg(8)->Arg(10);

void BM_check_symmetry(benchmark::State& state) {
  Aggregator am;
  am.kind = "arithmetic";
  am.fn = [](std::span<const double> x) { return arithmetic_mean(x); };
  Sampler s;
  s.seed = 42;
  s.samples = 200;
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_symmetry(am, n, s));
}
BENCHMARK(BM_check_symmetry)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
