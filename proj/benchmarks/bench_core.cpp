#include <benchmark/benchmark.h>

#include <deltaorder/analytic.hpp>
#include <deltaorder/construct.hpp>
#include <deltaorder/newton.hpp>
#include <deltaorder/recurrence.hpp>
#include <deltaorder/series.hpp>

#include "fixtures.hpp"

using namespace deltaorder;

static void BM_Compose(benchmark::State& state) {
  const auto l3 = fixtures::equation(fixtures::kL3);
  const auto l5 = fixtures::equation(fixtures::kL5);
  for (auto _ : state) benchmark::DoNotOptimize(compose_operators(l3, l5));
}
BENCHMARK(BM_Compose);

static void BM_AnalyzeNewton(benchmark::State& state) {
  const auto l8 = fixtures::l8();
  for (auto _ : state) benchmark::DoNotOptimize(analyze_newton(l8));
}
BENCHMARK(BM_AnalyzeNewton);

static void BM_DeriveRecurrence(benchmark::State& state) {
  const auto l8 = fixtures::l8();
  for (auto _ : state) benchmark::DoNotOptimize(derive_recurrence(l8));
}
BENCHMARK(BM_DeriveRecurrence);

static void BM_SolveSeries(benchmark::State& state) {
  const auto rec = template_recurrence(parse_equation(fixtures::kThreeQuartersTemplate));
  for (auto _ : state) benchmark::DoNotOptimize(solve_series(rec, static_cast<int>(state.range(0))));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveSeries)->RangeMultiplier(2)->Range(100, 800)->Complexity();

static void BM_EstimateChi(benchmark::State& state) {
  const auto a = fixtures::alpha_stream(500);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_chi(a));
}
BENCHMARK(BM_EstimateChi);

static void BM_EvalSeries(benchmark::State& state) {
  const SeriesEvaluator f(make_series(fixtures::alpha_stream(600)));
  const double r = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(f({0.0, r}));
}
BENCHMARK(BM_EvalSeries)->Arg(50)->Arg(200)->Arg(800);

static void BM_MaxModulus(benchmark::State& state) {
  const SeriesEvaluator f(make_series(fixtures::quarter_stream(1500)));
  for (auto _ : state) benchmark::DoNotOptimize(max_modulus(f, 400.0));
}
BENCHMARK(BM_MaxModulus);

static void BM_Construct(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip_check(construct_equation(1, p, 200)));
}
BENCHMARK(BM_Construct)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
