// Serial reference vs OpenMP kernels on the numeric oracle's hot paths.
#include <benchmark/benchmark.h>

#include "deo/kernels.hpp"
#include "deo/numeric_oracle.hpp"
#include "deo/parse.hpp"
#include "deo/suite.hpp"

namespace {

using deo::kernels::Execution;

const deo::ExpPoly& bench_f() {
  static const deo::ExpPoly f = deo::parse_expr("2*exp(t) + t^2*exp(3*t)");
  return f;
}

void BM_Sample(benchmark::State& state, Execution exec) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(deo::kernels::sample(bench_f(), -30.0L, 1.0L / 80, n, exec));
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_CentralDifference(benchmark::State& state, Execution exec) {
  const int n = static_cast<int>(state.range(0));
  auto v = deo::kernels::sample(bench_f(), -4.0L, 1.0L / 80, n);
  for (auto _ : state) benchmark::DoNotOptimize(deo::kernels::central_difference(v, 1.0L / 80, exec));
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_CrossCheck(benchmark::State& state, Execution exec) {
  deo::GridSpec g;
  for (auto _ : state)
    benchmark::DoNotOptimize(deo::cross_check(bench_f(), -2, 4, g, deo::default_t_samples(), 1e-5,
                                              deo::all_families(), exec));
}

void BM_Suite(benchmark::State& state, Execution exec) {
  auto corpus = deo::builtin_corpus();
  for (auto _ : state) benchmark::DoNotOptimize(deo::run_suite(corpus, {}, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Sample, serial, Execution::Serial)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK_CAPTURE(BM_Sample, parallel, Execution::Parallel)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK_CAPTURE(BM_CentralDifference, serial, Execution::Serial)->Arg(1 << 12)->Arg(1 << 18);
BENCHMARK_CAPTURE(BM_CentralDifference, parallel, Execution::Parallel)->Arg(1 << 12)->Arg(1 << 18);
BENCHMARK_CAPTURE(BM_CrossCheck, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CrossCheck, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
