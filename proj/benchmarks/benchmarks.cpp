#include <benchmark/benchmark.h>

#include "qx/advantage.hpp"
#include "qx/crossover.hpp"
#include "qx/expr.hpp"

namespace {

const char* const kTexts[] = {"n^2 log(n)", "exp((64/9)^(1/3) * n^(1/3) * log(n)^(2/3))", "n^2 / log(n)^2",
                              "sqrt(n) + log^2 n"};

void BM_Parse(benchmark::State& state) {
  const char* text = kTexts[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(qx::parse(text));
}
BENCHMARK(BM_Parse)->DenseRange(0, 3);

void BM_Eval(benchmark::State& state) {
  auto e = qx::parse(kTexts[1]);
  double x = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qx::eval_log10(e, x));
    x = x < 300 ? x * 1.01 : 3;
  }
}
BENCHMARK(BM_Eval);

void BM_Compare(benchmark::State& state) {
  auto f = qx::parse("n log(n) log(log(n))");
  auto g = qx::parse("n log(n)");
  for (auto _ : state) benchmark::DoNotOptimize(qx::asymptotic_compare(f, g));
}
BENCHMARK(BM_Compare);

void BM_Solve(benchmark::State& state) {
  const char* pairs[][2] = {{"n^3", "n"}, {"exp(n)", "n^3"}, {"n", "log(n)"}, {"n log(n)", "n"}};
  auto f = qx::parse(pairs[state.range(0)][0]);
  auto g = qx::parse(pairs[state.range(0)][1]);
  auto c = qx::LogMagnitude::from_log10(6);
  for (auto _ : state) benchmark::DoNotOptimize(qx::solve_threshold(f, g, c));
}
BENCHMARK(BM_Solve)->DenseRange(0, 3);

void BM_Grid(benchmark::State& state) {
  const auto& rt = qx::canonical_runtimes();
  auto c = qx::LogMagnitude::from_log10(6);
  for (auto _ : state) benchmark::DoNotOptimize(qx::threshold_grid(rt, rt, c));
}
BENCHMARK(BM_Grid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
