#include <benchmark/benchmark.h>

#include "psop/pseudo_expr.hpp"

namespace {

constexpr const char* kText = "(2 / 3 \\ 1) * J^3 _ rot(1,5) ~ (1 = I)^-2";

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(psop::expr::parse(kText));
}
BENCHMARK(BM_Parse);

void BM_ParseEvaluate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(psop::expr::evaluate(*psop::expr::parse(kText)));
}
BENCHMARK(BM_ParseEvaluate);

void BM_FormatRoundTrip(benchmark::State& state) {
  const auto tree = psop::expr::parse(kText);
  for (auto _ : state) benchmark::DoNotOptimize(psop::expr::parse(psop::expr::format(*tree)));
}
BENCHMARK(BM_FormatRoundTrip);

}  // namespace
