#include <benchmark/benchmark.h>

#include "psop/root_solver.hpp"

namespace {

void BM_DurandKerner(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const psop::CharPoly p(std::vector<double>(n, 1.0));  // n-bonacci
  for (auto _ : state) benchmark::DoNotOptimize(psop::numeric_roots(p));
}
BENCHMARK(BM_DurandKerner)->Arg(2)->Arg(3)->Arg(4)->Arg(8)->Arg(16);

void BM_CubicClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(psop::cubic_roots(1.0, 1.0, 1.0));
}
BENCHMARK(BM_CubicClosedForm);

void BM_CubicNumeric(benchmark::State& state) {
  const psop::CharPoly p({1.0, 1.0, 1.0});
  for (auto _ : state) benchmark::DoNotOptimize(psop::numeric_roots(p));
}
BENCHMARK(BM_CubicNumeric);

}  // namespace
