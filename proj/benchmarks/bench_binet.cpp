#include <benchmark/benchmark.h>

#include "psop/binet.hpp"

namespace {

const psop::Recurrence& tribonacci() {
  static const psop::Recurrence rec({1.0, 1.0, 1.0}, {0.0, 1.0, 1.0});
  return rec;
}

void BM_Binet3(benchmark::State& state) {
  const auto k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(psop::binet3(tribonacci(), k));
}
BENCHMARK(BM_Binet3)->Arg(10)->Arg(50)->Arg(1000);

void BM_ClosedTermPrepared(benchmark::State& state) {
  const auto form = psop::solve_weights(tribonacci());
  const auto k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(psop::closed_term(form, k));
}
BENCHMARK(BM_ClosedTermPrepared)->Arg(10)->Arg(50)->Arg(1000);

// Exact iteration grows with k; the closed form does not.
void BM_IterateExact(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0)) + 1;
  for (auto _ : state) benchmark::DoNotOptimize(psop::iterate(tribonacci(), count));
}
BENCHMARK(BM_IterateExact)->Arg(10)->Arg(50)->Arg(1000);

}  // namespace
