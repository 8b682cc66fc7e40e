// Parallel oracle kernels against their serial references.

#include <benchmark/benchmark.h>

#include "tscale/validation.hpp"

using namespace tscale;

namespace {

VariationalProblem worked_example() {
  return {ProblemKind::xlogx_shifted, TimeScale::uniform(0, 5, 5), 25, ScalarFunction::affine(2, 1)};
}

// 8 points, C(29, 6) = 475020 candidates.
VariationalProblem eight_points() {
  return {ProblemKind::power_weighted, TimeScale::uniform(0, 7, 7), 30, ScalarFunction::exp(), 2};
}

Execution mode(const benchmark::State& state) {
  return state.range(0) ? Execution::parallel : Execution::serial;
}

void label(benchmark::State& state, std::uint64_t candidates) {
  state.SetLabel(state.range(0) ? "parallel" : "serial");
  state.SetItemsProcessed(static_cast<std::int64_t>(candidates * state.iterations()));
}

void BM_ExhaustiveWorkedExample(benchmark::State& state) {
  const auto p = worked_example();
  std::uint64_t n = 0;
  for (auto _ : state) {
    const auto r = exhaustive_verify(p, 1, mode(state));
    n = r.candidates_evaluated;
    benchmark::DoNotOptimize(r.best_value_found);
  }
  label(state, n);
}

void BM_ExhaustiveEightPoints(benchmark::State& state) {
  const auto p = eight_points();
  std::uint64_t n = 0;
  for (auto _ : state) {
    const auto r = exhaustive_verify(p, 1, mode(state));
    n = r.candidates_evaluated;
    benchmark::DoNotOptimize(r.best_value_found);
  }
  label(state, n);
}

void BM_Random(benchmark::State& state) {
  const auto p = worked_example();
  const auto samples = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) {
    const auto r = random_verify(p, samples, 1, mode(state));
    benchmark::DoNotOptimize(r.best_value_found);
  }
  label(state, samples);
}

}  // namespace

BENCHMARK(BM_ExhaustiveWorkedExample)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveEightPoints)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Random)->Args({0, 100000})->Args({1, 100000})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
