#include <benchmark/benchmark.h>

#include "pauli/constructions.hpp"
#include "pauli/periodic.hpp"
#include "pauli/steppairs.hpp"
#include "pauli/verify.hpp"

using namespace pauli;

namespace {

const StepPair& example() {
  static const StepPair p = family_sol3({2.0, kPi / 3.0, 2.0 * kPi / 3.0, kPi / 3.0});
  return p;
}

void BM_Autocorrelation(benchmark::State& state) {
  std::vector<complex> v(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::polar(1.0 + 0.1 * i, 0.7 * i);
  const StepVector b(v);
  for (auto _ : state) benchmark::DoNotOptimize(autocorrelation(b));
}
BENCHMARK(BM_Autocorrelation)->Arg(4)->Arg(64)->Arg(1024);

void BM_VerifyStepPair(benchmark::State& state) {
  const FunctionPair pair(example().left, example().right);
  for (auto _ : state) benchmark::DoNotOptimize(verify_pair(pair));
}
BENCHMARK(BM_VerifyStepPair)->Unit(benchmark::kMillisecond);

void BM_SolvePartners(benchmark::State& state) {
  SolverOptions opt;
  opt.grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_partners(example().left, opt));
}
BENCHMARK(BM_SolvePartners)->Arg(90)->Arg(360)->Unit(benchmark::kMillisecond);

void BM_FourierSum(benchmark::State& state) {
  const CompositeRule rule(0.0, 1.0, static_cast<int>(state.range(0)));
  std::vector<complex> values(rule.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = std::polar(1.0, rule.nodes()[i] * rule.nodes()[i]);
  const Grid yg = default_frequency_grid();
  for (auto _ : state) benchmark::DoNotOptimize(fourier_sum(rule, values, yg));
}
BENCHMARK(BM_FourierSum)->Arg(16)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_InterleaveSignal(benchmark::State& state) {
  const auto line = uzd_line(3);
  const Grid xg = interleave_grid(line[0].cutoff(), 16);
  const Grid yg = default_frequency_grid();
  for (auto _ : state) benchmark::DoNotOptimize(interleave_signal(line[0], xg, yg));
}
BENCHMARK(BM_InterleaveSignal)->Unit(benchmark::kMillisecond);

void BM_PeriodicCoefficients(benchmark::State& state) {
  const auto set = uzd_periodic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(periodic_coefficients(set.back(), 128));
}
BENCHMARK(BM_PeriodicCoefficients)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
