#include <benchmark/benchmark.h>

#include "markovwz/catalog.hpp"
#include "markovwz/markov.hpp"

using namespace markovwz;

namespace {

markov::QParams sample() {
  return {Rational::parse("1/3"), Rational::parse("1/5"), Rational::parse("1/7"), Rational::parse("1/11"),
          Rational::parse("1/2")};
}

void BM_EvaluateApery(benchmark::State& state) {
  const auto e = catalog::entry_apery();
  const auto n = static_cast<index_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catalog::evaluate(e, n, 0));
}
BENCHMARK(BM_EvaluateApery)->Arg(25)->Arg(50)->Arg(100);

void BM_TermsNeeded(benchmark::State& state) {
  const auto e = catalog::entry_ratio27_zeta3();
  const auto digits = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(catalog::terms_needed(e, digits));
}
BENCHMARK(BM_TermsNeeded)->Arg(20)->Arg(50);

void BM_EvaluateDirectZeta2(benchmark::State& state) {
  const auto e = catalog::entry_direct(catalog::DirectKind::zeta2);
  for (auto _ : state) benchmark::DoNotOptimize(catalog::evaluate(e, 200, 0));
}
BENCHMARK(BM_EvaluateDirectZeta2);

void BM_PairGrid(benchmark::State& state) {
  const markov::Markov3Phi2 m(sample());
  const auto pair = m.pair();
  const auto n = static_cast<index_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(markov::check_pair_grid(pair, n, n));
}
BENCHMARK(BM_PairGrid)->Arg(10)->Arg(20);

void BM_SolveU1(benchmark::State& state) {
  const markov::Markov3Phi2 m(sample());
  const auto ext = m.extension();
  for (auto _ : state) {
    benchmark::DoNotOptimize(markov::solve_multipliers_stepwise(ext, markov::MultiplierForm::u1, 10, 7));
  }
}
BENCHMARK(BM_SolveU1);

void BM_SolveU2(benchmark::State& state) {
  const auto ext = markov::hg_extension_4f3(1, 0, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(markov::solve_multipliers_stepwise(ext, markov::MultiplierForm::u2, 10, 9));
  }
}
BENCHMARK(BM_SolveU2);

}  // namespace

BENCHMARK_MAIN();
