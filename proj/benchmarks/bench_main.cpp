#include <benchmark/benchmark.h>

#include "bayesmc/entropy_rate.hpp"
#include "bayesmc/inference.hpp"
#include "bayesmc/model_comparison.hpp"
#include "bayesmc/processes.hpp"
#include "bayesmc/special_functions.hpp"

using namespace bayesmc;

static void BM_LogGamma(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_gamma(x));
    x = x < 1e6 ? x * 1.7 : 0.37;
  }
}
BENCHMARK(BM_LogGamma);

static void BM_Digamma(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(digamma(x));
    x = x < 1e6 ? x * 1.7 : 0.37;
  }
}
BENCHMARK(BM_Digamma);

static void BM_RegIncBeta(benchmark::State& state) {
  const BetaParams p(static_cast<double>(state.range(0)), static_cast<double>(state.range(0)) * 2);
  for (auto _ : state) benchmark::DoNotOptimize(reg_inc_beta(p, 0.3));
}
BENCHMARK(BM_RegIncBeta)->Arg(2)->Arg(50)->Arg(5000);

static void BM_InvRegIncBeta(benchmark::State& state) {
  const BetaParams p(static_cast<double>(state.range(0)), static_cast<double>(state.range(0)) * 2);
  for (auto _ : state) benchmark::DoNotOptimize(inv_reg_inc_beta(p, 0.975));
}
BENCHMARK(BM_InvRegIncBeta)->Arg(2)->Arg(50)->Arg(5000);

static void BM_AverageCounts(benchmark::State& state) {
  const LabeledHMM hmm = even_process();
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(average_counts(hmm, 100000, k));
}
BENCHMARK(BM_AverageCounts)->DenseRange(2, 12, 5);

static void BM_LogEvidence(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const CountTable counts = average_counts(sns(), 100000, k);
  const HyperTable hyper = uniform_hyper(k, 2, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(log_evidence(counts, hyper));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(counts.values().size()));
}
BENCHMARK(BM_LogEvidence)->DenseRange(2, 12, 5);

static void BM_ExpectedEnergy(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const QDistribution q = q_from(average_counts(sns(), 100000, k), uniform_hyper(k, 2, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(expected_energy(q));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(q.dist.conditional.size()));
}
BENCHMARK(BM_ExpectedEnergy)->DenseRange(2, 12, 5);

static void BM_OrderComparison(benchmark::State& state) {
  std::map<int, double> ev;
  for (int k = 1; k <= 6; ++k) ev[k] = log_evidence(average_counts(even_process(), 10000, k), uniform_hyper(k, 2, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(compare_penalized(ev, 2));
}
BENCHMARK(BM_OrderComparison);

BENCHMARK_MAIN();
