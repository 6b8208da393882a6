#include <benchmark/benchmark.h>

#include "defsem/defense_semantics.hpp"
#include "defsem/oracle.hpp"
#include "defsem/verify.hpp"

namespace {

using namespace defsem;

std::vector<ArgumentGraph> random_batch(std::size_t n, double p, std::size_t count) {
  std::vector<ArgumentGraph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(oracle::random_graph(n, p, 1000 + i));
  return out;
}

void complete_labelling(benchmark::State& state) {
  const auto batch = random_batch(static_cast<std::size_t>(state.range(0)), 0.3, 32);
  for (auto _ : state) {
    for (const auto& g : batch) benchmark::DoNotOptimize(complete_extensions(g));
  }
}

void complete_brute_force(benchmark::State& state) {
  const auto batch = random_batch(static_cast<std::size_t>(state.range(0)), 0.3, 32);
  for (auto _ : state) {
    for (const auto& g : batch) {
      benchmark::DoNotOptimize(oracle::brute_force_extensions(g, Semantics::complete));
    }
  }
}

void defense_labelling(benchmark::State& state) {
  std::vector<DefenseGraph> batch;
  for (const auto& g : random_batch(static_cast<std::size_t>(state.range(0)), 0.3, 32)) {
    batch.push_back(build_defense_graph(g));
  }
  for (auto _ : state) {
    for (const auto& dg : batch) benchmark::DoNotOptimize(defense_extensions(dg, Semantics::complete));
  }
}

void defense_brute_force(benchmark::State& state) {
  std::vector<DefenseGraph> batch;
  for (const auto& g : random_batch(static_cast<std::size_t>(state.range(0)), 0.3, 32)) {
    batch.push_back(build_defense_graph(g));
  }
  for (auto _ : state) {
    for (const auto& dg : batch) {
      benchmark::DoNotOptimize(oracle::brute_force_defense_extensions(dg, Semantics::complete, 24));
    }
  }
}

void sweep_corpus(benchmark::State& state, Execution exec) {
  auto corpus = oracle::enumerate_all_graphs(3);
  for (auto& g : random_batch(6, 0.3, 200)) corpus.push_back(std::move(g));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(corpus, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}

}  // namespace

BENCHMARK(complete_labelling)->DenseRange(6, 12, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(complete_brute_force)->DenseRange(6, 12, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(defense_labelling)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK(defense_brute_force)->DenseRange(3, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(sweep_corpus, serial, Execution::serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sweep_corpus, parallel, Execution::parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
