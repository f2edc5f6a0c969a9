// Naive vs fast (serial and OpenMP) vs branch and bound, plus the cut
// spectrum kernel against its serial reference.
#include <benchmark/benchmark.h>

#include "rna/solver.hpp"

namespace {

using namespace rna;

// P(n,3) for n = range(0); order 2n.
Graph petersen(const benchmark::State& state) {
  return generalized_petersen(static_cast<int>(state.range(0)), 3);
}

SolverOptions exhaustive(int threads) {
  SolverOptions o;
  o.early_exit = false;
  o.threads = threads;
  o.max_order = 40;
  return o;
}

void BM_Naive(benchmark::State& state) {
  const Graph g = petersen(state);
  const SolverOptions o = exhaustive(1);
  for (auto _ : state) benchmark::DoNotOptimize(rna_naive(g, o).value);
}

void BM_FastSerial(benchmark::State& state) {
  const Graph g = petersen(state);
  const SolverOptions o = exhaustive(1);
  for (auto _ : state) benchmark::DoNotOptimize(rna_fast(g, o).value);
}

void BM_FastParallel(benchmark::State& state) {
  const Graph g = petersen(state);
  const SolverOptions o = exhaustive(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(rna_fast(g, o).value);
}

void BM_BranchBound(benchmark::State& state) {
  const Graph g = petersen(state);
  for (auto _ : state) benchmark::DoNotOptimize(rna_branch_bound(g).value);
}

void BM_SpectrumReference(benchmark::State& state) {
  const Graph g = petersen(state);
  for (auto _ : state) benchmark::DoNotOptimize(balanced_cut_spectrum_reference(g).size());
}

void BM_SpectrumParallel(benchmark::State& state) {
  const Graph g = petersen(state);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(balanced_cut_spectrum(g, threads).size());
}

}  // namespace

BENCHMARK(BM_Naive)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FastSerial)->DenseRange(8, 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FastParallel)->ArgsProduct({{10, 11, 12}, {2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BranchBound)->DenseRange(8, 12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumReference)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumParallel)->ArgsProduct({{8, 9, 10, 11}, {2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
