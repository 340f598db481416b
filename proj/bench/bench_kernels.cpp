// Serial reference versus the OpenMP path for the batch kernels.
// Argument 0 selects the policy: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "ospnil/borel.hpp"
#include "ospnil/diagrams.hpp"
#include "ospnil/kernels.hpp"

using namespace ospnil;

namespace {

ExecPolicy policy_of(const benchmark::State& state) {
  return state.range(0) == 0 ? ExecPolicy::Serial : ExecPolicy::Parallel;
}

void BM_LeqMatrix(benchmark::State& state) {
  const auto ds = enumerate(static_cast<int>(state.range(1)), static_cast<int>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::leq_matrix(ds, policy_of(state)));
  state.counters["diagrams"] = static_cast<double>(ds.size());
}

void BM_OracleBatch(benchmark::State& state) {
  const int m = static_cast<int>(state.range(1)), N = static_cast<int>(state.range(2));
  const auto ds = enumerate(m, N);
  const SuperSpace space(m, N);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::oracle_batch(ds, space, policy_of(state)));
  state.counters["diagrams"] = static_cast<double>(ds.size());
}

void BM_RealizeCombinations(benchmark::State& state) {
  const int m = static_cast<int>(state.range(1)), N = static_cast<int>(state.range(2));
  const SuperSpace space(m, N);
  const auto basis = odd_part_of_borel(flag_of_order(mixed_order(m, N), space), space);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::realize_combinations(space, basis, static_cast<int>(basis.size()), policy_of(state)));
  state.counters["basis"] = static_cast<double>(basis.size());
}

}  // namespace

BENCHMARK(BM_LeqMatrix)->ArgsProduct({{0, 1}, {13}, {12}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleBatch)->ArgsProduct({{0, 1}, {6}, {6}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RealizeCombinations)->ArgsProduct({{0, 1}, {4}, {4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
