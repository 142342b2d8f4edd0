#include <benchmark/benchmark.h>

#include <random>

#include "parembed/batch.hpp"
#include "parembed/smith.hpp"
#include "parembed/surgery.hpp"

using namespace parembed;

namespace {

std::vector<SmallMatrix> random_matrices(std::size_t count) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> entry(-9, 9);
  std::vector<SmallMatrix> ms(count);
  for (auto& m : ms) {
    m.rows = 4;
    m.cols = 6;
    m.entries.resize(24);
    for (auto& x : m.entries) x = entry(rng);
  }
  return ms;
}

std::vector<ManifoldDescriptor> constructed(std::size_t count) {
  std::vector<ManifoldDescriptor> ms;
  const auto p = parse_presentation("<a, b | a^2, b^3, a b a b a b a b a b>");
  for (std::size_t i = 0; i < count; ++i) ms.push_back(construct_M(p, 6 + 2 * static_cast<int>(i % 3)).descriptor);
  return ms;
}

bool agrees(std::span<const std::int64_t> a) { return invariant_factors_int64(2, 3, a).has_value(); }

void BM_InvariantFactorsSerial(benchmark::State& state) {
  const auto ms = random_matrices(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors_serial(ms));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_InvariantFactorsParallel(benchmark::State& state) {
  const auto ms = random_matrices(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_factors_parallel(ms));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DecideSerial(benchmark::State& state) {
  const auto ms = constructed(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decide_serial(DecisionKind::cr, ms));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DecideParallel(benchmark::State& state) {
  const auto ms = constructed(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decide_parallel(DecisionKind::cr, ms));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_small_matrices_serial(2, 3, -3, 3, agrees));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(small_matrix_count(2, 3, -3, 3)));
}

void BM_SweepParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_small_matrices(2, 3, -3, 3, agrees));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(small_matrix_count(2, 3, -3, 3)));
}

}  // namespace

BENCHMARK(BM_InvariantFactorsSerial)->Arg(1000)->Arg(10000);
BENCHMARK(BM_InvariantFactorsParallel)->Arg(1000)->Arg(10000);
BENCHMARK(BM_DecideSerial)->Arg(300);
BENCHMARK(BM_DecideParallel)->Arg(300);
BENCHMARK(BM_SweepSerial);
BENCHMARK(BM_SweepParallel);

BENCHMARK_MAIN();
