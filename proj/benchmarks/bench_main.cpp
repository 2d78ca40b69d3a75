#include <benchmark/benchmark.h>

#include "subcrit/catalog.hpp"
#include "subcrit/instances.hpp"
#include "subcrit/reduction.hpp"
#include "subcrit/sampler.hpp"
#include "subcrit/solver.hpp"

using namespace subcrit;

namespace {

void BM_CanonicalizeFormula(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Formula f = sample_formula(params_from_alpha(n, 3, 1.5, ModelKind::kFormula), 7);
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(f));
}
BENCHMARK(BM_CanonicalizeFormula)->Arg(6)->Arg(10)->Arg(14);

void BM_CanonicalizeK4Union(benchmark::State& state) {
  const Hypergraph k4 = complete_hypergraph(4, 2);
  const Hypergraph g = disjoint_union(disjoint_union(k4, k4), k4);
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(g));
}
BENCHMARK(BM_CanonicalizeK4Union);

void BM_SampleFormula(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const SamplerMode mode = state.range(1) ? SamplerMode::kSkip : SamplerMode::kCoupled;
  const ModelParams p = params_from_alpha(n, 3, 0.8, ModelKind::kFormula);
  Seed seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sample_formula(p, seed++, mode));
}
BENCHMARK(BM_SampleFormula)->Args({30, 0})->Args({30, 1})->Args({120, 1})->Args({1000, 1});

void BM_PureLiteralCore(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Formula f = sample_formula(params_from_alpha(n, 3, 1.0, ModelKind::kFormula), 3,
                                   SamplerMode::kSkip);
  for (auto _ : state) benchmark::DoNotOptimize(pure_literal_core(f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_PureLiteralCore)->Arg(100)->Arg(1000)->Arg(10000);

void BM_KCore(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Hypergraph g = sample_hypergraph(params_from_alpha(n, 2, 3.0, ModelKind::kHypergraph), 3,
                                         SamplerMode::kSkip);
  for (auto _ : state) benchmark::DoNotOptimize(k_core(g, 3));
}
BENCHMARK(BM_KCore)->Arg(1000)->Arg(10000);

void BM_EnumerateFull(benchmark::State& state) {
  const auto s = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_full(3, s));
}
BENCHMARK(BM_EnumerateFull)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_EnumerateDense(benchmark::State& state) {
  const auto s = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_k_dense(2, 3, s));
}
BENCHMARK(BM_EnumerateDense)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DecideSat(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const ModelParams p = params_from_alpha(n, 3, 1.0, ModelKind::kFormula);
  Seed seed = 11;
  for (auto _ : state) {
    const Formula f = sample_formula(p, seed++, SamplerMode::kSkip);
    try {
      benchmark::DoNotOptimize(decide_sat(f));
    } catch (const std::exception&) {
    }
  }
}
BENCHMARK(BM_DecideSat)->Arg(30)->Arg(200);

void BM_DecideColorable(benchmark::State& state) {
  const Hypergraph g = disjoint_union(complete_hypergraph(4, 2), complete_hypergraph(5, 2));
  for (auto _ : state) benchmark::DoNotOptimize(decide_colorable(g, 3));
}
BENCHMARK(BM_DecideColorable);

}  // namespace
BENCHMARK_MAIN();
