#include <random>

#include <benchmark/benchmark.h>

#include "fatpoints/fatpoints.hpp"

namespace fp = fatpoints;

namespace {

void BM_FullDimSweep(benchmark::State& state) {
  const auto systems = fp::canonical_systems(state.range(0), 8, 4);
  for (auto _ : state) {
    fp::Int total = 0;
    for (const auto& s : systems) total += fp::full_dim(s).dim;
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * systems.size()));
}
BENCHMARK(BM_FullDimSweep)->Arg(8)->Arg(16);

void BM_FullDimLargeDegree(benchmark::State& state) {
  const fp::SystemP3 s{state.range(0), {state.range(0) - 1, state.range(0) - 1, state.range(0) - 2, 5, 4, 3, 2, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(fp::full_dim(s));
}
BENCHMARK(BM_FullDimLargeDegree)->Arg(50)->Arg(500)->Arg(5000);

void BM_OracleP3(benchmark::State& state) {
  const fp::Int d = state.range(0);
  const fp::SystemP3 s{d, {d / 2 + 1, d / 2, d / 2, d / 3, d / 3, 2, 1, 1}};
  fp::OracleConfig cfg;
  cfg.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(fp::oracle_dim_p3(s, cfg));
  state.counters["cols"] = static_cast<double>(fp::condition_shape_p3(s).cols);
}
BENCHMARK(BM_OracleP3)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_RankModP(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  const std::uint64_t p = 2305843009213693951ull;
  fp::ConditionMatrix m{n, n, p, {}};
  m.entries.resize(n * n);
  for (auto& x : m.entries) x = rng() % p;
  for (auto _ : state) benchmark::DoNotOptimize(fp::rank_mod_p(m));
}
BENCHMARK(BM_RankModP)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_EnumerateMinusOne(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fp::enumerate_minus_one(8, state.range(0)));
}
BENCHMARK(BM_EnumerateMinusOne)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
