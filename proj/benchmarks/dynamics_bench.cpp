#include <benchmark/benchmark.h>

#include "hoising/cut_dynamics.hpp"
#include "hoising/nae_dynamics.hpp"
#include "hoising/oracle.hpp"
#include "hoising/polynomial.hpp"
#include "hoising/sde.hpp"

namespace {

using namespace hoising;

std::vector<double> phases(std::size_t n) {
  Rng rng(1);
  return random_phases(n, rng).values();
}

void BM_NaeDrift(benchmark::State& state) {
  const auto vars = static_cast<std::size_t>(state.range(0));
  const auto p = generate_planted_nae(vars, vars * 5 / 2, 4, 1);
  const NaeSystem sys(p.instance, {});
  const auto phi = phases(vars);
  std::vector<double> out(vars);
  for (auto _ : state) {
    sys.drift(phi, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.instance.num_clauses()));
}
BENCHMARK(BM_NaeDrift)->Arg(20)->Arg(200)->Arg(2000);

void BM_NaeEnergy(benchmark::State& state) {
  const auto p = generate_planted_nae(20, 50, 4, 1);
  const NaeSystem sys(p.instance, {});
  const auto phi = phases(20);
  for (auto _ : state) benchmark::DoNotOptimize(sys.energy(phi));
}
BENCHMARK(BM_NaeEnergy);

void BM_CutDrift(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto g = generate_random_hypergraph(10, 20, 2, 4, 1);
  const CutSystem sys(g, k, cut_constants_for(k));
  const auto phi = phases(10);
  std::vector<double> out(10);
  for (auto _ : state) {
    sys.drift(phi, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_CutDrift)->DenseRange(2, 4);

void BM_CutEnergy(benchmark::State& state) {
  const auto g = generate_random_hypergraph(10, 20, 2, 4, 1);
  const CutSystem sys(g, 3, cut_constants_for(3));
  const auto phi = phases(10);
  for (auto _ : state) benchmark::DoNotOptimize(sys.energy(phi));
}
BENCHMARK(BM_CutEnergy);

void BM_NoisyStep(benchmark::State& state) {
  const auto p = generate_planted_nae(20, 50, 4, 1);
  const auto model = make_nae_model(p.instance, {});
  const DriftFn drift = [&](std::span<const double> x, std::span<double> out) { model->drift(x, out); };
  Rng rng(2);
  auto s = random_phases(20, rng);
  for (auto _ : state) s = step(s, drift, 1e-3, 3.0, rng);
  benchmark::DoNotOptimize(s.values().data());
}
BENCHMARK(BM_NoisyStep);

void BM_ExpandClause(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  Clause clause;
  for (std::size_t i = 0; i < k; ++i) clause.push_back({i, i % 3 == 0 ? -1 : 1});
  for (auto _ : state) benchmark::DoNotOptimize(expand_clause(clause));
}
BENCHMARK(BM_ExpandClause)->DenseRange(2, 8, 2);

void BM_BruteForceCut(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto g = generate_random_hypergraph(10, 20, 2, 4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_maxkcut(g, k));
}
BENCHMARK(BM_BruteForceCut)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

// The packaged benchmark_main archive carries LTO bytecode from another gcc.
BENCHMARK_MAIN();
