#include <benchmark/benchmark.h>

#include "udval/enumeration.hpp"
#include "udval/experiments.hpp"
#include "udval/values.hpp"

using namespace udval;

namespace {

IncompleteGame<double> bench_game(int players, std::uint64_t seed) {
  return random_game(sample_system(players, SampleMode::ic_biased, seed), seed);
}

void BM_zeta_transform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IncompleteGame<double> g = random_game(SetSystem::power_set(n), 1);
  const Dividends<double> d(n, g.values());
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_values(d));
  }
  state.SetComplexityN(1 << n);
}
BENCHMARK(BM_zeta_transform)->Arg(8)->Arg(12)->Arg(16)->Complexity(benchmark::oNLogN);

void BM_shapley(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CompleteGame<double> v(n, random_game(SetSystem::power_set(n), 2).values());
  for (auto _ : state) {
    benchmark::DoNotOptimize(shapley(v));
  }
}
BENCHMARK(BM_shapley)->Arg(8)->Arg(12)->Arg(16);

void BM_closure_partition(benchmark::State& state) {
  const SetSystem k = sample_system(static_cast<int>(state.range(0)), SampleMode::uniform, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ClosurePartition::compute(k));
  }
}
BENCHMARK(BM_closure_partition)->Arg(4)->Arg(6)->Arg(8);

void BM_is_intersection_closed(benchmark::State& state) {
  const SetSystem k = sample_system(static_cast<int>(state.range(0)), SampleMode::uniform, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_intersection_closed(k));
  }
}
BENCHMARK(BM_is_intersection_closed)->Arg(5)->Arg(6)->Arg(8);

void BM_ud_dividends(benchmark::State& state) {
  const IncompleteGame<double> g = bench_game(static_cast<int>(state.range(0)), 5);
  const ClosurePartition partition = ClosurePartition::compute(g.system());
  for (auto _ : state) {
    benchmark::DoNotOptimize(ud_dividends(g, partition));
  }
}
BENCHMARK(BM_ud_dividends)->Arg(4)->Arg(6)->Arg(8);

void BM_three_values(benchmark::State& state) {
  const IncompleteGame<double> g = bench_game(static_cast<int>(state.range(0)), 6);
  const ClosurePartition partition = ClosurePartition::compute(g.system());
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_value(g, ValueKind::r, partition));
    benchmark::DoNotOptimize(compute_value(g, ValueKind::ud, partition));
    benchmark::DoNotOptimize(compute_value(g, ValueKind::ic, partition));
  }
}
BENCHMARK(BM_three_values)->Arg(3)->Arg(5);

void BM_uniqueness_decision(benchmark::State& state) {
  // uniform systems are almost never intersection-closed at 5 players, so
  // this exercises the fraction-free rank path
  std::vector<SetSystem> systems;
  for (std::uint64_t s = 0; s < 16; ++s) {
    systems.push_back(sample_system(static_cast<int>(state.range(0)), SampleMode::uniform, s));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_ud_uniqueness(systems[i]));
    i = (i + 1) % systems.size();
  }
}
BENCHMARK(BM_uniqueness_decision)->Arg(4)->Arg(5);

void BM_sample_p_extension(benchmark::State& state) {
  const SetSystem k = sample_system(4, SampleMode::ic_biased, 7);
  IncompleteGame<double> g = random_game(k, 7);
  // force extendability by rebuilding from nonnegative surpluses
  std::vector<double> deltas(k.size(), 0.0);
  for (std::size_t i = 1; i < deltas.size(); ++i) deltas[i] = g.values()[i];
  g = game_from_delta_surpluses(k, deltas);
  const ClosurePartition partition = ClosurePartition::compute(k);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_p_extension(g, partition, seed++));
  }
}
BENCHMARK(BM_sample_p_extension);

void BM_census_exhaustive_n3(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(census_exhaustive(3));
  }
}
BENCHMARK(BM_census_exhaustive_n3);

}  // namespace

BENCHMARK_MAIN();
