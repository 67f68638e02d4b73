// Throughput of the enumerator and of the frontier bookkeeping it relies on.

#include <benchmark/benchmark.h>

#include <random>

#include "paretoenum/enumerator.hpp"
#include "paretoenum/oracle.hpp"
#include "paretoenum/reference.hpp"

namespace {

using namespace paretoenum;

// args: arity, bound per dimension, target front size
void BM_Enumerate(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const SearchSpace space(std::vector<Coord>(k, static_cast<Coord>(state.range(1))));
  const PointSet gens =
      random_antichain({space, static_cast<std::size_t>(state.range(2)), 42});
  std::uint64_t calls = 0;
  for (auto _ : state) {
    ConeUnionOracle oracle(k, gens);
    auto result = enumerate(space, oracle);
    calls = result.stats.total_calls;
    benchmark::DoNotOptimize(result);
  }
  state.counters["p"] = static_cast<double>(gens.size());
  state.counters["calls"] = static_cast<double>(calls);
}
BENCHMARK(BM_Enumerate)
    ->Args({2, 1000, 50})
    ->Args({3, 100, 50})
    ->Args({4, 30, 50})
    ->Args({4, 30, 200})
    ->Args({6, 10, 100});

void BM_EnumerateCached(benchmark::State& state) {
  const SearchSpace space(std::vector<Coord>(4, 30));
  const PointSet gens = random_antichain({space, 200, 42});
  for (auto _ : state) {
    NegativeCacheOracle oracle(std::make_unique<ConeUnionOracle>(4, gens));
    benchmark::DoNotOptimize(enumerate(space, oracle));
  }
}
BENCHMARK(BM_EnumerateCached);

void BM_MaximalElements(benchmark::State& state) {
  std::mt19937_64 rng(7);
  PointSet s;
  while (s.size() < static_cast<std::size_t>(state.range(0))) {
    s.insert(Point{rng() % 64, rng() % 64, rng() % 64});
  }
  for (auto _ : state) benchmark::DoNotOptimize(maximal_elements(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaximalElements)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oNSquared);

void BM_BruteForce(benchmark::State& state) {
  const SearchSpace space(std::vector<Coord>(4, 15));
  const PointSet gens = random_antichain({space, 40, 42});
  for (auto _ : state) {
    ConeUnionOracle oracle(4, gens);
    benchmark::DoNotOptimize(brute_force_fronts(space, oracle));
  }
}
BENCHMARK(BM_BruteForce);

}  // namespace

BENCHMARK_MAIN();
