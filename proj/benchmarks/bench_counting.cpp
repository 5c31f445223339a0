#include <benchmark/benchmark.h>

#include <random>

#include "scorpion/basis.hpp"
#include "scorpion/fast_count.hpp"
#include "scorpion/generators.hpp"
#include "scorpion/oracle.hpp"

namespace {

using namespace scorpion;

const EdgeProbability kHalf{1, 2};

DirectedGraph random_orientation(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      switch (rng() % 3) {
        case 1: edges.emplace_back(u, v); break;
        case 2: edges.emplace_back(v, u); break;
        default: break;
      }
  return DirectedGraph::from_edges(n, edges);
}

void BM_CountScorpions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = random_graph(n, kHalf, 7);
  for (auto _ : state) {
    auto count = count_scorpions(g, 1, 5);
    benchmark::DoNotOptimize(count);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_CountScorpions)->Arg(50)->Arg(100)->Arg(200)->Complexity();

void BM_CountScorpionsLongTail(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = random_graph(n, kHalf, 7);
  for (auto _ : state) {
    auto count = count_scorpions(g, 2, 6);
    benchmark::DoNotOptimize(count);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_CountScorpionsLongTail)->Arg(30)->Arg(60)->Arg(120)->Complexity();

void BM_CountSinks(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto d = random_orientation(n, 11);
  for (auto _ : state) {
    auto count = count_sinks_slice(d, n / 2);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CountSinks)->Arg(100)->Arg(1000);

void BM_BruteCount(benchmark::State& state) {
  const auto g = random_graph(12, kHalf, 3);
  const auto spec = PropertySpec::scorpion(1);
  for (auto _ : state) {
    auto count = brute_count(g, 5, spec);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_BruteCount);

void BM_AlternatingEnumerator(benchmark::State& state) {
  const auto g = random_graph(6, kHalf, 5);
  const auto spec = PropertySpec::scorpion(1);
  for (auto _ : state) {
    auto value = alternating_enumerator(spec, g);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_AlternatingEnumerator);

void BM_FossilSweep(benchmark::State& state) {
  for (auto _ : state) {
    auto report = verify_fossil_characterization(1, 5);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_FossilSweep);

}  // namespace

BENCHMARK_MAIN();
