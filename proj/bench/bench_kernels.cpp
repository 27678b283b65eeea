// Serial reference vs OpenMP kernel, one pair of benchmarks per kernel.

#include <benchmark/benchmark.h>

#include <random>

#include "subsetmetric/kernels.hpp"
#include "subsetmetric/m_function.hpp"
#include "subsetmetric/subset_metric.hpp"

using namespace subsetmetric;

namespace {

std::vector<WeightedEdge> random_graph(int n, std::mt19937_64& rng) {
  std::vector<WeightedEdge> edges;
  std::uniform_real_distribution<double> weight(1.0, 10.0);
  for (int v = 1; v < n; ++v) edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v, weight(rng)});
  for (int i = 0; i < 2 * n; ++i) {
    const int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (u != v) edges.push_back({u, v, weight(rng)});
  }
  return edges;
}

template <bool Parallel>
void BM_AllPairsShortestPaths(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  const auto edges = random_graph(n, rng);
  for (auto _ : state) {
    auto d = Parallel ? kernels::all_pairs_shortest_paths(n, edges) : kernels::all_pairs_shortest_paths_serial(n, edges);
    benchmark::DoNotOptimize(d.data());
  }
}

template <bool Parallel>
void BM_DistanceBlock(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const GroundSpace space(HammingSpace("ACGT", 150));
  std::vector<Element> rows, cols;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(sample_element(space, rng));
    cols.push_back(sample_element(space, rng));
  }
  for (auto _ : state) {
    auto d = Parallel ? kernels::distance_block(space, rows, cols) : kernels::distance_block_serial(space, rows, cols);
    benchmark::DoNotOptimize(d.data());
  }
}

template <bool Parallel>
void BM_SubsetDistanceMatrix(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto sets = static_cast<std::size_t>(state.range(0));
  const auto space = make_space(EuclideanBox({{0, 1}, {0, 1}}));
  const auto m = MFunction::eccentricity(space);
  std::vector<PointSet> pool;
  for (std::size_t s = 0; s < sets; ++s) {
    std::vector<Element> elements;
    for (int i = 0; i < 40; ++i) elements.push_back(sample_element(*space, rng));
    pool.emplace_back(space, std::move(elements));
  }
  const auto fn = [&](std::size_t i, std::size_t j) { return subset_distance(*space, m, pool[i], pool[j]).value; };
  for (auto _ : state) {
    auto d = Parallel ? kernels::pairwise_matrix(sets, fn) : kernels::pairwise_matrix_serial(sets, fn);
    benchmark::DoNotOptimize(d.data());
  }
}

}  // namespace

BENCHMARK(BM_AllPairsShortestPaths<false>)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllPairsShortestPaths<true>)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceBlock<false>)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceBlock<true>)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetDistanceMatrix<false>)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubsetDistanceMatrix<true>)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
