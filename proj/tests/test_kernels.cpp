#include <doctest.h>

#include <stdexcept>

#include "subsetmetric/kernels.hpp"
#include "support/generators.hpp"

using namespace subsetmetric;
using namespace subsetmetric::testing;

TEST_CASE("parallel Floyd-Warshall equals the serial reference") {
  Rng rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const auto space = random_graph_space(rng, trial < 25 ? 8 : 120);
    const auto& g = std::get<GraphSpace>(space->params());
    CHECK(kernels::all_pairs_shortest_paths(g.vertex_count(), g.edges()) ==
          kernels::all_pairs_shortest_paths_serial(g.vertex_count(), g.edges()));
  }
}

TEST_CASE("unreachable pairs stay infinite") {
  const std::vector<WeightedEdge> edges = {{0, 1, 2.0}};
  const auto d = kernels::all_pairs_shortest_paths(3, edges);
  CHECK(d[1] == 2.0);
  CHECK(std::isinf(d[2]));
  CHECK(d[8] == 0.0);
}

TEST_CASE("parallel distance block equals the serial reference") {
  Rng rng(2);
  const auto space = unit_square();
  const auto rows = element_pool(*space, rng, 150);
  const auto cols = element_pool(*space, rng, 90);
  CHECK(kernels::distance_block(*space, rows, cols) == kernels::distance_block_serial(*space, rows, cols));
  CHECK(kernels::distance_block(*space, {}, cols).empty());
}

TEST_CASE("parallel pairwise matrix equals the serial reference and rethrows") {
  const auto fn = [](std::size_t i, std::size_t j) { return static_cast<double>(i * 31 + j * 7 % 5); };
  CHECK(kernels::pairwise_matrix(17, fn) == kernels::pairwise_matrix_serial(17, fn));
  CHECK(kernels::pairwise_matrix(0, fn).empty());
  const auto failing = [](std::size_t i, std::size_t j) -> double {
    if (i == 3 && j == 2) throw std::runtime_error("boom");
    return 0.0;
  };
  CHECK_THROWS_AS(kernels::pairwise_matrix(5, failing), std::runtime_error);
  CHECK(kernels::thread_count() >= 1);
}
