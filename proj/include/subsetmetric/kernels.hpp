#pragma once

// Data-parallel kernels. Each OpenMP kernel has a serial twin with the same
// signature; the serial versions are the reference the tests compare against
// and the baseline the benchmark measures.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "subsetmetric/element.hpp"
#include "subsetmetric/ground_space.hpp"

namespace subsetmetric::kernels {

/// Floyd-Warshall over an undirected graph. Returns a row-major n*n matrix;
/// unreachable pairs hold +infinity.
std::vector<double> all_pairs_shortest_paths(int n, std::span<const WeightedEdge> edges);
std::vector<double> all_pairs_shortest_paths_serial(int n, std::span<const WeightedEdge> edges);

/// Row-major |rows| x |cols| block of ground distances.
std::vector<double> distance_block(const GroundSpace& space, std::span<const Element> rows,
                                   std::span<const Element> cols);
std::vector<double> distance_block_serial(const GroundSpace& space, std::span<const Element> rows,
                                          std::span<const Element> cols);

using PairFunction = std::function<double(std::size_t, std::size_t)>;

/// Evaluates fn(i, j) for every ordered pair of an n*n grid. fn must be safe
/// to call concurrently. The first exception thrown by any call is rethrown.
std::vector<double> pairwise_matrix(std::size_t n, const PairFunction& fn);
std::vector<double> pairwise_matrix_serial(std::size_t n, const PairFunction& fn);

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int thread_count();

}  // namespace subsetmetric::kernels
