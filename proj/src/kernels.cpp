#include "subsetmetric/kernels.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace subsetmetric::kernels {

namespace {

std::vector<double> initial_distances(int n, std::span<const WeightedEdge> edges) {
  const auto size = static_cast<std::size_t>(n);
  std::vector<double> d(size * size, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < size; ++i) d[i * size + i] = 0.0;
  for (const auto& e : edges) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    if (u == v) continue;
    d[u * size + v] = std::min(d[u * size + v], e.weight);
    d[v * size + u] = d[u * size + v];
  }
  return d;
}

// Below this many cells the fork/join overhead dominates.
constexpr std::size_t kParallelCells = 4096;

}  // namespace

std::vector<double> all_pairs_shortest_paths_serial(int n, std::span<const WeightedEdge> edges) {
  auto d = initial_distances(n, edges);
  const auto size = static_cast<std::size_t>(n);
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      const double dik = d[i * size + k];
      for (std::size_t j = 0; j < size; ++j) {
        const double through = dik + d[k * size + j];
        if (through < d[i * size + j]) d[i * size + j] = through;
      }
    }
  }
  return d;
}

std::vector<double> all_pairs_shortest_paths(int n, std::span<const WeightedEdge> edges) {
  auto d = initial_distances(n, edges);
  const auto size = static_cast<std::ptrdiff_t>(n);
  double* data = d.data();
  // Row k and column k are fixed points of round k, so rows can be relaxed
  // independently.
  for (std::ptrdiff_t k = 0; k < size; ++k) {
#pragma omp parallel for schedule(static) if (static_cast<std::size_t>(size * size) >= kParallelCells)
    for (std::ptrdiff_t i = 0; i < size; ++i) {
      const double dik = data[i * size + k];
      const double* row_k = data + k * size;
      double* row_i = data + i * size;
      for (std::ptrdiff_t j = 0; j < size; ++j) {
        const double through = dik + row_k[j];
        if (through < row_i[j]) row_i[j] = through;
      }
    }
  }
  return d;
}

std::vector<double> distance_block_serial(const GroundSpace& space, std::span<const Element> rows,
                                          std::span<const Element> cols) {
  std::vector<double> out(rows.size() * cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out[i * cols.size() + j] = space.distance_trusted(rows[i], cols[j]);
  return out;
}

std::vector<double> distance_block(const GroundSpace& space, std::span<const Element> rows,
                                   std::span<const Element> cols) {
  std::vector<double> out(rows.size() * cols.size());
  const auto n_rows = static_cast<std::ptrdiff_t>(rows.size());
  const std::size_t n_cols = cols.size();
#pragma omp parallel for schedule(static) if (rows.size() * n_cols >= kParallelCells)
  for (std::ptrdiff_t i = 0; i < n_rows; ++i)
    for (std::size_t j = 0; j < n_cols; ++j)
      out[static_cast<std::size_t>(i) * n_cols + j] =
          space.distance_trusted(rows[static_cast<std::size_t>(i)], cols[j]);
  return out;
}

std::vector<double> pairwise_matrix_serial(std::size_t n, const PairFunction& fn) {
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = fn(i, j);
  return out;
}

std::vector<double> pairwise_matrix(std::size_t n, const PairFunction& fn) {
  std::vector<double> out(n * n);
  const auto cells = static_cast<std::ptrdiff_t>(n * n);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  // Exceptions must not cross the parallel region boundary.
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t c = 0; c < cells; ++c) {
    const auto cell = static_cast<std::size_t>(c);
    try {
      out[cell] = fn(cell / n, cell % n);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace subsetmetric::kernels
