#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace subsetmetric {

/// Square matrix of finite nonnegative costs, row-major.
class CostMatrix {
 public:
  /// Throws ValidationError for n == 0, a size mismatch, or a negative or
  /// non-finite entry.
  CostMatrix(std::size_t n, std::vector<double> entries);
  CostMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * n_ + col];
  }
  std::span<const double> entries() const noexcept { return entries_; }

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

struct Assignment {
  /// Row i is assigned to column permutation[i].
  std::vector<std::size_t> permutation;
  double total_cost = 0.0;
};

/// Minimum-cost perfect assignment by the Hungarian method with row and
/// column potentials, O(n^3). Deterministic for a fixed input.
Assignment solve_assignment(const CostMatrix& c);

inline constexpr std::size_t kBruteForceAssignmentMax = 9;

/// Exhaustive minimum over all n! permutations. Throws SizeError for
/// n > kBruteForceAssignmentMax.
Assignment brute_force_assignment(const CostMatrix& c);

}  // namespace subsetmetric
