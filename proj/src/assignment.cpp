#include "subsetmetric/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "subsetmetric/errors.hpp"

namespace subsetmetric {

CostMatrix::CostMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ == 0) throw ValidationError("cost matrix: size must be positive");
  if (entries_.size() != n_ * n_)
    throw ValidationError("cost matrix: expected " + std::to_string(n_ * n_) + " entries, got " +
                          std::to_string(entries_.size()));
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (!std::isfinite(entries_[k]) || entries_[k] < 0.0)
      throw ValidationError("cost matrix: entry (" + std::to_string(k / n_) + ", " +
                            std::to_string(k % n_) + ") is negative or not finite");
}

namespace {

std::vector<double> flatten(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<double> out;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw ValidationError("cost matrix: rows must form a square");
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace

CostMatrix::CostMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : CostMatrix(rows.size(), flatten(rows)) {}

Assignment solve_assignment(const CostMatrix& c) {
  const std::size_t n = c.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr std::size_t kNone = 0;

  // 1-based: column 0 is a virtual column holding the row being inserted.
  std::vector<double> row_potential(n + 1, 0.0);
  std::vector<double> col_potential(n + 1, 0.0);
  std::vector<std::size_t> row_of_col(n + 1, kNone);
  std::vector<std::size_t> way(n + 1, 0);
  std::vector<double> min_slack(n + 1);
  std::vector<char> used(n + 1);

  for (std::size_t row = 1; row <= n; ++row) {
    row_of_col[0] = row;
    std::size_t col0 = 0;
    std::fill(min_slack.begin(), min_slack.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[col0] = 1;
      const std::size_t r = row_of_col[col0];
      double delta = kInf;
      std::size_t next = 0;
      for (std::size_t col = 1; col <= n; ++col) {
        if (used[col]) continue;
        const double slack = c(r - 1, col - 1) - row_potential[r] - col_potential[col];
        if (slack < min_slack[col]) {
          min_slack[col] = slack;
          way[col] = col0;
        }
        if (min_slack[col] < delta) {
          delta = min_slack[col];
          next = col;
        }
      }
      for (std::size_t col = 0; col <= n; ++col) {
        if (used[col]) {
          row_potential[row_of_col[col]] += delta;
          col_potential[col] -= delta;
        } else {
          min_slack[col] -= delta;
        }
      }
      col0 = next;
    } while (row_of_col[col0] != kNone);
    // Augment along the alternating path.
    do {
      const std::size_t prev = way[col0];
      row_of_col[col0] = row_of_col[prev];
      col0 = prev;
    } while (col0 != 0);
  }

  Assignment out;
  out.permutation.assign(n, 0);
  for (std::size_t col = 1; col <= n; ++col) out.permutation[row_of_col[col] - 1] = col - 1;
  for (std::size_t row = 0; row < n; ++row) out.total_cost += c(row, out.permutation[row]);
  return out;
}

Assignment brute_force_assignment(const CostMatrix& c) {
  const std::size_t n = c.size();
  if (n > kBruteForceAssignmentMax)
    throw SizeError("brute-force assignment is capped at n = " +
                    std::to_string(kBruteForceAssignmentMax) + ", got " + std::to_string(n));
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Assignment best;
  best.total_cost = std::numeric_limits<double>::infinity();
  do {
    double cost = 0.0;
    for (std::size_t row = 0; row < n; ++row) cost += c(row, perm[row]);
    if (cost < best.total_cost) {
      best.total_cost = cost;
      best.permutation = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace subsetmetric
