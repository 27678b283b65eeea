#include "subsetmetric/comparison.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "subsetmetric/assignment.hpp"
#include "subsetmetric/errors.hpp"
#include "subsetmetric/kernels.hpp"

namespace subsetmetric {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_nonempty(const PointSet& a, const PointSet& b, const char* what) {
  if (a.empty() || b.empty())
    throw DomainError(std::string(what) + " is undefined for an empty set");
}

void require_space(const GroundSpace& space, const PointSet& a, const PointSet& b) {
  if (a.space().get() != &space || b.space().get() != &space)
    throw ValidationError("sets must be bound to the given ground space");
}

// Distances from every element of `larger` (rows) to `smaller` (cols).
struct Oriented {
  std::size_t rows;
  std::size_t cols;
  std::vector<double> d;
  double operator()(std::size_t r, std::size_t c) const { return d[r * cols + c]; }
};

Oriented orient(const GroundSpace& space, const PointSet& a, const PointSet& b) {
  const bool a_larger = a.size() > b.size() || (a.size() == b.size() && !canonically_before(b, a));
  const PointSet& larger = a_larger ? a : b;
  const PointSet& smaller = a_larger ? b : a;
  return {larger.size(), smaller.size(),
          kernels::distance_block(space, larger.elements(), smaller.elements())};
}

std::vector<double> row_minima(const Oriented& m) {
  std::vector<double> out(m.rows, kInf);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out[r] = std::min(out[r], m(r, c));
  return out;
}

std::vector<double> col_minima(const Oriented& m) {
  std::vector<double> out(m.cols, kInf);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out[c] = std::min(out[c], m(r, c));
  return out;
}

// Minimum over maps rows -> cols where every column receives between
// min_load and max_load rows and at most `heavy_slots` columns receive
// max_load rows (when max_load > min_load).
double min_cost_map(const Oriented& m, std::size_t min_load, std::size_t max_load,
                    std::size_t heavy_slots) {
  std::vector<std::size_t> load(m.cols, 0);
  std::size_t heavy = 0;
  std::size_t short_cols = min_load > 0 ? m.cols : 0;  // columns still below min_load
  std::size_t deficit = m.cols * min_load;             // rows still owed to reach min_load
  double best = kInf;

  auto visit = [&](auto&& self, std::size_t row, double cost) -> void {
    if (cost >= best) return;
    const std::size_t remaining = m.rows - row;
    if (remaining < deficit) return;
    if (row == m.rows) {
      if (short_cols == 0) best = cost;
      return;
    }
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (load[c] == max_load) continue;
      const bool becomes_heavy = max_load > min_load && load[c] + 1 == max_load;
      if (becomes_heavy && heavy == heavy_slots) continue;
      const bool fills = load[c] < min_load;
      ++load[c];
      heavy += becomes_heavy;
      deficit -= fills;
      if (fills && load[c] == min_load) --short_cols;
      self(self, row + 1, cost + m(row, c));
      if (fills && load[c] == min_load) ++short_cols;
      deficit += fills;
      heavy -= becomes_heavy;
      --load[c];
    }
  };
  visit(visit, 0, 0.0);
  return best;
}

void require_enumerable(const PointSet& a, const PointSet& b, const char* what) {
  if (std::max(a.size(), b.size()) > kSurjectionEnumerationMax)
    throw SizeError(std::string(what) + " enumeration is capped at " +
                    std::to_string(kSurjectionEnumerationMax) + " elements per set");
}

}  // namespace

const char* to_string(ComparisonKind kind) {
  switch (kind) {
    case ComparisonKind::hausdorff:
      return "hausdorff";
    case ComparisonKind::sum_min:
      return "md";
    case ComparisonKind::surjective:
      return "surjective";
    case ComparisonKind::fair_surjective:
      return "fair";
    case ComparisonKind::link:
      return "link";
  }
  return "unknown";
}

std::optional<ComparisonKind> parse_comparison_kind(std::string_view name) {
  if (name == "hausdorff") return ComparisonKind::hausdorff;
  if (name == "md" || name == "sum_min") return ComparisonKind::sum_min;
  if (name == "surjective") return ComparisonKind::surjective;
  if (name == "fair" || name == "fair_surjective") return ComparisonKind::fair_surjective;
  if (name == "link") return ComparisonKind::link;
  return std::nullopt;
}

double hausdorff(const GroundSpace& space, const PointSet& a, const PointSet& b) {
  require_space(space, a, b);
  require_nonempty(a, b, "Hausdorff distance");
  const Oriented m = orient(space, a, b);
  double out = 0.0;
  for (double v : row_minima(m)) out = std::max(out, v);
  for (double v : col_minima(m)) out = std::max(out, v);
  return out;
}

double sum_min_distance(const GroundSpace& space, const PointSet& a, const PointSet& b) {
  require_space(space, a, b);
  require_nonempty(a, b, "sum of minimum distances");
  const Oriented m = orient(space, a, b);
  double total = 0.0;
  for (double v : row_minima(m)) total += v;
  for (double v : col_minima(m)) total += v;
  return 0.5 * total;
}

double surjective_distance(const GroundSpace& space, const PointSet& a, const PointSet& b) {
  require_space(space, a, b);
  require_nonempty(a, b, "surjective distance");
  require_enumerable(a, b, "surjective distance");
  const Oriented m = orient(space, a, b);
  return min_cost_map(m, 1, m.rows, m.cols);
}

double fair_surjective_distance(const GroundSpace& space, const PointSet& a, const PointSet& b) {
  require_space(space, a, b);
  require_nonempty(a, b, "fair surjective distance");
  require_enumerable(a, b, "fair surjective distance");
  const Oriented m = orient(space, a, b);
  const std::size_t base = m.rows / m.cols;
  const std::size_t extra = m.rows % m.cols;
  return min_cost_map(m, base, extra ? base + 1 : base, extra);
}

double link_distance(const GroundSpace& space, const PointSet& a, const PointSet& b) {
  require_space(space, a, b);
  require_nonempty(a, b, "link distance");
  const std::size_t p = a.size();
  const std::size_t q = b.size();
  const std::vector<double> d = kernels::distance_block(space, a.elements(), b.elements());
  std::vector<double> cheapest_a(p, kInf);
  std::vector<double> cheapest_b(q, kInf);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      cheapest_a[i] = std::min(cheapest_a[i], d[i * q + j]);
      cheapest_b[j] = std::min(cheapest_b[j], d[i * q + j]);
    }

  // Rows: a, then one "alone" row per element of b.
  // Cols: b, then one "alone" col per element of a.
  const std::size_t n = p + q;
  std::vector<double> cells(n * n, 0.0);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j)
      cells[i * n + j] = std::min(d[i * q + j], cheapest_a[i] + cheapest_b[j]);
    for (std::size_t j = q; j < n; ++j) cells[i * n + j] = cheapest_a[i];
  }
  for (std::size_t i = p; i < n; ++i)
    for (std::size_t j = 0; j < q; ++j) cells[i * n + j] = cheapest_b[j];
  return solve_assignment(CostMatrix(n, std::move(cells))).total_cost;
}

double link_distance_by_enumeration(const GroundSpace& space, const PointSet& a,
                                    const PointSet& b) {
  require_space(space, a, b);
  require_nonempty(a, b, "link distance");
  const std::size_t p = a.size();
  const std::size_t q = b.size();
  if (p * q > kLinkEnumerationMax)
    throw SizeError("link relation enumeration is capped at |a|*|b| <= " +
                    std::to_string(kLinkEnumerationMax));
  const std::vector<double> d = kernels::distance_block_serial(space, a.elements(), b.elements());
  const std::uint32_t cells = static_cast<std::uint32_t>(p * q);
  double best = kInf;
  std::vector<char> row_hit(p);
  std::vector<char> col_hit(q);
  for (std::uint32_t relation = 1; relation < (std::uint32_t{1} << cells); ++relation) {
    std::fill(row_hit.begin(), row_hit.end(), 0);
    std::fill(col_hit.begin(), col_hit.end(), 0);
    double cost = 0.0;
    for (std::uint32_t cell = 0; cell < cells; ++cell) {
      if (!(relation >> cell & 1u)) continue;
      row_hit[cell / q] = 1;
      col_hit[cell % q] = 1;
      cost += d[cell];
    }
    if (cost < best && std::all_of(row_hit.begin(), row_hit.end(), [](char c) { return c; }) &&
        std::all_of(col_hit.begin(), col_hit.end(), [](char c) { return c; }))
      best = cost;
  }
  return best;
}

double comparison_distance(ComparisonKind kind, const GroundSpace& space, const PointSet& a,
                           const PointSet& b) {
  switch (kind) {
    case ComparisonKind::hausdorff:
      return hausdorff(space, a, b);
    case ComparisonKind::sum_min:
      return sum_min_distance(space, a, b);
    case ComparisonKind::surjective:
      return surjective_distance(space, a, b);
    case ComparisonKind::fair_surjective:
      return fair_surjective_distance(space, a, b);
    case ComparisonKind::link:
      return link_distance(space, a, b);
  }
  throw ValidationError("unknown comparison kind");
}

}  // namespace subsetmetric
