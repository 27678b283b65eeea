#include "subsetmetric/subset_metric.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "subsetmetric/assignment.hpp"
#include "subsetmetric/errors.hpp"
#include "subsetmetric/kernels.hpp"

namespace subsetmetric {

namespace {

void require_same_space(const GroundSpace& space, const MFunction& m, const PointSet& a,
                        const PointSet& b) {
  if (a.space().get() != &space || b.space().get() != &space || m.space().get() != &space)
    throw ValidationError("sets and M-function must be bound to the same ground space");
}

// Sum of d over the pairs, then M over the unmatched part of `target` in
// canonical order.
double chi_sum(const GroundSpace& space, const MFunction& m, const PointSet& target,
               const std::vector<std::pair<Element, Element>>& pairs) {
  double total = 0.0;
  std::vector<char> hit(target.size(), 0);
  for (const auto& [x, y] : pairs) {
    total += space.distance_trusted(x, y);
    const auto it = std::lower_bound(target.elements().begin(), target.elements().end(), y);
    hit[static_cast<std::size_t>(it - target.elements().begin())] = 1;
  }
  for (std::size_t j = 0; j < target.size(); ++j)
    if (!hit[j]) total += m.value_trusted(target[j]);
  return total;
}

std::vector<Element> unmatched_of(const PointSet& target, const Injection& chi) {
  std::set<Element> image;
  for (const auto& pair : chi.pairs) image.insert(pair.second);
  std::vector<Element> out;
  for (const auto& y : target.elements())
    if (!image.contains(y)) out.push_back(y);
  return out;
}

// True when the computation should run with b as the source side.
bool should_swap(const PointSet& a, const PointSet& b) {
  return canonically_before(b, a);
}

}  // namespace

double chi_distance(const GroundSpace& space, const MFunction& m, const PointSet& a,
                    const PointSet& b, const Injection& chi) {
  require_same_space(space, m, a, b);
  if (a.size() > b.size())
    throw OrientationError("chi-distance needs |a| <= |b|, got " + std::to_string(a.size()) +
                           " > " + std::to_string(b.size()));
  if (chi.pairs.size() != a.size())
    throw ValidationError("injection has " + std::to_string(chi.pairs.size()) +
                          " pairs but the source set has " + std::to_string(a.size()) +
                          " elements");
  std::set<Element> sources;
  std::set<Element> targets;
  for (const auto& [x, y] : chi.pairs) {
    if (!a.contains(x)) throw ValidationError("injection source " + to_string(x) + " is not in a");
    if (!b.contains(y)) throw ValidationError("injection target " + to_string(y) + " is not in b");
    if (!sources.insert(x).second)
      throw ValidationError("injection maps " + to_string(x) + " twice");
    if (!targets.insert(y).second)
      throw ValidationError("injection is not one-to-one at " + to_string(y));
  }
  return chi_sum(space, m, b, chi.pairs);
}

std::pair<PointSet, PointSet> symmetric_difference_reduce(const PointSet& a, const PointSet& b) {
  return {set_difference(a, b), set_difference(b, a)};
}

SubsetDistanceResult subset_distance(const GroundSpace& space, const MFunction& m,
                                     const PointSet& a, const PointSet& b,
                                     SubsetDistanceOptions options) {
  require_same_space(space, m, a, b);
  const bool swapped = should_swap(a, b);
  const PointSet& source = swapped ? b : a;
  const PointSet& target = swapped ? a : b;

  auto [reduced_source, reduced_target] =
      options.reduce ? symmetric_difference_reduce(source, target)
                     : std::pair<PointSet, PointSet>{source, target};

  SubsetDistanceResult result{
      .value = 0.0,
      .swapped = swapped,
      .witness = {},
      .reduced_witness = {},
      .reduced_a = swapped ? reduced_target : reduced_source,
      .reduced_b = swapped ? reduced_source : reduced_target,
      .unmatched = {},
  };

  const std::size_t k = reduced_source.size();
  const std::size_t n = reduced_target.size();
  if (n > 0) {
    std::vector<double> cells = kernels::distance_block(space, reduced_source.elements(),
                                                        reduced_target.elements());
    cells.reserve(n * n);
    for (std::size_t row = k; row < n; ++row)
      for (std::size_t col = 0; col < n; ++col)
        cells.push_back(m.value_trusted(reduced_target[col]));
    const Assignment assignment = solve_assignment(CostMatrix(n, std::move(cells)));
    for (std::size_t row = 0; row < k; ++row)
      result.reduced_witness.pairs.emplace_back(reduced_source[row],
                                                reduced_target[assignment.permutation[row]]);
  }
  result.reduced_witness.chi_cost = chi_sum(space, m, reduced_target, result.reduced_witness.pairs);
  result.value = result.reduced_witness.chi_cost;

  result.witness.pairs = result.reduced_witness.pairs;
  for (const auto& x : source.elements())
    if (target.contains(x) && !reduced_source.contains(x)) result.witness.pairs.emplace_back(x, x);
  std::sort(result.witness.pairs.begin(), result.witness.pairs.end());
  result.witness.chi_cost = chi_sum(space, m, target, result.witness.pairs);
  result.unmatched = unmatched_of(target, result.witness);
  return result;
}

SubsetDistanceResult brute_force_subset_distance(const GroundSpace& space, const MFunction& m,
                                                 const PointSet& a, const PointSet& b) {
  require_same_space(space, m, a, b);
  if (std::max(a.size(), b.size()) > kBruteForceSubsetMax)
    throw SizeError("brute-force subset distance is capped at " +
                    std::to_string(kBruteForceSubsetMax) + " elements per set");
  const bool swapped = should_swap(a, b);
  const PointSet& source = swapped ? b : a;
  const PointSet& target = swapped ? a : b;
  const std::size_t k = source.size();
  const std::size_t n = target.size();

  std::vector<double> m_target(n);
  for (std::size_t j = 0; j < n; ++j) m_target[j] = m.value_trusted(target[j]);

  std::vector<std::size_t> image(k);
  std::vector<std::size_t> best_image;
  std::vector<char> used(n, 0);
  double best = std::numeric_limits<double>::infinity();

  // Depth-first over every injective choice of image for source[0..k).
  auto visit = [&](auto&& self, std::size_t depth) -> void {
    if (depth == k) {
      double total = 0.0;
      for (std::size_t i = 0; i < k; ++i) total += space.distance_trusted(source[i], target[image[i]]);
      for (std::size_t j = 0; j < n; ++j)
        if (!used[j]) total += m_target[j];
      if (total < best) {
        best = total;
        best_image = image;
      }
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      image[depth] = j;
      self(self, depth + 1);
      used[j] = 0;
    }
  };
  visit(visit, 0);

  auto [reduced_a, reduced_b] = symmetric_difference_reduce(a, b);
  SubsetDistanceResult result{
      .value = best,
      .swapped = swapped,
      .witness = {},
      .reduced_witness = {},
      .reduced_a = std::move(reduced_a),
      .reduced_b = std::move(reduced_b),
      .unmatched = {},
  };
  for (std::size_t i = 0; i < k; ++i)
    result.witness.pairs.emplace_back(source[i], target[best_image[i]]);
  result.witness.chi_cost = best;
  result.unmatched = unmatched_of(target, result.witness);
  return result;
}

double sequence_subset_distance(const std::string& alphabet, std::size_t length,
                                const std::vector<std::string>& a,
                                const std::vector<std::string>& b) {
  const auto space = make_space(HammingSpace(alphabet, length));
  const auto m = MFunction::constant(space, static_cast<double>(length));
  auto to_set = [&](const std::vector<std::string>& words) {
    std::vector<Element> elements;
    elements.reserve(words.size());
    for (const auto& w : words) elements.emplace_back(Word{w});
    return PointSet(space, std::move(elements));
  };
  return subset_distance(*space, m, to_set(a), to_set(b)).value;
}

}  // namespace subsetmetric
