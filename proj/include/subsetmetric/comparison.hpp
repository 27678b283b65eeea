#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "subsetmetric/ground_space.hpp"
#include "subsetmetric/point_set.hpp"

namespace subsetmetric {

// Classical set distances, for side-by-side comparison with the subset
// metric. All of them reject empty sets with DomainError. Only hausdorff is
// a metric in general; the others can break the triangle inequality.

enum class ComparisonKind { hausdorff, sum_min, surjective, fair_surjective, link };

const char* to_string(ComparisonKind kind);
std::optional<ComparisonKind> parse_comparison_kind(std::string_view name);

/// max(max_{x in a} d(x, b), max_{y in b} d(y, a)).
double hausdorff(const GroundSpace& space, const PointSet& a, const PointSet& b);

/// Half the sum, over both sets, of each element's distance to the other set.
double sum_min_distance(const GroundSpace& space, const PointSet& a, const PointSet& b);

inline constexpr std::size_t kSurjectionEnumerationMax = 7;

/// Minimum total cost of a surjection from the larger set onto the smaller,
/// by enumeration. Throws SizeError when max(|a|, |b|) > 7.
double surjective_distance(const GroundSpace& space, const PointSet& a, const PointSet& b);

/// As surjective_distance, restricted to surjections whose preimage sizes
/// differ by at most one.
double fair_surjective_distance(const GroundSpace& space, const PointSet& a, const PointSet& b);

/// Minimum total cost of a relation R in a x b that touches every element of
/// both sets, i.e. a minimum-weight edge cover of the complete bipartite
/// graph. Each element of a either pairs with one of b at cost
/// min(d(x, y), c(x) + c(y)) or pays its cheapest incident edge c(x) alone,
/// which is a square assignment of size |a| + |b|.
double link_distance(const GroundSpace& space, const PointSet& a, const PointSet& b);

inline constexpr std::size_t kLinkEnumerationMax = 20;

/// link_distance by enumerating all 2^(|a||b|) relations. Throws SizeError
/// when |a| * |b| > 20.
double link_distance_by_enumeration(const GroundSpace& space, const PointSet& a,
                                    const PointSet& b);

double comparison_distance(ComparisonKind kind, const GroundSpace& space, const PointSet& a,
                           const PointSet& b);

}  // namespace subsetmetric
