#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "subsetmetric/element.hpp"
#include "subsetmetric/ground_space.hpp"

namespace subsetmetric {

/// The boundary weight M charged for every element left unmatched by an
/// injection. A valid M satisfies, for all x, y, z,
///
///     d(x, y) <= M(x) <= d(x, z) + M(z).
///
/// The constant, diameter and eccentricity variants satisfy this by
/// construction. A table variant only holds values for a finite list of
/// elements and must be checked with validate_condition2 before use.
class MFunction {
 public:
  enum class Variant { constant, diameter, eccentricity, table };

  /// Throws ValidationError when c < diameter (beyond tolerance).
  static MFunction constant(SpaceHandle space, double c);
  static MFunction diameter(SpaceHandle space);
  static MFunction eccentricity(SpaceHandle space);
  /// Entries are validated as elements but not against condition (2).
  static MFunction table(SpaceHandle space, std::vector<std::pair<Element, double>> entries);

  Variant variant() const noexcept { return variant_; }
  const SpaceHandle& space() const noexcept { return space_; }

  /// M(x). Validates x; a table throws ValidationError for elements it lacks.
  double value(const Element& x) const;
  /// M(x) for an element already validated against space().
  double value_trusted(const Element& x) const;

  /// The value of a constant (or diameter) M.
  std::optional<double> constant_value() const noexcept { return constant_; }
  const std::map<Element, double>& table_entries() const noexcept { return table_; }

 private:
  MFunction(SpaceHandle space, Variant variant);

  SpaceHandle space_;
  Variant variant_;
  std::optional<double> constant_;
  std::map<Element, double> table_;
};

const char* to_string(MFunction::Variant v);

struct Condition2Violation {
  enum class Kind {
    below_distance,  ///< d(x, other) > M(x)
    not_lipschitz,   ///< M(x) > d(x, other) + M(other)
  };
  Kind kind;
  Element x;
  Element other;
  double lhs;
  double rhs;
};

struct Condition2Report {
  std::vector<Condition2Violation> violations;
  /// Smallest M over the sample: an empirical version of the positive
  /// lower bound every valid M has on a space with two or more elements.
  double min_m = 0.0;
  std::size_t checked_pairs = 0;

  bool passed() const noexcept { return violations.empty(); }
};

/// Checks both inequalities of condition (2) on every ordered pair of the
/// sample, with absolute tolerance kTolerance. Throws ValidationError for an
/// empty sample or an invalid element.
Condition2Report validate_condition2(const GroundSpace& space, const MFunction& m,
                                     std::span<const Element> sample);

}  // namespace subsetmetric
