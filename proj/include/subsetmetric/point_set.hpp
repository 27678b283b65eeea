#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "subsetmetric/element.hpp"
#include "subsetmetric/ground_space.hpp"

namespace subsetmetric {

/// A finite subset of a ground space: validated, deduplicated and sorted in
/// the canonical element order. May be empty.
class PointSet {
 public:
  /// Throws ValidationError if any element is not in the space.
  PointSet(SpaceHandle space, std::vector<Element> elements);

  const SpaceHandle& space() const noexcept { return space_; }
  std::span<const Element> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(const Element& e) const;
  /// How many repeated input elements were dropped at construction.
  std::size_t duplicates_removed() const noexcept { return duplicates_removed_; }

  const Element& operator[](std::size_t i) const noexcept { return elements_[i]; }

  /// Same space object and same elements.
  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.space_ == b.space_ && a.elements_ == b.elements_;
  }
  /// Canonical order on sets of one space: size first, then lexicographic.
  friend bool canonically_before(const PointSet& a, const PointSet& b);

 private:
  struct Trusted {};
  PointSet(Trusted, SpaceHandle space, std::vector<Element> sorted_unique);

  SpaceHandle space_;
  std::vector<Element> elements_;
  std::size_t duplicates_removed_ = 0;

  friend PointSet set_difference(const PointSet& a, const PointSet& b);
};

/// a \ b. Both sets must share one space.
PointSet set_difference(const PointSet& a, const PointSet& b);

}  // namespace subsetmetric
