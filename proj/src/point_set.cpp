#include "subsetmetric/point_set.hpp"

#include <algorithm>
#include <iterator>

#include "subsetmetric/errors.hpp"

namespace subsetmetric {

PointSet::PointSet(SpaceHandle space, std::vector<Element> elements)
    : space_(std::move(space)), elements_(std::move(elements)) {
  if (!space_) throw ValidationError("point set: no ground space");
  for (const auto& e : elements_) space_->validate(e);
  std::sort(elements_.begin(), elements_.end());
  const auto tail = std::unique(elements_.begin(), elements_.end());
  duplicates_removed_ = static_cast<std::size_t>(std::distance(tail, elements_.end()));
  elements_.erase(tail, elements_.end());
}

PointSet::PointSet(Trusted, SpaceHandle space, std::vector<Element> sorted_unique)
    : space_(std::move(space)), elements_(std::move(sorted_unique)) {}

bool PointSet::contains(const Element& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

bool canonically_before(const PointSet& a, const PointSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.elements_.begin(), a.elements_.end(),
                                      b.elements_.begin(), b.elements_.end());
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  if (a.space() != b.space()) throw ValidationError("set difference: sets live in different spaces");
  std::vector<Element> out;
  std::set_difference(a.elements_.begin(), a.elements_.end(), b.elements_.begin(),
                      b.elements_.end(), std::back_inserter(out));
  return PointSet(PointSet::Trusted{}, a.space(), std::move(out));
}

}  // namespace subsetmetric
