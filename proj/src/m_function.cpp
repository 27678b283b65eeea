#include "subsetmetric/m_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "subsetmetric/errors.hpp"

namespace subsetmetric {

const char* to_string(MFunction::Variant v) {
  switch (v) {
    case MFunction::Variant::constant:
      return "constant";
    case MFunction::Variant::diameter:
      return "diameter";
    case MFunction::Variant::eccentricity:
      return "eccentricity";
    case MFunction::Variant::table:
      return "table";
  }
  return "unknown";
}

MFunction::MFunction(SpaceHandle space, Variant variant)
    : space_(std::move(space)), variant_(variant) {
  if (!space_) throw ValidationError("M-function: no ground space");
  if (!space_->has_multiple_elements())
    throw ValidationError(
        "M-function: the ground space has a single element, so no M can be positive");
}

MFunction MFunction::constant(SpaceHandle space, double c) {
  MFunction m(std::move(space), Variant::constant);
  const double diameter = m.space_->diameter();
  if (!std::isfinite(c) || c < diameter - kTolerance)
    throw ValidationError("constant M = " + std::to_string(c) +
                          " is below the space diameter " + std::to_string(diameter));
  m.constant_ = c;
  return m;
}

MFunction MFunction::diameter(SpaceHandle space) {
  MFunction m(std::move(space), Variant::diameter);
  m.constant_ = m.space_->diameter();
  return m;
}

MFunction MFunction::eccentricity(SpaceHandle space) {
  MFunction m(std::move(space), Variant::eccentricity);
  if (const auto* h = std::get_if<HammingSpace>(&m.space_->params()); h && h->alphabet().size() < 2)
    throw ValidationError("eccentricity M needs an alphabet of at least two letters");
  return m;
}

MFunction MFunction::table(SpaceHandle space, std::vector<std::pair<Element, double>> entries) {
  MFunction m(std::move(space), Variant::table);
  for (auto& [x, value] : entries) {
    m.space_->validate(x);
    if (!std::isfinite(value) || value < 0.0)
      throw ValidationError("M table: value for " + to_string(x) +
                            " must be finite and nonnegative");
    if (!m.table_.emplace(std::move(x), value).second)
      throw ValidationError("M table: duplicate entry");
  }
  if (m.table_.empty()) throw ValidationError("M table: no entries");
  return m;
}

double MFunction::value(const Element& x) const {
  space_->validate(x);
  return value_trusted(x);
}

double MFunction::value_trusted(const Element& x) const {
  switch (variant_) {
    case Variant::constant:
    case Variant::diameter:
      return *constant_;
    case Variant::eccentricity:
      return space_->eccentricity(x);
    case Variant::table: {
      const auto it = table_.find(x);
      if (it == table_.end())
        throw ValidationError("M table has no entry for " + to_string(x));
      return it->second;
    }
  }
  return 0.0;
}

Condition2Report validate_condition2(const GroundSpace& space, const MFunction& m,
                                     std::span<const Element> sample) {
  if (sample.empty()) throw ValidationError("condition (2) check: empty sample");
  std::vector<double> m_values;
  m_values.reserve(sample.size());
  for (const auto& x : sample) {
    space.validate(x);
    m_values.push_back(m.value_trusted(x));
  }

  Condition2Report report;
  report.min_m = *std::min_element(m_values.begin(), m_values.end());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = 0; j < sample.size(); ++j) {
      const double d = space.distance_trusted(sample[i], sample[j]);
      ++report.checked_pairs;
      if (d > m_values[i] + kTolerance)
        report.violations.push_back({Condition2Violation::Kind::below_distance, sample[i],
                                     sample[j], d, m_values[i]});
      if (m_values[i] > d + m_values[j] + kTolerance)
        report.violations.push_back({Condition2Violation::Kind::not_lipschitz, sample[i],
                                     sample[j], m_values[i], d + m_values[j]});
    }
  }
  return report;
}

}  // namespace subsetmetric
