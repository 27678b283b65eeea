#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "subsetmetric/errors.hpp"
#include "subsetmetric/ground_space.hpp"
#include "subsetmetric/m_function.hpp"
#include "subsetmetric/point_set.hpp"

namespace subsetmetric {

/// Well-formed input that does not follow the workspace schema. `path` is a
/// JSON pointer (or "line N" for sequence files) to the offending value.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A request that names something that does not exist, or asks for
/// something the chosen options cannot do.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct NamedSet {
  std::string name;
  PointSet set;
};

/// A ground space, its M-function and named finite subsets, loaded from one
/// file. Sets keep their file order.
struct Workspace {
  SpaceHandle space;
  MFunction m;
  std::vector<NamedSet> sets;
  /// Non-fatal notes produced while loading, e.g. dropped duplicates.
  std::vector<std::string> warnings;

  /// Throws UsageError for an unknown name.
  const PointSet& set(std::string_view name) const;
};

/// Parses either a JSON workspace document (first non-blank character '{')
/// or a plain-text sequence file. Throws ParseError on malformed syntax and
/// SchemaError / ValidationError on invalid content. A table M-function is
/// loaded as-is; use certify_m before computing distances with it.
Workspace parse_workspace(std::string_view text);
Workspace load_workspace(const std::filesystem::path& path);

/// Parses "constant:<v>", "diameter" or "eccentricity".
MFunction parse_m_option(const SpaceHandle& space, std::string_view option);

/// Throws ValidationError unless a table M satisfies condition (2) over its
/// own entries. Other variants pass unconditionally.
void certify_m(const Workspace& ws);

/// Elements a table M must be checked on: its keys plus every set element.
std::vector<Element> m_check_sample(const Workspace& ws);

nlohmann::ordered_json element_to_json(const Element& e);
nlohmann::ordered_json to_json(const Workspace& ws);

}  // namespace subsetmetric
