#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

namespace subsetmetric {

/// A fixed-length word over a hamming space's alphabet.
struct Word {
  std::string letters;
  auto operator<=>(const Word&) const = default;
};

/// A point of a box-bounded euclidean space.
struct Point {
  std::vector<double> coords;
  auto operator<=>(const Point&) const = default;
};

/// A vertex id of a finite weighted graph, in [0, vertex_count).
struct Vertex {
  int id = 0;
  auto operator<=>(const Vertex&) const = default;
};

/// One element x of a ground space. The variant order doubles as the
/// canonical total order used by PointSet.
using Element = std::variant<Word, Point, Vertex>;

std::string to_string(const Element& e);

}  // namespace subsetmetric
