#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "subsetmetric/element.hpp"

namespace subsetmetric {

enum class SpaceKind { hamming, euclidean_box, graph };

const char* to_string(SpaceKind kind);

/// Words of fixed length over a finite alphabet with the Hamming distance.
class HammingSpace {
 public:
  HammingSpace(std::string alphabet, std::size_t length);

  const std::string& alphabet() const noexcept { return alphabet_; }
  std::size_t length() const noexcept { return length_; }

  void validate(const Word& w) const;
  double distance(const Word& a, const Word& b) const noexcept;
  double diameter() const noexcept;
  /// Every word has an antipodal word when the alphabet has two letters,
  /// so the eccentricity is L everywhere.
  double eccentricity(const Word& w) const;
  bool has_multiple_elements() const noexcept { return alphabet_.size() >= 2; }

 private:
  std::string alphabet_;
  std::size_t length_;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// A closed axis-aligned box of R^n with the euclidean norm.
class EuclideanBox {
 public:
  explicit EuclideanBox(std::vector<Interval> bounds);

  const std::vector<Interval>& bounds() const noexcept { return bounds_; }
  std::size_t dimension() const noexcept { return bounds_.size(); }

  void validate(const Point& p) const;
  double distance(const Point& a, const Point& b) const noexcept;
  /// Length of the main diagonal.
  double diameter() const noexcept;
  /// Distance to the farthest box corner. The farthest corner is chosen one
  /// coordinate at a time, which equals the max over all 2^dim corners.
  double eccentricity(const Point& p) const noexcept;
  bool has_multiple_elements() const noexcept;

 private:
  std::vector<Interval> bounds_;
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 0.0;
};

/// Vertices of a connected undirected graph with shortest-path distances.
class GraphSpace {
 public:
  GraphSpace(int vertex_count, std::vector<WeightedEdge> edges);

  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }
  /// Row-major all-pairs shortest path matrix.
  const std::vector<double>& distances() const noexcept { return apsp_; }

  void validate(const Vertex& v) const;
  double distance(const Vertex& a, const Vertex& b) const noexcept {
    return apsp_[static_cast<std::size_t>(a.id) * vertex_count_ + b.id];
  }
  double diameter() const noexcept { return diameter_; }
  double eccentricity(const Vertex& v) const noexcept { return eccentricity_[v.id]; }
  bool has_multiple_elements() const noexcept { return vertex_count_ >= 2; }

 private:
  int vertex_count_;
  std::vector<WeightedEdge> edges_;
  std::vector<double> apsp_;
  std::vector<double> eccentricity_;
  double diameter_ = 0.0;
};

/// A bounded metric space: one of the three supported families.
class GroundSpace {
 public:
  using Params = std::variant<HammingSpace, EuclideanBox, GraphSpace>;

  explicit GroundSpace(Params params) : params_(std::move(params)) {}

  SpaceKind kind() const noexcept { return static_cast<SpaceKind>(params_.index()); }
  const Params& params() const noexcept { return params_; }

  /// Throws ValidationError when e is not an element of this space.
  void validate(const Element& e) const;
  /// Validates both arguments.
  double distance(const Element& a, const Element& b) const;
  /// Skips validation; both arguments must already be known-valid.
  double distance_trusted(const Element& a, const Element& b) const noexcept;
  double diameter() const noexcept;
  double eccentricity(const Element& e) const;
  bool has_multiple_elements() const noexcept;

 private:
  Params params_;
};

using SpaceHandle = std::shared_ptr<const GroundSpace>;

SpaceHandle make_space(GroundSpace::Params params);

/// Number of elements of a hamming or graph space, saturating at `cap + 1`;
/// euclidean boxes with positive volume report `cap + 1`.
std::uint64_t element_count(const GroundSpace& space, std::uint64_t cap);

/// All elements of a finite space in canonical order. Throws SizeError above cap.
std::vector<Element> enumerate_elements(const GroundSpace& space, std::uint64_t cap);

/// One uniformly drawn element (uniform per coordinate for boxes).
Element sample_element(const GroundSpace& space, std::mt19937_64& rng);

}  // namespace subsetmetric
