#include "subsetmetric/ground_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "subsetmetric/errors.hpp"
#include "subsetmetric/kernels.hpp"

namespace subsetmetric {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string format_number(double x) {
  std::ostringstream os;
  os.precision(9);
  os << x;
  return os.str();
}

}  // namespace

std::string to_string(const Element& e) {
  return std::visit(Overloaded{
                        [](const Word& w) { return '"' + w.letters + '"'; },
                        [](const Point& p) {
                          std::string s = "(";
                          for (std::size_t i = 0; i < p.coords.size(); ++i) {
                            if (i) s += ", ";
                            s += format_number(p.coords[i]);
                          }
                          return s + ")";
                        },
                        [](const Vertex& v) { return "v" + std::to_string(v.id); },
                    },
                    e);
}

const char* to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::hamming:
      return "hamming";
    case SpaceKind::euclidean_box:
      return "euclidean_box";
    case SpaceKind::graph:
      return "graph";
  }
  return "unknown";
}

// ---------------------------------------------------------------- hamming

HammingSpace::HammingSpace(std::string alphabet, std::size_t length)
    : alphabet_(std::move(alphabet)), length_(length) {
  if (alphabet_.empty()) throw ValidationError("hamming space: alphabet is empty");
  if (length_ == 0) throw ValidationError("hamming space: word length must be at least 1");
  std::set<char> seen(alphabet_.begin(), alphabet_.end());
  if (seen.size() != alphabet_.size())
    throw ValidationError("hamming space: alphabet '" + alphabet_ + "' repeats a letter");
}

void HammingSpace::validate(const Word& w) const {
  if (w.letters.size() != length_)
    throw ValidationError("word \"" + w.letters + "\" has length " +
                          std::to_string(w.letters.size()) + ", expected " +
                          std::to_string(length_));
  for (char c : w.letters)
    if (alphabet_.find(c) == std::string::npos)
      throw ValidationError("word \"" + w.letters + "\" uses letter '" + std::string(1, c) +
                            "' outside alphabet \"" + alphabet_ + "\"");
}

double HammingSpace::distance(const Word& a, const Word& b) const noexcept {
  std::size_t differing = 0;
  for (std::size_t i = 0; i < length_; ++i) differing += a.letters[i] != b.letters[i];
  return static_cast<double>(differing);
}

double HammingSpace::diameter() const noexcept {
  return has_multiple_elements() ? static_cast<double>(length_) : 0.0;
}

double HammingSpace::eccentricity(const Word& w) const {
  validate(w);
  if (!has_multiple_elements())
    throw ValidationError("eccentricity needs an alphabet of at least two letters");
  return static_cast<double>(length_);
}

// ---------------------------------------------------------------- euclidean box

EuclideanBox::EuclideanBox(std::vector<Interval> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw ValidationError("euclidean box: dimension must be at least 1");
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    const auto [lo, hi] = bounds_[i];
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
      throw ValidationError("euclidean box: bad bound interval [" + format_number(lo) + ", " +
                            format_number(hi) + "] in coordinate " + std::to_string(i));
  }
}

void EuclideanBox::validate(const Point& p) const {
  if (p.coords.size() != bounds_.size())
    throw ValidationError("point " + to_string(Element{p}) + " has dimension " +
                          std::to_string(p.coords.size()) + ", expected " +
                          std::to_string(bounds_.size()));
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    const double x = p.coords[i];
    if (!std::isfinite(x) || x < bounds_[i].lo || x > bounds_[i].hi)
      throw ValidationError("point " + to_string(Element{p}) + ": coordinate " +
                            std::to_string(i) + " outside [" + format_number(bounds_[i].lo) +
                            ", " + format_number(bounds_[i].hi) + "]");
  }
}

double EuclideanBox::distance(const Point& a, const Point& b) const noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    const double diff = a.coords[i] - b.coords[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

double EuclideanBox::diameter() const noexcept {
  double sum = 0.0;
  for (const auto& [lo, hi] : bounds_) sum += (hi - lo) * (hi - lo);
  return std::sqrt(sum);
}

double EuclideanBox::eccentricity(const Point& p) const noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    const double far = std::max(p.coords[i] - bounds_[i].lo, bounds_[i].hi - p.coords[i]);
    sum += far * far;
  }
  return std::sqrt(sum);
}

bool EuclideanBox::has_multiple_elements() const noexcept {
  return std::any_of(bounds_.begin(), bounds_.end(),
                     [](const Interval& b) { return b.hi > b.lo; });
}

// ---------------------------------------------------------------- graph

GraphSpace::GraphSpace(int vertex_count, std::vector<WeightedEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw ValidationError("graph: needs at least one vertex");
  for (const auto& e : edges_) {
    if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
      throw ValidationError("graph: edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                            ") names an unknown vertex");
    if (e.u == e.v) throw ValidationError("graph: self-loop at vertex " + std::to_string(e.u));
    if (!std::isfinite(e.weight) || e.weight <= 0.0)
      throw ValidationError("graph: edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                            ") must have a finite positive weight");
  }
  apsp_ = kernels::all_pairs_shortest_paths(vertex_count_, edges_);
  const auto n = static_cast<std::size_t>(vertex_count_);
  eccentricity_.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = apsp_[i * n + j];
      if (!std::isfinite(d))
        throw ValidationError("graph: vertices " + std::to_string(i) + " and " +
                              std::to_string(j) + " are disconnected; the space is unbounded");
      eccentricity_[i] = std::max(eccentricity_[i], d);
    }
    diameter_ = std::max(diameter_, eccentricity_[i]);
  }
}

void GraphSpace::validate(const Vertex& v) const {
  if (v.id < 0 || v.id >= vertex_count_)
    throw ValidationError("vertex " + std::to_string(v.id) + " is not in the graph (0.." +
                          std::to_string(vertex_count_ - 1) + ")");
}

// ---------------------------------------------------------------- dispatch

void GroundSpace::validate(const Element& e) const {
  if (e.index() != params_.index())
    throw ValidationError("element " + to_string(e) + " does not belong to a " +
                          to_string(kind()) + " space");
  std::visit(Overloaded{
                 [&](const HammingSpace& s) { s.validate(std::get<Word>(e)); },
                 [&](const EuclideanBox& s) { s.validate(std::get<Point>(e)); },
                 [&](const GraphSpace& s) { s.validate(std::get<Vertex>(e)); },
             },
             params_);
}

double GroundSpace::distance(const Element& a, const Element& b) const {
  validate(a);
  validate(b);
  return distance_trusted(a, b);
}

double GroundSpace::distance_trusted(const Element& a, const Element& b) const noexcept {
  switch (params_.index()) {
    case 0:
      return std::get<HammingSpace>(params_).distance(*std::get_if<Word>(&a),
                                                      *std::get_if<Word>(&b));
    case 1:
      return std::get<EuclideanBox>(params_).distance(*std::get_if<Point>(&a),
                                                      *std::get_if<Point>(&b));
    default:
      return std::get<GraphSpace>(params_).distance(*std::get_if<Vertex>(&a),
                                                    *std::get_if<Vertex>(&b));
  }
}

double GroundSpace::diameter() const noexcept {
  return std::visit([](const auto& s) { return s.diameter(); }, params_);
}

double GroundSpace::eccentricity(const Element& e) const {
  validate(e);
  return std::visit(Overloaded{
                        [&](const HammingSpace& s) { return s.eccentricity(std::get<Word>(e)); },
                        [&](const EuclideanBox& s) { return s.eccentricity(std::get<Point>(e)); },
                        [&](const GraphSpace& s) { return s.eccentricity(std::get<Vertex>(e)); },
                    },
                    params_);
}

bool GroundSpace::has_multiple_elements() const noexcept {
  return std::visit([](const auto& s) { return s.has_multiple_elements(); }, params_);
}

SpaceHandle make_space(GroundSpace::Params params) {
  return std::make_shared<const GroundSpace>(std::move(params));
}

std::uint64_t element_count(const GroundSpace& space, std::uint64_t cap) {
  return std::visit(Overloaded{
                        [&](const HammingSpace& s) {
                          std::uint64_t count = 1;
                          for (std::size_t i = 0; i < s.length(); ++i) {
                            count *= s.alphabet().size();
                            if (count > cap) return cap + 1;
                          }
                          return count;
                        },
                        [&](const EuclideanBox& s) {
                          return s.has_multiple_elements() ? cap + 1 : std::uint64_t{1};
                        },
                        [&](const GraphSpace& s) {
                          return std::min<std::uint64_t>(s.vertex_count(), cap + 1);
                        },
                    },
                    space.params());
}

std::vector<Element> enumerate_elements(const GroundSpace& space, std::uint64_t cap) {
  const auto count = element_count(space, cap);
  if (count > cap)
    throw SizeError(std::string("cannot enumerate ") + to_string(space.kind()) +
                    " space: more than " + std::to_string(cap) + " elements");
  std::vector<Element> out;
  out.reserve(count);
  std::visit(Overloaded{
                 [&](const HammingSpace& s) {
                   std::string alphabet = s.alphabet();
                   std::sort(alphabet.begin(), alphabet.end());
                   const std::size_t base = alphabet.size();
                   for (std::uint64_t index = 0; index < count; ++index) {
                     std::string letters(s.length(), alphabet[0]);
                     std::uint64_t rest = index;
                     for (std::size_t pos = s.length(); pos-- > 0;) {
                       letters[pos] = alphabet[rest % base];
                       rest /= base;
                     }
                     out.emplace_back(Word{std::move(letters)});
                   }
                 },
                 [&](const EuclideanBox& s) {
                   Point p;
                   for (const auto& b : s.bounds()) p.coords.push_back(b.lo);
                   out.emplace_back(std::move(p));
                 },
                 [&](const GraphSpace& s) {
                   for (int v = 0; v < s.vertex_count(); ++v) out.emplace_back(Vertex{v});
                 },
             },
             space.params());
  return out;
}

Element sample_element(const GroundSpace& space, std::mt19937_64& rng) {
  return std::visit(Overloaded{
                        [&](const HammingSpace& s) -> Element {
                          std::uniform_int_distribution<std::size_t> pick(
                              0, s.alphabet().size() - 1);
                          std::string letters(s.length(), ' ');
                          for (auto& c : letters) c = s.alphabet()[pick(rng)];
                          return Word{std::move(letters)};
                        },
                        [&](const EuclideanBox& s) -> Element {
                          Point p;
                          for (const auto& b : s.bounds()) {
                            std::uniform_real_distribution<double> coord(b.lo, b.hi);
                            p.coords.push_back(b.hi > b.lo ? coord(rng) : b.lo);
                          }
                          return p;
                        },
                        [&](const GraphSpace& s) -> Element {
                          std::uniform_int_distribution<int> pick(0, s.vertex_count() - 1);
                          return Vertex{pick(rng)};
                        },
                    },
                    space.params());
}

}  // namespace subsetmetric
