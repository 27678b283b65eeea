#include <doctest.h>

#include <cmath>

#include "subsetmetric/errors.hpp"
#include "subsetmetric/ground_space.hpp"
#include "support/generators.hpp"

using namespace subsetmetric;
using namespace subsetmetric::testing;

namespace {

GroundSpace path_abc() { return GroundSpace(GraphSpace(3, {{0, 1, 1}, {1, 2, 1}})); }

void check_axioms_exhaustively(const GroundSpace& space) {
  const auto elements = enumerate_elements(space, 100);
  for (const auto& x : elements)
    for (const auto& y : elements) {
      const double dxy = space.distance(x, y);
      CHECK(dxy >= 0);
      CHECK((dxy == 0) == (x == y));
      CHECK(dxy == space.distance(y, x));
      CHECK(dxy <= space.diameter());
      for (const auto& z : elements) CHECK(space.distance(x, z) <= dxy + space.distance(y, z));
    }
}

}  // namespace

TEST_CASE("distance examples per kind") {
  const GroundSpace hamming(HammingSpace("01", 3));
  CHECK(hamming.distance(Word{"000"}, Word{"011"}) == 2);

  const GroundSpace square(EuclideanBox({{0, 1}, {0, 1}}));
  CHECK(square.distance(Point{{0, 0}}, Point{{1, 1}}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  CHECK(path_abc().distance(Vertex{0}, Vertex{2}) == 2);
}

TEST_CASE("diameter examples per kind") {
  CHECK(GroundSpace(HammingSpace("01", 5)).diameter() == 5);
  CHECK(GroundSpace(EuclideanBox({{0, 1}, {0, 1}})).diameter() == doctest::Approx(std::sqrt(2.0)));
  CHECK(path_abc().diameter() == 2);
}

TEST_CASE("element validation errors") {
  const GroundSpace hamming(HammingSpace("01", 3));
  CHECK_THROWS_AS(hamming.validate(Word{"00"}), ValidationError);
  CHECK_THROWS_AS(hamming.validate(Word{"002"}), ValidationError);
  CHECK_THROWS_AS(hamming.validate(Point{{0.0}}), ValidationError);

  const GroundSpace square(EuclideanBox({{0, 1}, {0, 1}}));
  CHECK_THROWS_AS(square.validate(Point{{0.5}}), ValidationError);
  CHECK_THROWS_AS(square.validate(Point{{0.5, 1.5}}), ValidationError);
  CHECK_THROWS_AS(square.distance(Point{{0.5, NAN}}, Point{{0, 0}}), ValidationError);
  CHECK_NOTHROW(square.validate(Point{{1.0, 0.0}}));

  CHECK_THROWS_AS(path_abc().validate(Vertex{3}), ValidationError);
  CHECK_THROWS_AS(path_abc().validate(Vertex{-1}), ValidationError);
}

TEST_CASE("space construction errors") {
  CHECK_THROWS_AS(HammingSpace("", 3), ValidationError);
  CHECK_THROWS_AS(HammingSpace("0101", 3), ValidationError);
  CHECK_THROWS_AS(HammingSpace("01", 0), ValidationError);
  CHECK_THROWS_AS(EuclideanBox({}), ValidationError);
  CHECK_THROWS_AS(EuclideanBox({{1, 0}}), ValidationError);
  CHECK_THROWS_AS(GraphSpace(0, {}), ValidationError);
  CHECK_THROWS_AS(GraphSpace(3, {{0, 1, 1}}), ValidationError);  // disconnected
  CHECK_THROWS_AS(GraphSpace(2, {{0, 1, 0}}), ValidationError);
  CHECK_THROWS_AS(GraphSpace(2, {{0, 1, -1}}), ValidationError);
  CHECK_THROWS_AS(GraphSpace(2, {{0, 2, 1}}), ValidationError);
  CHECK_THROWS_AS(GraphSpace(2, {{1, 1, 1}}), ValidationError);
}

TEST_CASE("metric axioms hold exhaustively on small hamming spaces") {
  for (const char* alphabet : {"01", "012"})
    for (std::size_t length = 1; length <= 4; ++length) {
      if (std::string(alphabet).size() == 3 && length == 4) continue;  // keep triples under 10^5
      check_axioms_exhaustively(GroundSpace(HammingSpace(alphabet, length)));
    }
}

TEST_CASE("graph distances match Dijkstra and satisfy the axioms") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto space = random_graph_space(rng);
    const auto& g = std::get<GraphSpace>(space->params());
    const auto expected = dijkstra_all_pairs(g);
    CHECK(g.distances() == expected);
    check_axioms_exhaustively(*space);
    double diameter = 0;
    for (double d : expected) diameter = std::max(diameter, d);
    CHECK(space->diameter() == diameter);
  }
}

TEST_CASE("euclidean axioms by sampling") {
  Rng rng(5);
  const auto space = make_space(EuclideanBox({{-1, 2}, {0, 1}, {0.5, 0.75}}));
  for (int trial = 0; trial < 10000; ++trial) {
    const auto x = sample_element(*space, rng);
    const auto y = sample_element(*space, rng);
    const auto z = sample_element(*space, rng);
    const double dxy = space->distance(x, y);
    REQUIRE(dxy == space->distance(y, x));
    REQUIRE(dxy <= space->diameter() + kTolerance);
    REQUIRE(space->distance(x, z) <= dxy + space->distance(y, z) + kTolerance);
    REQUIRE(space->distance(x, x) == 0);
  }
}

TEST_CASE("eccentricity equals the farthest corner and is attained on finite spaces") {
  Rng rng(3);
  const EuclideanBox box({{-1, 2}, {0, 1}, {0.5, 0.75}});
  const GroundSpace space(box);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = std::get<Point>(sample_element(space, rng));
    CHECK(space.eccentricity(p) == doctest::Approx(corner_eccentricity(box, p)).epsilon(1e-12));
  }
  CHECK(GroundSpace(EuclideanBox({{0, 1}, {0, 1}})).eccentricity(Point{{0.5, 0.5}}) ==
        doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-12));
  CHECK(GroundSpace(EuclideanBox({{0, 1}})).eccentricity(Point{{0.25}}) == 0.75);

  for (int trial = 0; trial < 50; ++trial) {
    const auto graph = random_graph_space(rng);
    const auto elements = enumerate_elements(*graph, 100);
    for (const auto& x : elements) {
      double farthest = 0;
      for (const auto& y : elements) farthest = std::max(farthest, graph->distance(x, y));
      CHECK(graph->eccentricity(x) == farthest);
    }
  }
  const GroundSpace hamming(HammingSpace("012", 3));
  for (const auto& x : enumerate_elements(hamming, 100)) {
    double farthest = 0;
    for (const auto& y : enumerate_elements(hamming, 100)) farthest = std::max(farthest, hamming.distance(x, y));
    CHECK(hamming.eccentricity(x) == farthest);
  }
  CHECK_THROWS_AS(GroundSpace(HammingSpace("0", 3)).eccentricity(Word{"000"}), ValidationError);
}

TEST_CASE("enumeration and counting") {
  const GroundSpace hamming(HammingSpace("ab", 3));
  CHECK(element_count(hamming, 1000) == 8);
  const auto words = enumerate_elements(hamming, 1000);
  REQUIRE(words.size() == 8);
  CHECK(std::get<Word>(words.front()).letters == "aaa");
  CHECK(std::get<Word>(words.back()).letters == "bbb");
  CHECK_THROWS_AS(enumerate_elements(GroundSpace(HammingSpace("ACGT", 10)), 1000), SizeError);
  CHECK_THROWS_AS(enumerate_elements(GroundSpace(EuclideanBox({{0, 1}})), 1000), SizeError);
  CHECK(enumerate_elements(GroundSpace(EuclideanBox({{0.5, 0.5}})), 10).size() == 1);
}
