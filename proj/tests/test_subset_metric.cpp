#include <doctest.h>

#include <cmath>

#include "subsetmetric/errors.hpp"
#include "subsetmetric/subset_metric.hpp"
#include "support/generators.hpp"

using namespace subsetmetric;
using namespace subsetmetric::testing;

namespace {

PointSet words(const SpaceHandle& space, std::vector<std::string> ws) {
  std::vector<Element> out;
  for (auto& w : ws) out.emplace_back(Word{std::move(w)});
  return PointSet(space, std::move(out));
}

PointSet reals(const SpaceHandle& space, std::vector<double> xs) {
  std::vector<Element> out;
  for (double x : xs) out.emplace_back(Point{{x}});
  return PointSet(space, std::move(out));
}

SpaceHandle pick_space(Rng& rng, int kind) {
  switch (kind) {
    case 0:
      return random_hamming_space(rng);
    case 1:
      return unit_square();
    default:
      return random_graph_space(rng);
  }
}

}  // namespace

TEST_CASE("point sets deduplicate and sort") {
  const auto space = make_space(HammingSpace("01", 2));
  const auto s = words(space, {"11", "00", "11", "01"});
  CHECK(s.size() == 3);
  CHECK(s.duplicates_removed() == 1);
  CHECK(std::get<Word>(s[0]).letters == "00");
  CHECK(s.contains(Word{"01"}));
  CHECK_FALSE(s.contains(Word{"10"}));
  CHECK_THROWS_AS(words(space, {"012"}), ValidationError);
}

TEST_CASE("chi_distance examples and errors") {
  const auto space = make_space(HammingSpace("01", 2));
  const auto m = MFunction::constant(space, 2);
  const auto x = words(space, {"00"});
  CHECK(chi_distance(*space, m, x, x, {{{Word{"00"}, Word{"00"}}}}) == 0);

  const auto b = words(space, {"01", "11"});
  CHECK(chi_distance(*space, m, x, b, {{{Word{"00"}, Word{"01"}}}}) == 3);
  CHECK(chi_distance(*space, m, words(space, {}), b, {}) == 4);

  CHECK_THROWS_AS(chi_distance(*space, m, b, x, {}), OrientationError);
  CHECK_THROWS_AS(chi_distance(*space, m, x, b, {{{Word{"00"}, Word{"10"}}}}), ValidationError);
  CHECK_THROWS_AS(chi_distance(*space, m, x, b, {{{Word{"11"}, Word{"01"}}}}), ValidationError);
  CHECK_THROWS_AS(chi_distance(*space, m, x, b, {}), ValidationError);
  const auto two = words(space, {"00", "10"});
  CHECK_THROWS_AS(chi_distance(*space, m, two, b, {{{Word{"00"}, Word{"01"}}, {Word{"10"}, Word{"01"}}}}),
                  ValidationError);
}

TEST_CASE("subset_distance examples") {
  const auto h3 = make_space(HammingSpace("01", 3));
  const auto m3 = MFunction::constant(h3, 3);
  const auto a = words(h3, {"000"});
  const auto b = words(h3, {"011", "111"});
  for (const auto& r : {subset_distance(*h3, m3, a, b), brute_force_subset_distance(*h3, m3, a, b)}) {
    CHECK(r.value == 5);
    CHECK_FALSE(r.swapped);
    REQUIRE(r.witness.pairs.size() == 1);
    CHECK(r.witness.pairs[0].second == Element{Word{"011"}});
    REQUIRE(r.unmatched.size() == 1);
    CHECK(r.unmatched[0] == Element{Word{"111"}});
  }
  CHECK(subset_distance(*h3, m3, b, a).value == 5);
  CHECK(subset_distance(*h3, m3, b, a).swapped);
  CHECK(subset_distance(*h3, m3, b, b).value == 0);
  CHECK(subset_distance(*h3, m3, words(h3, {"010"}), words(h3, {"111"})).value == 2);

  const auto line = unit_interval();
  const auto ecc = MFunction::eccentricity(line);
  CHECK(std::abs(subset_distance(*line, ecc, reals(line, {0, 0.25}), reals(line, {0, 0.5})).value - 0.25) <= 1e-12);
  CHECK(std::abs(subset_distance(*line, ecc, reals(line, {0, 0.25}), reals(line, {0})).value - 0.75) <= 1e-12);
}

TEST_CASE("empty sets") {
  const auto h = make_space(HammingSpace("01", 2));
  const auto m = MFunction::constant(h, 2);
  const auto empty = words(h, {});
  CHECK(subset_distance(*h, m, empty, empty).value == 0);
  CHECK(subset_distance(*h, m, empty, words(h, {"01", "11"})).value == 4);
  CHECK(subset_distance(*h, m, words(h, {"01", "11"}), empty).value == 4);
  CHECK(brute_force_subset_distance(*h, m, empty, empty).value == 0);
}

TEST_CASE("space mismatch and oracle cap") {
  const auto h = make_space(HammingSpace("01", 2));
  const auto other = make_space(HammingSpace("01", 2));
  const auto m = MFunction::constant(h, 2);
  CHECK_THROWS_AS(subset_distance(*h, m, words(h, {"00"}), words(other, {"00"})), ValidationError);
  CHECK_THROWS_AS(subset_distance(*other, m, words(other, {"00"}), words(other, {"00"})), ValidationError);

  const auto big = make_space(HammingSpace("01", 3));
  const auto mb = MFunction::diameter(big);
  const auto eight = words(big, {"000", "001", "010", "011", "100", "101", "110", "111"});
  CHECK_THROWS_AS(brute_force_subset_distance(*big, mb, eight, eight), SizeError);
  CHECK(subset_distance(*big, mb, eight, eight).value == 0);
}

TEST_CASE("symmetric_difference_reduce") {
  const auto h = make_space(HammingSpace("xyz", 1));
  const auto [a, b] = symmetric_difference_reduce(words(h, {"x", "y"}), words(h, {"y", "z"}));
  CHECK(a == words(h, {"x"}));
  CHECK(b == words(h, {"z"}));
  const auto s = words(h, {"x", "y"});
  CHECK(symmetric_difference_reduce(s, s).first.empty());
  CHECK(symmetric_difference_reduce(s, s).second.empty());
  const auto t = words(h, {"z"});
  CHECK(symmetric_difference_reduce(s, t).first == s);
  CHECK(symmetric_difference_reduce(s, t).second == t);
}

TEST_CASE("sequence_subset_distance examples and literal evaluator") {
  CHECK(sequence_subset_distance("01", 3, {"000"}, {"000", "111"}) == 3);
  CHECK(sequence_subset_distance("01", 2, {"00", "11"}, {"01", "10"}) == 2);
  CHECK(sequence_subset_distance("01", 2, {"00", "11"}, {"00", "11"}) == 0);

  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const auto space = random_hamming_space(rng);
    const auto& h = std::get<HammingSpace>(space->params());
    const auto pool = element_pool(*space, rng, 10);
    const auto a = random_set(space, rng, pool, uniform_size(rng, 0, 5));
    const auto b = random_set(space, rng, pool, uniform_size(rng, 0, 5));
    std::vector<std::string> wa, wb;
    for (const auto& e : a.elements()) wa.push_back(std::get<Word>(e).letters);
    for (const auto& e : b.elements()) wb.push_back(std::get<Word>(e).letters);
    CHECK(sequence_subset_distance(h.alphabet(), h.length(), wa, wb) ==
          sequence_subset_oracle(wa, wb, h.length()));
  }
}

TEST_CASE("assignment route equals brute force on every space kind") {
  Rng rng(1234);
  for (int kind = 0; kind < 3; ++kind) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto space = pick_space(rng, kind);
      const auto m = trial % 2 ? MFunction::eccentricity(space) : MFunction::diameter(space);
      const auto pool = element_pool(*space, rng, 9);
      const auto a = random_set(space, rng, pool, uniform_size(rng, 0, 6));
      const auto b = random_set(space, rng, pool, uniform_size(rng, 0, 6));
      const auto fast = subset_distance(*space, m, a, b);
      const auto slow = brute_force_subset_distance(*space, m, a, b);
      if (kind == 1) {
        CHECK(std::abs(fast.value - slow.value) <= kTolerance);
      } else {
        CHECK(fast.value == slow.value);
      }
      // Unreduced assignment agrees too.
      CHECK(std::abs(subset_distance(*space, m, a, b, {.reduce = false}).value - fast.value) <= kTolerance);
    }
  }
}

TEST_CASE("witness fixes the intersection and attains the value") {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const auto space = pick_space(rng, trial % 3);
    const auto m = MFunction::eccentricity(space);
    const auto pool = element_pool(*space, rng, 7);
    const auto a = random_set(space, rng, pool, uniform_size(rng, 0, 6));
    const auto b = random_set(space, rng, pool, uniform_size(rng, 0, 6));
    const auto r = subset_distance(*space, m, a, b);
    const PointSet& source = r.swapped ? b : a;
    const PointSet& target = r.swapped ? a : b;
    for (const auto& [x, y] : r.witness.pairs)
      if (target.contains(x)) CHECK(x == y);
    CHECK(std::abs(chi_distance(*space, m, source, target, r.witness) - r.value) <= kTolerance);
    const PointSet& rs = r.swapped ? r.reduced_b : r.reduced_a;
    const PointSet& rt = r.swapped ? r.reduced_a : r.reduced_b;
    CHECK(chi_distance(*space, m, rs, rt, r.reduced_witness) == r.value);
  }
}

TEST_CASE("metric axioms over all cardinality orderings") {
  Rng rng(2024);
  int orderings[3] = {0, 0, 0};
  for (int trial = 0; trial < 600; ++trial) {
    const auto space = pick_space(rng, trial % 3);
    const auto m = trial % 2 ? MFunction::eccentricity(space) : MFunction::diameter(space);
    const auto pool = element_pool(*space, rng, 8);
    const auto x1 = random_set(space, rng, pool, uniform_size(rng, 0, 5));
    const auto x2 = random_set(space, rng, pool, uniform_size(rng, 0, 5));
    const auto x3 = random_set(space, rng, pool, uniform_size(rng, 0, 5));
    const auto d = [&](const PointSet& p, const PointSet& q) { return subset_distance(*space, m, p, q).value; };
    const auto lo = std::min(x1.size(), x2.size());
    const auto hi = std::max(x1.size(), x2.size());
    orderings[x3.size() < lo ? 1 : x3.size() <= hi ? 0 : 2]++;
    CHECK(d(x1, x2) >= 0);
    CHECK(d(x1, x2) == d(x2, x1));
    CHECK((d(x1, x2) == 0) == (x1 == x2));
    CHECK(d(x1, x1) == 0);
    CHECK(d(x1, x2) <= d(x1, x3) + d(x3, x2) + kTolerance);
  }
  CHECK(orderings[0] > 0);
  CHECK(orderings[1] > 0);
  CHECK(orderings[2] > 0);
}

TEST_CASE("monotone under growing the larger set") {
  Rng rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const auto space = pick_space(rng, trial % 3);
    const auto m = MFunction::eccentricity(space);
    const auto pool = element_pool(*space, rng, 10);
    const auto x2 = random_set(space, rng, pool, uniform_size(rng, 1, 6));
    const auto x1 = random_set(space, rng, pool, uniform_size(rng, 0, x2.size()));
    if (x1.size() > x2.size()) continue;
    // A random subset of x2 that is still at least as large as x1.
    std::vector<Element> kept(x2.elements().begin(), x2.elements().end());
    std::shuffle(kept.begin(), kept.end(), rng);
    kept.resize(uniform_size(rng, x1.size(), x2.size()));
    const PointSet x2_sub(space, kept);
    CHECK(subset_distance(*space, m, x1, x2_sub).value <= subset_distance(*space, m, x1, x2).value + kTolerance);

    std::vector<Element> grown(x2.elements().begin(), x2.elements().end());
    grown.push_back(sample_element(*space, rng));
    CHECK(subset_distance(*space, m, x1, x2).value <=
          subset_distance(*space, m, x1, PointSet(space, grown)).value + kTolerance);
  }
}

TEST_CASE("different cardinalities are at least half an M value apart") {
  Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto space = pick_space(rng, trial % 3);
    const auto m = MFunction::eccentricity(space);
    const auto pool = element_pool(*space, rng, 8);
    const auto a = random_set(space, rng, pool, uniform_size(rng, 0, 5));
    const auto b = random_set(space, rng, pool, uniform_size(rng, 0, 5));
    if (a.size() == b.size()) continue;
    const double bound = m.value(pool.front()) / 2;
    CHECK(subset_distance(*space, m, a, b).value >= bound - kTolerance);
  }
}
