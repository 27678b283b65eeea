#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "subsetmetric/ground_space.hpp"
#include "subsetmetric/m_function.hpp"
#include "subsetmetric/point_set.hpp"

namespace subsetmetric {

/// An injection chi from a smaller set into a larger one, as explicit pairs.
struct Injection {
  std::vector<std::pair<Element, Element>> pairs;
  double chi_cost = 0.0;
};

struct SubsetDistanceResult {
  double value = 0.0;
  /// False when the witnesses map (a subset of) the first argument into the
  /// second; true when they map the second into the first.
  bool swapped = false;
  /// Optimal injection on the full sets, fixing the intersection pointwise.
  Injection witness;
  /// Optimal injection between the reduced sets.
  Injection reduced_witness;
  /// a \ b and b \ a, in argument order.
  PointSet reduced_a;
  PointSet reduced_b;
  /// Elements of the larger set outside the image of the witness.
  std::vector<Element> unmatched;
};

/// sum over x in a of d(x, chi(x)) plus sum over y in b \ chi(a) of M(y).
/// Throws OrientationError if |a| > |b| and ValidationError if chi is not an
/// injection from a into b.
double chi_distance(const GroundSpace& space, const MFunction& m, const PointSet& a,
                    const PointSet& b, const Injection& chi);

/// (a \ b, b \ a).
std::pair<PointSet, PointSet> symmetric_difference_reduce(const PointSet& a, const PointSet& b);

struct SubsetDistanceOptions {
  /// Strip the common elements before matching. The optimum is unchanged
  /// because some optimal injection fixes the intersection pointwise.
  bool reduce = true;
};

/// The subset metric d_S(a, b): the minimum chi-distance over all injections
/// from the smaller set into the larger. Solved as a square assignment whose
/// extra rows charge M for each unmatched element of the larger set.
///
/// Exactly symmetric: equal-size arguments are put in canonical order first,
/// so d_S(a, b) and d_S(b, a) run the same arithmetic.
SubsetDistanceResult subset_distance(const GroundSpace& space, const MFunction& m,
                                     const PointSet& a, const PointSet& b,
                                     SubsetDistanceOptions options = {});

inline constexpr std::size_t kBruteForceSubsetMax = 7;

/// Literal minimum over every injection, without the intersection reduction.
/// Throws SizeError when max(|a|, |b|) > kBruteForceSubsetMax.
SubsetDistanceResult brute_force_subset_distance(const GroundSpace& space, const MFunction& m,
                                                 const PointSet& a, const PointSet& b);

/// The DNA-storage sequence-subset distance: d_S on words of length L over
/// `alphabet` with M fixed to L.
double sequence_subset_distance(const std::string& alphabet, std::size_t length,
                                const std::vector<std::string>& a,
                                const std::vector<std::string>& b);

}  // namespace subsetmetric
