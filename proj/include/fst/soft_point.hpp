#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fst/soft_set.hpp"

namespace fst {

inline constexpr std::uint64_t kDefaultPointCap = 1'000'000;

/// A fuzzy soft set that is non-zero at exactly one parameter (the support).
class FuzzySoftPoint {
 public:
  /// Throws PreconditionError when value is the zero fuzzy set.
  FuzzySoftPoint(FramePtr frame, std::size_t support, FuzzySet value);

  const Frame& frame() const noexcept { return *frame_; }
  const FramePtr& frame_ptr() const noexcept { return frame_; }
  std::size_t support() const noexcept { return support_; }
  const std::string& support_name() const { return frame_->parameters[support_]; }
  const FuzzySet& value() const noexcept { return value_; }

  friend bool operator==(const FuzzySoftPoint& a, const FuzzySoftPoint& b);
  /// Parameter-major, then lexicographic by grade vector.
  friend std::strong_ordering operator<=>(const FuzzySoftPoint& a, const FuzzySoftPoint& b);

 private:
  FramePtr frame_;
  std::size_t support_;
  FuzzySet value_;
};

FuzzySoftSet point_as_fss(const FuzzySoftPoint& p);

/// The point a single-support set denotes. Throws PreconditionError when g is
/// null or non-zero at two or more parameters.
FuzzySoftPoint point_of_fss(const FuzzySoftSet& g);

/// Same support, value 1 - g(e). Throws PreconditionError when the value is
/// all-one, since the complement would be zero and not a point.
FuzzySoftPoint point_complement(const FuzzySoftPoint& p);

/// p.value <= h(e) at the support e. h may live over a different parameter
/// set; throws MismatchError when e is not one of its parameters.
bool point_in(const FuzzySoftPoint& p, const FuzzySoftSet& h);

/// One point per non-zero parameter of g; their union is g.
std::vector<FuzzySoftPoint> canonical_decomposition(const FuzzySoftSet& g);

/// |A| * (|L|^|U| - 1), saturating.
std::uint64_t count_points(const Frame& frame, const GradeLattice& lattice);

/// Every point whose value is a non-zero lattice vector, parameter-major then
/// lexicographic. Throws CapExceeded with the exact count beyond cap.
std::vector<FuzzySoftPoint> enumerate_points(const FramePtr& frame, const GradeLattice& lattice,
                                             std::uint64_t cap = kDefaultPointCap);

/// How a pair of points is selected for a separation test.
enum class PairRelation { distinct, disjoint };

std::string_view to_string(PairRelation relation);
PairRelation parse_pair_relation(std::string_view text);

bool points_related(const FuzzySoftPoint& p, const FuzzySoftPoint& q, PairRelation relation, Disjointness mode);

/// "e1 @ {x: 1/2, y: 0}".
std::string render(const FuzzySoftPoint& p);

}  // namespace fst
