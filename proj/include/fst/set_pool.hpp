#pragma once

// Every lattice-representable fuzzy soft set of one frame, indexed in
// canonical order, with lookup tables for the lattice operations. Index 0 is
// the null set and the last index is the all-one set.

#include <cstdint>
#include <span>
#include <vector>

#include "fst/grade.hpp"
#include "fst/relations.hpp"
#include "fst/soft_point.hpp"
#include "fst/soft_set.hpp"

namespace fst {

inline constexpr std::uint64_t kDefaultPoolCap = 4096;

class SetPool {
 public:
  using Index = std::uint32_t;
  static constexpr std::uint32_t npos = UINT32_MAX;

  /// Throws CapExceeded when |lattice|^cells exceeds cap.
  SetPool(FramePtr frame, GradeLattice lattice, std::uint64_t cap = kDefaultPoolCap);

  const FramePtr& frame() const noexcept { return frame_; }
  const GradeLattice& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return sets_.size(); }
  Index null() const noexcept { return 0; }
  Index full() const noexcept { return static_cast<Index>(sets_.size() - 1); }

  const FuzzySoftSet& set(Index i) const { return sets_[i]; }
  /// Throws PreconditionError unless g lies on the lattice.
  Index index_of(const FuzzySoftSet& g) const;

  Index meet(Index a, Index b) const { return meet_[a * size() + b]; }
  Index join(Index a, Index b) const { return join_[a * size() + b]; }
  Index complement(Index a) const { return complement_[a]; }
  Index relative(Index a, Index carrier) const { return meet(carrier, complement(a)); }
  bool leq(Index a, Index b) const { return up_.test(a, b); }
  /// Sets at or below a, as a bit row over indices.
  std::span<const std::uint64_t> below(Index a) const { return down_.row(a); }
  bool disjoint(Index a, Index b, Disjointness mode) const {
    return mode == Disjointness::pointwise ? meet(a, b) == 0 : (elements_[a] & elements_[b]) == 0;
  }
  bool crisp(Index a) const { return crisp_[a] != 0; }
  /// The set equal to g on the cells where k is zero and zero elsewhere.
  Index restrict_off(Index g, Index k) const;

  /// Lattice points in enumerate_points order; positions index point bit rows.
  std::size_t point_count() const noexcept { return points_.size(); }
  const FuzzySoftPoint& point(std::size_t pos) const { return points_[pos]; }
  Index point_set(std::size_t pos) const { return point_sets_[pos]; }
  /// Position of a single-support set among the points, or npos.
  std::uint32_t point_position(Index a) const { return point_pos_[a]; }
  /// Points lying in a.
  std::span<const std::uint64_t> points_in(Index a) const { return points_in_.row(a); }
  std::size_t point_words() const noexcept { return (points_.size() + 63) / 64 == 0 ? 1 : (points_.size() + 63) / 64; }

 private:
  Index encode(std::span<const std::uint8_t> digits) const;

  FramePtr frame_;
  GradeLattice lattice_;
  std::size_t cells_;
  std::vector<std::uint8_t> digits_;
  std::vector<FuzzySoftSet> sets_;
  std::vector<std::uint16_t> meet_, join_;
  std::vector<Index> complement_;
  std::vector<std::uint64_t> elements_;
  std::vector<char> crisp_;
  BitMatrix up_, down_;
  std::vector<FuzzySoftPoint> points_;
  std::vector<Index> point_sets_;
  std::vector<std::uint32_t> point_pos_;
  BitMatrix points_in_;
};

}  // namespace fst
