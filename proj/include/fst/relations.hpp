#pragma once

// Precomputed incidence data between the points, opens and closed sets of one
// space. The deciders scan these bit rows instead of re-evaluating set
// formulas, and the auditor fills them from lookup tables.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "fst/soft_point.hpp"
#include "fst/soft_set.hpp"

namespace fst {

class BitMatrix {
 public:
  /// Resizes and clears; keeps the old allocation when it is large enough.
  void reset(std::size_t rows, std::size_t cols) {
    rows_ = rows;
    cols_ = cols;
    words_ = cols == 0 ? 1 : (cols + 63) / 64;
    data_.assign(rows_ * words_, 0);
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  void set(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  bool test(std::size_t r, std::size_t c) const { return (data_[r * words_ + c / 64] >> (c % 64)) & 1U; }
  std::span<const std::uint64_t> row(std::size_t r) const {
    return std::span<const std::uint64_t>(data_).subspan(r * words_, words_);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 1;
  std::vector<std::uint64_t> data_;
};

namespace bits {

inline bool any(std::span<const std::uint64_t> a) {
  for (auto w : a)
    if (w) return true;
  return false;
}
inline bool any_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}
inline bool any_andnot(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return true;
  return false;
}
inline bool any_xor(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] ^ b[i]) return true;
  return false;
}
template <class F>
void for_each(std::span<const std::uint64_t> a, F&& f) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::uint64_t w = a[i]; w; w &= w - 1) f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  }
}

}  // namespace bits

/// Which groups of matrices a scan needs.
enum RelationNeeds : unsigned {
  kNeedPoints = 1,        // point_in_open, point_disjoint_point
  kNeedPointClosed = 2,   // point_in_closed, point_disjoint_closed, point_is_closed
  kNeedOpenPairs = 4,     // open_disjoint, open_covers, open_nonempty, open_is_closed, open_is_carrier
  kNeedClosedPairs = 8,   // closed_under_open, closed_disjoint
  kNeedAll = 15,
};

struct FamilyRelations {
  std::vector<const FuzzySoftPoint*> points;
  std::vector<const FuzzySoftSet*> opens;
  std::vector<const FuzzySoftSet*> closeds;
  unsigned built = 0;

  BitMatrix point_in_open;          // P x O
  BitMatrix point_disjoint_point;   // P x P, per disjointness mode
  BitMatrix point_in_closed;        // P x C
  BitMatrix point_disjoint_closed;  // P x C
  std::vector<char> point_is_closed;
  BitMatrix open_disjoint;          // O x O
  BitMatrix open_covers;            // O x O: union is the carrier
  std::vector<char> open_nonempty, open_is_closed, open_is_carrier;
  BitMatrix closed_under_open;      // C x O: closed <= open
  BitMatrix closed_disjoint;        // C x C
};

class FuzzySoftTopology;

/// Fills rel from set-level predicates. points must be the points of the
/// carrier; they are referenced, not copied.
void build_relations(FamilyRelations& rel, const FuzzySoftTopology& t, std::span<const FuzzySoftPoint> points,
                     Disjointness mode, unsigned needs);

}  // namespace fst
