#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fst/grade.hpp"

namespace fst {

/// Ordered list of distinct parameter identifiers.
class ParameterSet {
 public:
  explicit ParameterSet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;

 private:
  std::vector<std::string> names_;
};

/// The (universe, parameter set) pair every set of one space shares.
struct Frame {
  UniversePtr universe;
  ParameterSet parameters;

  std::size_t cells() const noexcept { return universe->size() * parameters.size(); }
  friend bool operator==(const Frame& a, const Frame& b) {
    return same_universe(a.universe, b.universe) && a.parameters == b.parameters;
  }
};

using FramePtr = std::shared_ptr<const Frame>;

FramePtr make_frame(std::vector<std::string> universe, std::vector<std::string> parameters);
FramePtr make_frame(UniversePtr universe, ParameterSet parameters);
bool same_frame(const FramePtr& a, const FramePtr& b);

/// A map from parameters to fuzzy sets over the universe. Grades are stored
/// parameter-major so that the canonical order is plain lexicographic order.
class FuzzySoftSet {
 public:
  FuzzySoftSet(FramePtr frame, std::vector<Grade> cells);
  FuzzySoftSet(FramePtr frame, const std::vector<FuzzySet>& assignment);

  const Frame& frame() const noexcept { return *frame_; }
  const FramePtr& frame_ptr() const noexcept { return frame_; }
  std::size_t parameter_count() const noexcept { return frame_->parameters.size(); }
  std::size_t universe_size() const noexcept { return frame_->universe->size(); }

  Grade grade(std::size_t parameter, std::size_t element) const {
    return cells_[parameter * universe_size() + element];
  }
  std::span<const Grade> row(std::size_t parameter) const {
    return std::span<const Grade>(cells_).subspan(parameter * universe_size(), universe_size());
  }
  std::span<const Grade> cells() const noexcept { return cells_; }
  FuzzySet value(std::size_t parameter) const;

  bool is_null() const noexcept;
  bool row_is_null(std::size_t parameter) const noexcept;

  friend bool operator==(const FuzzySoftSet& a, const FuzzySoftSet& b);
  /// Canonical order: lexicographic over (parameter, element) cells.
  friend std::strong_ordering operator<=>(const FuzzySoftSet& a, const FuzzySoftSet& b);

 private:
  FramePtr frame_;
  std::vector<Grade> cells_;
};

enum class Disjointness { pointwise, cross_parameter };

std::string_view to_string(Disjointness mode);
Disjointness parse_disjointness(std::string_view text);

FuzzySoftSet fss_null(const FramePtr& frame);
FuzzySoftSet fss_full(const FramePtr& frame);
FuzzySoftSet fss_union(const FuzzySoftSet& g, const FuzzySoftSet& h);
FuzzySoftSet fss_intersection(const FuzzySoftSet& g, const FuzzySoftSet& h);

/// 1 - grade at every cell.
FuzzySoftSet fss_complement(const FuzzySoftSet& g);
/// As above, after checking that g has the carrier's shape.
FuzzySoftSet fss_complement(const FuzzySoftSet& g, const FuzzySoftSet& carrier);
/// carrier ∧ (1 - g): the complement taken inside the carrier. Equals
/// fss_complement when the carrier is the all-one set.
FuzzySoftSet relative_complement(const FuzzySoftSet& g, const FuzzySoftSet& carrier);

bool fss_leq(const FuzzySoftSet& g, const FuzzySoftSet& h);
bool fss_equal(const FuzzySoftSet& g, const FuzzySoftSet& h);
bool fss_is_null(const FuzzySoftSet& g);
bool fss_is_proper_subset(const FuzzySoftSet& g, const FuzzySoftSet& h);

/// pointwise: g ∧ h is null. cross_parameter: min(g(a), h(b)) is the zero
/// fuzzy set for every pair of parameters (a, b).
bool fss_disjoint(const FuzzySoftSet& g, const FuzzySoftSet& h, Disjointness mode);

/// Every grade is 0 or 1.
bool is_crisp(const FuzzySoftSet& g);

/// Re-expresses g over a frame whose parameter set contains g's parameters;
/// new parameters map to the zero fuzzy set.
FuzzySoftSet extend_to(const FuzzySoftSet& g, const FramePtr& wider);

/// "{e1: {x: 1/2, y: 0}, e2: {x: 0, y: 1}}" ordered by parameter, then element.
std::string render(const FuzzySoftSet& g);

/// Inverse of render. Omitted parameters or elements read as 0.
FuzzySoftSet parse_soft_set(std::string_view text, const FramePtr& frame);

/// Number of sets whose every cell is a lattice grade not above the bound's
/// cell. Saturates at UINT64_MAX.
std::uint64_t count_lattice_subsets(const FuzzySoftSet& bound, const GradeLattice& lattice);

/// All such sets in canonical order; throws CapExceeded beyond cap.
std::vector<FuzzySoftSet> lattice_subsets(const FuzzySoftSet& bound, const GradeLattice& lattice, std::uint64_t cap);

/// True when every cell of g is a lattice grade.
bool lattice_representable(const FuzzySoftSet& g, const GradeLattice& lattice);

/// Every distinct grade occurring in the sets.
std::vector<Grade> occurring_grades(std::span<const FuzzySoftSet> sets);

}  // namespace fst
