#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fst/error.hpp"

namespace fst {

/// Exact membership degree in [0, 1], stored in lowest terms so that equal
/// values are structurally equal.
class Grade {
 public:
  /// Largest accepted denominator; keeps cross products inside 64 bits.
  static constexpr std::int64_t kMaxDenominator = 1'000'000'000;

  constexpr Grade() = default;
  Grade(std::int64_t numerator, std::int64_t denominator);

  static constexpr Grade zero() { return Grade(); }
  static Grade one() { return Grade(1, 1); }

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_one() const noexcept { return num_ == den_; }

  friend bool operator==(const Grade&, const Grade&) = default;
  friend std::strong_ordering operator<=>(const Grade& a, const Grade& b) noexcept {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// 1 - g.
Grade grade_complement(Grade g);

/// Parses "p/q", "0", "1" or a decimal with at most six fractional digits.
Grade parse_grade(std::string_view text);

/// Canonical text: "0", "1" or "p/q" in lowest terms.
std::string to_string(Grade g);

/// Ordered list of distinct element identifiers.
class Universe {
 public:
  explicit Universe(std::vector<std::string> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::string>& elements() const noexcept { return elements_; }
  const std::string& operator[](std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::vector<std::string> elements_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> elements);

/// True when both pointers denote the same universe (by identity or value).
bool same_universe(const UniversePtr& a, const UniversePtr& b);

/// A fuzzy subset of a universe: one grade per element.
class FuzzySet {
 public:
  FuzzySet(UniversePtr universe, std::vector<Grade> grades);

  static FuzzySet constant(UniversePtr universe, Grade g);

  const Universe& universe() const noexcept { return *universe_; }
  const UniversePtr& universe_ptr() const noexcept { return universe_; }
  std::span<const Grade> grades() const noexcept { return grades_; }
  Grade operator[](std::size_t i) const { return grades_[i]; }
  std::size_t size() const noexcept { return grades_.size(); }
  bool is_zero() const noexcept;

  friend bool operator==(const FuzzySet& a, const FuzzySet& b);

 private:
  UniversePtr universe_;
  std::vector<Grade> grades_;
};

FuzzySet fuzzy_union(const FuzzySet& a, const FuzzySet& b);
FuzzySet fuzzy_intersection(const FuzzySet& a, const FuzzySet& b);
FuzzySet fuzzy_complement(const FuzzySet& a);
bool fuzzy_leq(const FuzzySet& a, const FuzzySet& b);

/// Finite, complement-closed set of grades containing 0 and 1, sorted
/// ascending. Bounds every quantifier over points and sets.
class GradeLattice {
 public:
  /// Validates; throws PreconditionError when 0, 1 or a complement is missing.
  explicit GradeLattice(std::vector<Grade> grades);

  /// {0, 1/n, 2/n, ..., 1}.
  static GradeLattice with_denominator(std::int64_t n);

  std::span<const Grade> grades() const noexcept { return grades_; }
  std::size_t size() const noexcept { return grades_.size(); }
  Grade operator[](std::size_t i) const { return grades_[i]; }
  bool contains(Grade g) const;
  std::optional<std::size_t> index_of(Grade g) const;

  friend bool operator==(const GradeLattice&, const GradeLattice&) = default;

 private:
  std::vector<Grade> grades_;
};

/// Smallest lattice containing the seeds, 0 and 1, closed under complement.
GradeLattice lattice_close(std::span<const Grade> seeds);

std::string to_string(const GradeLattice& lattice);

}  // namespace fst
