#include "fst/grade.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <unordered_set>

#include <fmt/format.h>

namespace fst {

Grade::Grade(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) throw PreconditionError("grade denominator must be positive");
  if (numerator < 0 || numerator > denominator) {
    throw PreconditionError(fmt::format("grade {}/{} lies outside [0, 1]", numerator, denominator));
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
  if (den_ > kMaxDenominator) {
    throw PreconditionError(fmt::format("grade denominator {} exceeds {}", den_, kMaxDenominator));
  }
}

Grade grade_complement(Grade g) { return Grade(g.denominator() - g.numerator(), g.denominator()); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(fmt::format("malformed grade '{}'", whole));
  }
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError(fmt::format("grade '{}' is out of range", whole));
  }
  return value;
}

}  // namespace

Grade parse_grade(std::string_view text) {
  const std::string_view s = trim(text);
  try {
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      return Grade(parse_digits(trim(s.substr(0, slash)), s), parse_digits(trim(s.substr(slash + 1)), s));
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      const std::string_view int_part = s.substr(0, dot);
      const std::string_view frac = s.substr(dot + 1);
      if (frac.size() > 6) throw ParseError(fmt::format("grade '{}' has more than 6 fractional digits", s));
      const std::int64_t whole = int_part.empty() ? 0 : parse_digits(int_part, s);
      std::int64_t den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      const std::int64_t num = frac.empty() ? 0 : parse_digits(frac, s);
      if (int_part.empty() && frac.empty()) throw ParseError(fmt::format("malformed grade '{}'", s));
      return Grade(whole * den + num, den);
    }
    return Grade(parse_digits(s, s), 1);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string to_string(Grade g) {
  if (g.is_zero()) return "0";
  if (g.is_one()) return "1";
  return fmt::format("{}/{}", g.numerator(), g.denominator());
}

Universe::Universe(std::vector<std::string> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw PreconditionError("universe must be non-empty");
  std::unordered_set<std::string> seen;
  for (const auto& e : elements_) {
    if (!seen.insert(e).second) throw PreconditionError(fmt::format("duplicate universe element '{}'", e));
  }
}

std::optional<std::size_t> Universe::index_of(std::string_view name) const {
  auto it = std::find(elements_.begin(), elements_.end(), name);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

UniversePtr make_universe(std::vector<std::string> elements) {
  return std::make_shared<const Universe>(std::move(elements));
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) { return a == b || *a == *b; }

FuzzySet::FuzzySet(UniversePtr universe, std::vector<Grade> grades)
    : universe_(std::move(universe)), grades_(std::move(grades)) {
  if (grades_.size() != universe_->size()) {
    throw PreconditionError(
        fmt::format("fuzzy set has {} grades for a universe of {}", grades_.size(), universe_->size()));
  }
}

FuzzySet FuzzySet::constant(UniversePtr universe, Grade g) {
  std::vector<Grade> grades(universe->size(), g);
  return FuzzySet(std::move(universe), std::move(grades));
}

bool FuzzySet::is_zero() const noexcept {
  return std::all_of(grades_.begin(), grades_.end(), [](Grade g) { return g.is_zero(); });
}

bool operator==(const FuzzySet& a, const FuzzySet& b) {
  return same_universe(a.universe_, b.universe_) && a.grades_ == b.grades_;
}

namespace {

void require_same(const FuzzySet& a, const FuzzySet& b) {
  if (!same_universe(a.universe_ptr(), b.universe_ptr())) throw MismatchError("fuzzy sets over different universes");
}

template <class Op>
FuzzySet zip(const FuzzySet& a, const FuzzySet& b, Op op) {
  require_same(a, b);
  std::vector<Grade> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a[i], b[i]);
  return FuzzySet(a.universe_ptr(), std::move(out));
}

}  // namespace

FuzzySet fuzzy_union(const FuzzySet& a, const FuzzySet& b) {
  return zip(a, b, [](Grade x, Grade y) { return std::max(x, y); });
}

FuzzySet fuzzy_intersection(const FuzzySet& a, const FuzzySet& b) {
  return zip(a, b, [](Grade x, Grade y) { return std::min(x, y); });
}

FuzzySet fuzzy_complement(const FuzzySet& a) {
  std::vector<Grade> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = grade_complement(a[i]);
  return FuzzySet(a.universe_ptr(), std::move(out));
}

bool fuzzy_leq(const FuzzySet& a, const FuzzySet& b) {
  require_same(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

GradeLattice::GradeLattice(std::vector<Grade> grades) : grades_(std::move(grades)) {
  std::sort(grades_.begin(), grades_.end());
  grades_.erase(std::unique(grades_.begin(), grades_.end()), grades_.end());
  if (!contains(Grade::zero()) || !contains(Grade::one())) {
    throw PreconditionError("grade lattice must contain 0 and 1");
  }
  for (Grade g : grades_) {
    if (!contains(grade_complement(g))) {
      throw PreconditionError(fmt::format("grade lattice is missing the complement of {}", to_string(g)));
    }
  }
}

GradeLattice GradeLattice::with_denominator(std::int64_t n) {
  if (n <= 0) throw PreconditionError("lattice denominator must be positive");
  std::vector<Grade> grades;
  grades.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t i = 0; i <= n; ++i) grades.emplace_back(i, n);
  return GradeLattice(std::move(grades));
}

bool GradeLattice::contains(Grade g) const { return std::binary_search(grades_.begin(), grades_.end(), g); }

std::optional<std::size_t> GradeLattice::index_of(Grade g) const {
  auto it = std::lower_bound(grades_.begin(), grades_.end(), g);
  if (it == grades_.end() || *it != g) return std::nullopt;
  return static_cast<std::size_t>(it - grades_.begin());
}

GradeLattice lattice_close(std::span<const Grade> seeds) {
  std::set<Grade> closed{Grade::zero(), Grade::one()};
  for (Grade g : seeds) {
    closed.insert(g);
    closed.insert(grade_complement(g));
  }
  return GradeLattice(std::vector<Grade>(closed.begin(), closed.end()));
}

std::string to_string(const GradeLattice& lattice) {
  std::string out = "{";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (i) out += ", ";
    out += to_string(lattice[i]);
  }
  return out + "}";
}

}  // namespace fst
