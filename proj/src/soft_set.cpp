#include "fst/soft_set.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_set>
#include <utility>

#include <fmt/format.h>

namespace fst {

ParameterSet::ParameterSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw PreconditionError("parameter set must be non-empty");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw PreconditionError(fmt::format("duplicate parameter '{}'", n));
  }
}

std::optional<std::size_t> ParameterSet::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

FramePtr make_frame(std::vector<std::string> universe, std::vector<std::string> parameters) {
  return make_frame(make_universe(std::move(universe)), ParameterSet(std::move(parameters)));
}

FramePtr make_frame(UniversePtr universe, ParameterSet parameters) {
  return std::make_shared<const Frame>(Frame{std::move(universe), std::move(parameters)});
}

bool same_frame(const FramePtr& a, const FramePtr& b) { return a == b || *a == *b; }

FuzzySoftSet::FuzzySoftSet(FramePtr frame, std::vector<Grade> cells)
    : frame_(std::move(frame)), cells_(std::move(cells)) {
  if (cells_.size() != frame_->cells()) {
    throw PreconditionError(fmt::format("fuzzy soft set has {} cells, frame needs {}", cells_.size(), frame_->cells()));
  }
}

FuzzySoftSet::FuzzySoftSet(FramePtr frame, const std::vector<FuzzySet>& assignment) : frame_(std::move(frame)) {
  if (assignment.size() != frame_->parameters.size()) {
    throw PreconditionError("assignment must cover exactly the parameter set");
  }
  cells_.reserve(frame_->cells());
  for (const auto& f : assignment) {
    if (!same_universe(f.universe_ptr(), frame_->universe)) throw MismatchError("assigned fuzzy set over another universe");
    cells_.insert(cells_.end(), f.grades().begin(), f.grades().end());
  }
}

FuzzySet FuzzySoftSet::value(std::size_t parameter) const {
  auto r = row(parameter);
  return FuzzySet(frame_->universe, std::vector<Grade>(r.begin(), r.end()));
}

bool FuzzySoftSet::is_null() const noexcept {
  return std::all_of(cells_.begin(), cells_.end(), [](Grade g) { return g.is_zero(); });
}

bool FuzzySoftSet::row_is_null(std::size_t parameter) const noexcept {
  auto r = row(parameter);
  return std::all_of(r.begin(), r.end(), [](Grade g) { return g.is_zero(); });
}

bool operator==(const FuzzySoftSet& a, const FuzzySoftSet& b) {
  return a.cells_ == b.cells_ && same_frame(a.frame_, b.frame_);
}

std::strong_ordering operator<=>(const FuzzySoftSet& a, const FuzzySoftSet& b) {
  return std::lexicographical_compare_three_way(a.cells_.begin(), a.cells_.end(), b.cells_.begin(), b.cells_.end());
}

std::string_view to_string(Disjointness mode) {
  return mode == Disjointness::pointwise ? "pointwise" : "cross-parameter";
}

Disjointness parse_disjointness(std::string_view text) {
  if (text == "pointwise") return Disjointness::pointwise;
  if (text == "cross-parameter" || text == "cross_parameter") return Disjointness::cross_parameter;
  throw ParseError(fmt::format("unknown disjointness mode '{}'", text));
}

namespace {

void require_same(const FuzzySoftSet& g, const FuzzySoftSet& h) {
  if (!same_frame(g.frame_ptr(), h.frame_ptr())) {
    throw MismatchError("fuzzy soft sets over different universes or parameter sets");
  }
}

template <class Op>
FuzzySoftSet zip(const FuzzySoftSet& g, const FuzzySoftSet& h, Op op) {
  require_same(g, h);
  const auto a = g.cells();
  const auto b = h.cells();
  std::vector<Grade> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a[i], b[i]);
  return FuzzySoftSet(g.frame_ptr(), std::move(out));
}

}  // namespace

FuzzySoftSet fss_null(const FramePtr& frame) { return FuzzySoftSet(frame, std::vector<Grade>(frame->cells())); }

FuzzySoftSet fss_full(const FramePtr& frame) {
  return FuzzySoftSet(frame, std::vector<Grade>(frame->cells(), Grade::one()));
}

FuzzySoftSet fss_union(const FuzzySoftSet& g, const FuzzySoftSet& h) {
  return zip(g, h, [](Grade x, Grade y) { return std::max(x, y); });
}

FuzzySoftSet fss_intersection(const FuzzySoftSet& g, const FuzzySoftSet& h) {
  return zip(g, h, [](Grade x, Grade y) { return std::min(x, y); });
}

FuzzySoftSet fss_complement(const FuzzySoftSet& g) {
  const auto a = g.cells();
  std::vector<Grade> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = grade_complement(a[i]);
  return FuzzySoftSet(g.frame_ptr(), std::move(out));
}

FuzzySoftSet fss_complement(const FuzzySoftSet& g, const FuzzySoftSet& carrier) {
  require_same(g, carrier);
  return fss_complement(g);
}

FuzzySoftSet relative_complement(const FuzzySoftSet& g, const FuzzySoftSet& carrier) {
  return zip(g, carrier, [](Grade x, Grade c) { return std::min(c, grade_complement(x)); });
}

bool fss_leq(const FuzzySoftSet& g, const FuzzySoftSet& h) {
  require_same(g, h);
  const auto a = g.cells();
  const auto b = h.cells();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool fss_equal(const FuzzySoftSet& g, const FuzzySoftSet& h) {
  require_same(g, h);
  return g == h;
}

bool fss_is_null(const FuzzySoftSet& g) { return g.is_null(); }

bool fss_is_proper_subset(const FuzzySoftSet& g, const FuzzySoftSet& h) { return fss_leq(g, h) && g != h; }

bool fss_disjoint(const FuzzySoftSet& g, const FuzzySoftSet& h, Disjointness mode) {
  if (!same_universe(g.frame().universe, h.frame().universe)) {
    throw MismatchError("fuzzy soft sets over different universes");
  }
  const std::size_t n = g.universe_size();
  if (mode == Disjointness::pointwise) {
    require_same(g, h);
    const auto a = g.cells();
    const auto b = h.cells();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_zero() && !b[i].is_zero()) return false;
    }
    return true;
  }
  // min(g(a), h(b)) = 0 for all a, b  <=>  no element is positive in some row of both.
  for (std::size_t x = 0; x < n; ++x) {
    bool in_g = false;
    bool in_h = false;
    for (std::size_t a = 0; a < g.parameter_count(); ++a) in_g = in_g || !g.grade(a, x).is_zero();
    for (std::size_t b = 0; b < h.parameter_count(); ++b) in_h = in_h || !h.grade(b, x).is_zero();
    if (in_g && in_h) return false;
  }
  return true;
}

bool is_crisp(const FuzzySoftSet& g) {
  return std::all_of(g.cells().begin(), g.cells().end(), [](Grade x) { return x.is_zero() || x.is_one(); });
}

FuzzySoftSet extend_to(const FuzzySoftSet& g, const FramePtr& wider) {
  if (!same_universe(g.frame().universe, wider->universe)) throw MismatchError("cannot extend across universes");
  std::vector<Grade> cells(wider->cells());
  const std::size_t n = g.universe_size();
  for (std::size_t p = 0; p < g.parameter_count(); ++p) {
    auto idx = wider->parameters.index_of(g.frame().parameters[p]);
    if (!idx) {
      throw MismatchError(fmt::format("parameter '{}' is not in the target parameter set", g.frame().parameters[p]));
    }
    auto r = g.row(p);
    std::copy(r.begin(), r.end(), cells.begin() + static_cast<std::ptrdiff_t>(*idx * n));
  }
  return FuzzySoftSet(wider, std::move(cells));
}

std::string render(const FuzzySoftSet& g) {
  std::string out = "{";
  const auto& params = g.frame().parameters;
  const auto& universe = *g.frame().universe;
  for (std::size_t p = 0; p < params.size(); ++p) {
    if (p) out += ", ";
    out += params[p];
    out += ": {";
    for (std::size_t x = 0; x < universe.size(); ++x) {
      if (x) out += ", ";
      out += universe[x];
      out += ": ";
      out += to_string(g.grade(p, x));
    }
    out += "}";
  }
  return out + "}";
}

namespace {

class SetTextParser {
 public:
  SetTextParser(std::string_view text, const FramePtr& frame) : text_(text), frame_(frame) {}

  FuzzySoftSet parse() {
    std::vector<Grade> cells(frame_->cells());
    std::vector<char> seen_cell(cells.size(), 0), seen_param(frame_->parameters.size(), 0);
    const std::size_t n = frame_->universe->size();
    expect('{');
    if (!consume('}')) {
      do {
        const std::string param = identifier();
        auto p = frame_->parameters.index_of(param);
        if (!p) fail(fmt::format("unknown parameter '{}'", param));
        if (std::exchange(seen_param[*p], 1)) fail(fmt::format("parameter '{}' given twice", param));
        expect(':');
        expect('{');
        if (!consume('}')) {
          do {
            const std::string elem = identifier();
            auto x = frame_->universe->index_of(elem);
            if (!x) fail(fmt::format("unknown universe element '{}'", elem));
            if (std::exchange(seen_cell[*p * n + *x], 1)) fail(fmt::format("element '{}' given twice", elem));
            expect(':');
            cells[*p * n + *x] = grade_token();
          } while (consume(','));
          expect('}');
        }
      } while (consume(','));
      expect('}');
    }
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return FuzzySoftSet(frame_, std::move(cells));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, fmt::format("offset {}", pos_));
  }
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) ++pos_;
  }
  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c)) fail(fmt::format("expected '{}'", c));
  }
  static bool is_delim(char c) {
    return c == ':' || c == ',' || c == '{' || c == '}' || c == ' ' || c == '\t' || c == '\n';
  }
  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_delim(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }
  Grade grade_token() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '}') ++pos_;
    return parse_grade(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  const FramePtr& frame_;
  std::size_t pos_ = 0;
};

/// Per cell, the lattice grades not above the bound's grade.
std::vector<std::size_t> cell_choices(const FuzzySoftSet& bound, const GradeLattice& lattice) {
  std::vector<std::size_t> choices;
  choices.reserve(bound.cells().size());
  for (Grade c : bound.cells()) {
    auto grades = lattice.grades();
    choices.push_back(static_cast<std::size_t>(std::upper_bound(grades.begin(), grades.end(), c) - grades.begin()));
  }
  return choices;
}

}  // namespace

FuzzySoftSet parse_soft_set(std::string_view text, const FramePtr& frame) { return SetTextParser(text, frame).parse(); }

std::uint64_t count_lattice_subsets(const FuzzySoftSet& bound, const GradeLattice& lattice) {
  std::uint64_t count = 1;
  for (std::size_t k : cell_choices(bound, lattice)) {
    if (k != 0 && count > std::numeric_limits<std::uint64_t>::max() / k) return std::numeric_limits<std::uint64_t>::max();
    count *= k;
  }
  return count;
}

std::vector<FuzzySoftSet> lattice_subsets(const FuzzySoftSet& bound, const GradeLattice& lattice, std::uint64_t cap) {
  const std::uint64_t count = count_lattice_subsets(bound, lattice);
  if (count > cap) throw CapExceeded("lattice-representable subsets", count, cap);
  const auto choices = cell_choices(bound, lattice);
  std::vector<FuzzySoftSet> out;
  out.reserve(count);
  // Odometer over cells, last cell fastest: yields lexicographic order.
  std::vector<std::size_t> digits(choices.size(), 0);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<Grade> cells(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) cells[i] = lattice[digits[i]];
    out.emplace_back(bound.frame_ptr(), std::move(cells));
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < choices[i]) break;
      digits[i] = 0;
    }
  }
  return out;
}

bool lattice_representable(const FuzzySoftSet& g, const GradeLattice& lattice) {
  return std::all_of(g.cells().begin(), g.cells().end(), [&](Grade x) { return lattice.contains(x); });
}

std::vector<Grade> occurring_grades(std::span<const FuzzySoftSet> sets) {
  std::set<Grade> seen;
  for (const auto& s : sets) seen.insert(s.cells().begin(), s.cells().end());
  return {seen.begin(), seen.end()};
}

}  // namespace fst
