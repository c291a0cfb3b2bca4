#include "fst/soft_point.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

namespace fst {

FuzzySoftPoint::FuzzySoftPoint(FramePtr frame, std::size_t support, FuzzySet value)
    : frame_(std::move(frame)), support_(support), value_(std::move(value)) {
  if (support_ >= frame_->parameters.size()) throw PreconditionError("point support outside the parameter set");
  if (!same_universe(value_.universe_ptr(), frame_->universe)) throw MismatchError("point value over another universe");
  if (value_.is_zero()) throw PreconditionError("a fuzzy soft point needs a non-zero value");
}

bool operator==(const FuzzySoftPoint& a, const FuzzySoftPoint& b) {
  return a.support_ == b.support_ && a.value_ == b.value_ && same_frame(a.frame_, b.frame_);
}

std::strong_ordering operator<=>(const FuzzySoftPoint& a, const FuzzySoftPoint& b) {
  if (auto c = a.support_ <=> b.support_; c != 0) return c;
  auto x = a.value_.grades();
  auto y = b.value_.grades();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

FuzzySoftSet point_as_fss(const FuzzySoftPoint& p) {
  std::vector<Grade> cells(p.frame().cells());
  const auto v = p.value().grades();
  std::copy(v.begin(), v.end(), cells.begin() + static_cast<std::ptrdiff_t>(p.support() * v.size()));
  return FuzzySoftSet(p.frame_ptr(), std::move(cells));
}

FuzzySoftPoint point_of_fss(const FuzzySoftSet& g) {
  std::optional<std::size_t> support;
  for (std::size_t e = 0; e < g.parameter_count(); ++e) {
    if (g.row_is_null(e)) continue;
    if (support) throw PreconditionError("set is non-zero at more than one parameter; not a point");
    support = e;
  }
  if (!support) throw PreconditionError("the null set is not a point");
  return FuzzySoftPoint(g.frame_ptr(), *support, g.value(*support));
}

FuzzySoftPoint point_complement(const FuzzySoftPoint& p) {
  FuzzySet c = fuzzy_complement(p.value());
  if (c.is_zero()) throw PreconditionError("complement is not a point: value is all-one");
  return FuzzySoftPoint(p.frame_ptr(), p.support(), std::move(c));
}

bool point_in(const FuzzySoftPoint& p, const FuzzySoftSet& h) {
  if (!same_universe(p.frame().universe, h.frame().universe)) throw MismatchError("point and set over different universes");
  std::size_t row = p.support();
  if (!same_frame(p.frame_ptr(), h.frame_ptr())) {
    auto idx = h.frame().parameters.index_of(p.support_name());
    if (!idx) {
      throw MismatchError(fmt::format("not comparable: parameter '{}' is not a parameter of the set", p.support_name()));
    }
    row = *idx;
  }
  const auto v = p.value().grades();
  const auto r = h.row(row);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > r[i]) return false;
  }
  return true;
}

std::vector<FuzzySoftPoint> canonical_decomposition(const FuzzySoftSet& g) {
  std::vector<FuzzySoftPoint> out;
  for (std::size_t e = 0; e < g.parameter_count(); ++e) {
    if (!g.row_is_null(e)) out.emplace_back(g.frame_ptr(), e, g.value(e));
  }
  return out;
}

std::uint64_t count_points(const Frame& frame, const GradeLattice& lattice) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t vectors = 1;
  for (std::size_t i = 0; i < frame.universe->size(); ++i) {
    if (vectors > kMax / lattice.size()) return kMax;
    vectors *= lattice.size();
  }
  const std::uint64_t nonzero = vectors - 1;
  if (nonzero != 0 && frame.parameters.size() > kMax / nonzero) return kMax;
  return nonzero * frame.parameters.size();
}

std::vector<FuzzySoftPoint> enumerate_points(const FramePtr& frame, const GradeLattice& lattice, std::uint64_t cap) {
  const std::uint64_t count = count_points(*frame, lattice);
  if (count > cap) throw CapExceeded("fuzzy soft points", count, cap);
  const std::size_t n = frame->universe->size();
  std::vector<FuzzySoftPoint> out;
  out.reserve(count);
  for (std::size_t e = 0; e < frame->parameters.size(); ++e) {
    std::vector<std::size_t> digits(n, 0);
    while (true) {
      // Advance first so the all-zero vector is skipped.
      std::size_t i = n;
      while (i-- > 0) {
        if (++digits[i] < lattice.size()) break;
        digits[i] = 0;
      }
      if (std::all_of(digits.begin(), digits.end(), [](std::size_t d) { return d == 0; })) break;
      std::vector<Grade> grades(n);
      for (std::size_t x = 0; x < n; ++x) grades[x] = lattice[digits[x]];
      out.emplace_back(frame, e, FuzzySet(frame->universe, std::move(grades)));
    }
  }
  return out;
}

std::string_view to_string(PairRelation relation) {
  return relation == PairRelation::distinct ? "distinct" : "disjoint";
}

PairRelation parse_pair_relation(std::string_view text) {
  if (text == "distinct") return PairRelation::distinct;
  if (text == "disjoint") return PairRelation::disjoint;
  throw ParseError(fmt::format("unknown pair relation '{}'", text));
}

bool points_related(const FuzzySoftPoint& p, const FuzzySoftPoint& q, PairRelation relation, Disjointness mode) {
  if (relation == PairRelation::distinct) return p != q;
  return fss_disjoint(point_as_fss(p), point_as_fss(q), mode);
}

std::string render(const FuzzySoftPoint& p) {
  std::string out = p.support_name() + " @ {";
  const auto& u = p.frame().universe;
  for (std::size_t x = 0; x < u->size(); ++x) {
    if (x) out += ", ";
    out += (*u)[x];
    out += ": ";
    out += to_string(p.value()[x]);
  }
  return out + "}";
}

}  // namespace fst
