#include "fst/deciders.hpp"

#include <algorithm>
#include <cctype>

#include <fmt/format.h>

namespace fst {

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::T0: return "T0";
    case Axiom::T1: return "T1";
    case Axiom::T2: return "T2";
    case Axiom::points_closed: return "points-closed";
    case Axiom::regular: return "regular";
    case Axiom::normal: return "normal";
    case Axiom::T3: return "T3";
    case Axiom::T4: return "T4";
    case Axiom::connected: return "connected";
  }
  return "?";
}

Axiom parse_axiom(std::string_view text) {
  auto lower = [](std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
  };
  const std::string want = lower(text);
  for (Axiom a : kAllAxioms) {
    if (lower(to_string(a)) == want) return a;
  }
  throw ParseError(fmt::format("unknown axiom '{}'", text));
}

std::string_view to_string(RegularReading r) { return r == RegularReading::not_in ? "not-in" : "disjoint"; }

RegularReading parse_regular_reading(std::string_view text) {
  if (text == "not-in") return RegularReading::not_in;
  if (text == "disjoint") return RegularReading::disjoint;
  throw ParseError(fmt::format("unknown regular reading '{}'", text));
}

GradeLattice default_lattice(const FuzzySoftTopology& t) {
  std::vector<FuzzySoftSet> sets(t.opens().begin(), t.opens().end());
  sets.push_back(t.carrier());
  auto grades = occurring_grades(sets);
  return lattice_close(grades);
}

PairRelation pair_relation_for(Axiom a, std::optional<PairRelation> override_relation) {
  if (override_relation) return *override_relation;
  return a == Axiom::T0 ? PairRelation::disjoint : PairRelation::distinct;
}

unsigned relation_needs(Axiom a) {
  switch (a) {
    case Axiom::T0:
    case Axiom::T1: return kNeedPoints;
    case Axiom::T2: return kNeedPoints | kNeedOpenPairs;
    case Axiom::points_closed: return kNeedPointClosed;
    case Axiom::regular:
    case Axiom::T3: return kNeedPoints | kNeedPointClosed | kNeedOpenPairs | kNeedClosedPairs;
    case Axiom::normal: return kNeedOpenPairs | kNeedClosedPairs;
    case Axiom::T4: return kNeedPoints | kNeedOpenPairs | kNeedClosedPairs;
    case Axiom::connected: return kNeedOpenPairs;
  }
  return kNeedAll;
}

namespace {

bool uses_points(Axiom a) { return a != Axiom::normal && a != Axiom::connected; }
bool uses_pairs(Axiom a) { return a == Axiom::T0 || a == Axiom::T1 || a == Axiom::T2 || a == Axiom::T3 || a == Axiom::T4; }

bool related(const FamilyRelations& rel, std::size_t p, std::size_t q, PairRelation relation) {
  return relation == PairRelation::distinct ? p != q : rel.point_disjoint_point.test(p, q);
}

ScanResult fail(WitnessKind kind, std::size_t a, std::size_t b, std::uint64_t instances) {
  return ScanResult{false, kind, a, b, "", instances};
}

ScanResult scan_T0(const FamilyRelations& rel, PairRelation relation) {
  std::uint64_t n = 0;
  for (std::size_t p = 0; p < rel.points.size(); ++p) {
    for (std::size_t q = p + 1; q < rel.points.size(); ++q) {
      if (!related(rel, p, q, relation)) continue;
      ++n;
      if (!bits::any_xor(rel.point_in_open.row(p), rel.point_in_open.row(q)))
        return fail(WitnessKind::point_pair, p, q, n);
    }
  }
  return ScanResult{.instances = n};
}

ScanResult scan_T1(const FamilyRelations& rel, PairRelation relation) {
  std::uint64_t n = 0;
  for (std::size_t p = 0; p < rel.points.size(); ++p) {
    for (std::size_t q = 0; q < rel.points.size(); ++q) {
      if (p == q || !related(rel, p, q, relation)) continue;
      ++n;
      if (!bits::any_andnot(rel.point_in_open.row(p), rel.point_in_open.row(q)))
        return fail(WitnessKind::point_pair, p, q, n);
    }
  }
  return ScanResult{.instances = n};
}

// Some open above `a_opens` and some open in `b_opens` are disjoint.
bool separated(const FamilyRelations& rel, std::span<const std::uint64_t> a_opens,
               std::span<const std::uint64_t> b_opens) {
  bool found = false;
  bits::for_each(a_opens, [&](std::size_t o) {
    if (!found && bits::any_and(b_opens, rel.open_disjoint.row(o))) found = true;
  });
  return found;
}

ScanResult scan_T2(const FamilyRelations& rel, PairRelation relation) {
  std::uint64_t n = 0;
  for (std::size_t p = 0; p < rel.points.size(); ++p) {
    for (std::size_t q = p + 1; q < rel.points.size(); ++q) {
      if (!related(rel, p, q, relation)) continue;
      ++n;
      if (!separated(rel, rel.point_in_open.row(p), rel.point_in_open.row(q)))
        return fail(WitnessKind::point_pair, p, q, n);
    }
  }
  return ScanResult{.instances = n};
}

ScanResult scan_points_closed(const FamilyRelations& rel) {
  for (std::size_t p = 0; p < rel.points.size(); ++p) {
    if (!rel.point_is_closed[p]) return fail(WitnessKind::point, p, 0, p + 1);
  }
  return ScanResult{.instances = rel.points.size()};
}

ScanResult scan_regular(const FamilyRelations& rel, RegularReading reading) {
  std::uint64_t n = 0;
  for (std::size_t p = 0; p < rel.points.size(); ++p) {
    for (std::size_t k = 0; k < rel.closeds.size(); ++k) {
      const bool hyp = reading == RegularReading::not_in ? !rel.point_in_closed.test(p, k)
                                                         : rel.point_disjoint_closed.test(p, k);
      if (!hyp) continue;
      ++n;
      if (!separated(rel, rel.point_in_open.row(p), rel.closed_under_open.row(k)))
        return fail(WitnessKind::point_closed, p, k, n);
    }
  }
  return ScanResult{.instances = n};
}

ScanResult scan_normal(const FamilyRelations& rel) {
  std::uint64_t n = 0;
  for (std::size_t k = 0; k < rel.closeds.size(); ++k) {
    for (std::size_t m = k + 1; m < rel.closeds.size(); ++m) {
      if (!rel.closed_disjoint.test(k, m)) continue;
      ++n;
      if (!separated(rel, rel.closed_under_open.row(k), rel.closed_under_open.row(m)))
        return fail(WitnessKind::closed_pair, k, m, n);
    }
  }
  return ScanResult{.instances = n};
}

ScanResult scan_connected(const FamilyRelations& rel) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < rel.opens.size(); ++i) {
    if (!rel.open_nonempty[i]) continue;
    for (std::size_t j = i + 1; j < rel.opens.size(); ++j) {
      if (!rel.open_nonempty[j]) continue;
      ++n;
      if (rel.open_disjoint.test(i, j) && rel.open_covers.test(i, j)) return fail(WitnessKind::open_pair, i, j, n);
    }
  }
  return ScanResult{.instances = n};
}

ScanResult conjunction(ScanResult first, const char* first_name, ScanResult (*second)(const FamilyRelations&, PairRelation),
                       const FamilyRelations& rel, PairRelation relation) {
  if (!first.holds) {
    first.component = first_name;
    return first;
  }
  ScanResult t1 = second(rel, relation);
  t1.instances += first.instances;
  if (!t1.holds) t1.component = "T1";
  return t1;
}

}  // namespace

ScanResult scan(Axiom a, const FamilyRelations& rel, PairRelation relation, RegularReading reading) {
  switch (a) {
    case Axiom::T0: return scan_T0(rel, relation);
    case Axiom::T1: return scan_T1(rel, relation);
    case Axiom::T2: return scan_T2(rel, relation);
    case Axiom::points_closed: return scan_points_closed(rel);
    case Axiom::regular: return scan_regular(rel, reading);
    case Axiom::normal: return scan_normal(rel);
    case Axiom::T3: return conjunction(scan_regular(rel, reading), "regular", scan_T1, rel, relation);
    case Axiom::T4: return conjunction(scan_normal(rel), "normal", scan_T1, rel, relation);
    case Axiom::connected: return scan_connected(rel);
  }
  return {};
}

std::vector<FuzzySoftPoint> carrier_points(const FuzzySoftTopology& t, const GradeLattice& lattice, std::uint64_t cap) {
  auto all = enumerate_points(t.frame_ptr(), lattice, cap);
  std::erase_if(all, [&](const FuzzySoftPoint& p) { return !point_in(p, t.carrier()); });
  return all;
}

namespace {

Witness make_witness(const FamilyRelations& rel, const ScanResult& r) {
  switch (r.kind) {
    case WitnessKind::none: return std::monostate{};
    case WitnessKind::point_pair: return PointPairWitness{*rel.points[r.first], *rel.points[r.second]};
    case WitnessKind::point: return PointWitness{*rel.points[r.first]};
    case WitnessKind::point_closed: return PointClosedWitness{*rel.points[r.first], *rel.closeds[r.second]};
    case WitnessKind::closed_pair: return ClosedPairWitness{*rel.closeds[r.first], *rel.closeds[r.second]};
    case WitnessKind::open_pair: return SeparationWitness{*rel.opens[r.first], *rel.opens[r.second]};
  }
  return std::monostate{};
}

}  // namespace

AxiomVerdict decide(Axiom a, const FuzzySoftTopology& t, const DeciderConfig& cfg) {
  ResolvedConfig resolved{cfg.lattice ? *cfg.lattice : default_lattice(t), cfg.mode, std::nullopt, std::nullopt, cfg.cap};
  const PairRelation relation = pair_relation_for(a, cfg.pair_relation);
  if (uses_pairs(a)) resolved.pair_relation = relation;
  if (a == Axiom::regular || a == Axiom::T3) resolved.regular_reading = cfg.regular_reading;

  std::vector<FuzzySoftPoint> points;
  if (uses_points(a)) points = carrier_points(t, resolved.lattice, cfg.cap);
  FamilyRelations rel;
  build_relations(rel, t, points, cfg.mode, relation_needs(a));
  const ScanResult r = scan(a, rel, relation, cfg.regular_reading);
  return AxiomVerdict{a, r.holds, make_witness(rel, r), r.component, r.instances, std::move(resolved)};
}

AxiomVerdict is_T0(const FuzzySoftTopology& t, const DeciderConfig& cfg) { return decide(Axiom::T0, t, cfg); }
AxiomVerdict is_T1(const FuzzySoftTopology& t, const DeciderConfig& cfg) { return decide(Axiom::T1, t, cfg); }
AxiomVerdict is_T2(const FuzzySoftTopology& t, const DeciderConfig& cfg) { return decide(Axiom::T2, t, cfg); }
AxiomVerdict points_all_closed(const FuzzySoftTopology& t, const DeciderConfig& cfg) {
  return decide(Axiom::points_closed, t, cfg);
}
AxiomVerdict is_regular(const FuzzySoftTopology& t, const DeciderConfig& cfg) { return decide(Axiom::regular, t, cfg); }
AxiomVerdict is_normal(const FuzzySoftTopology& t, const DeciderConfig& cfg) { return decide(Axiom::normal, t, cfg); }
AxiomVerdict is_T3(const FuzzySoftTopology& t, const DeciderConfig& cfg) { return decide(Axiom::T3, t, cfg); }
AxiomVerdict is_T4(const FuzzySoftTopology& t, const DeciderConfig& cfg) { return decide(Axiom::T4, t, cfg); }
AxiomVerdict is_connected(const FuzzySoftTopology& t, const DeciderConfig& cfg) {
  return decide(Axiom::connected, t, cfg);
}

std::optional<std::pair<FuzzySoftSet, FuzzySoftSet>> find_separation(const FuzzySoftTopology& t,
                                                                     const DeciderConfig& cfg) {
  FamilyRelations rel;
  build_relations(rel, t, {}, cfg.mode, kNeedOpenPairs);
  const ScanResult r = scan_connected(rel);
  if (r.holds) return std::nullopt;
  return std::pair{*rel.opens[r.first], *rel.opens[r.second]};
}

std::optional<FuzzySoftSet> clopen_witness(const FuzzySoftTopology& t) {
  for (const auto& g : t.opens()) {
    if (!g.is_null() && g != t.carrier() && t.has_closed(g)) return g;
  }
  return std::nullopt;
}

bool subspace_separation(const SubspaceView& view, const FuzzySoftSet& k, const FuzzySoftSet& h,
                         const DeciderConfig& cfg) {
  if (k.is_null() || h.is_null()) throw PreconditionError("separation parts must be nonempty");
  if (fss_union(k, h) != view.carrier()) throw PreconditionError("separation parts must cover the subspace carrier");
  const auto& parent = *view.parent;
  return fss_disjoint(k, closure(parent, h), cfg.mode) && fss_disjoint(h, closure(parent, k), cfg.mode);
}

namespace {

bool opens_separate(const FuzzySoftTopology& t, Disjointness mode, auto&& first_ok, auto&& second_ok) {
  for (const auto& g1 : t.opens()) {
    if (!first_ok(g1)) continue;
    for (const auto& g2 : t.opens()) {
      if (second_ok(g2) && fss_disjoint(g1, g2, mode)) return true;
    }
  }
  return false;
}

bool pair_related(const FuzzySoftPoint& p, const FuzzySoftPoint& q, const ResolvedConfig& c) {
  return c.pair_relation && points_related(p, q, *c.pair_relation, c.mode);
}

bool is_lattice_point_of(const FuzzySoftTopology& t, const FuzzySoftPoint& p, const GradeLattice& lattice) {
  if (!point_in(p, t.carrier())) return false;
  const auto v = p.value().grades();
  return std::all_of(v.begin(), v.end(), [&](const Grade& g) { return lattice.contains(g); });
}

}  // namespace

bool confirm_witness(const FuzzySoftTopology& t, const AxiomVerdict& v) {
  if (v.holds) return false;
  const auto& c = v.config;
  const auto mode = c.mode;
  Axiom a = v.axiom;
  if ((a == Axiom::T3 || a == Axiom::T4) && v.failed_component == "T1") a = Axiom::T1;
  if (a == Axiom::T3) a = Axiom::regular;
  if (a == Axiom::T4) a = Axiom::normal;

  auto in = [](const FuzzySoftPoint& p) { return [&p](const FuzzySoftSet& g) { return point_in(p, g); }; };
  auto above = [](const FuzzySoftSet& k) { return [&k](const FuzzySoftSet& g) { return fss_leq(k, g); }; };

  if (const auto* w = std::get_if<PointPairWitness>(&v.witness)) {
    const auto& p = w->first;
    const auto& q = w->second;
    if (!is_lattice_point_of(t, p, c.lattice) || !is_lattice_point_of(t, q, c.lattice) || !pair_related(p, q, c))
      return false;
    switch (a) {
      case Axiom::T0:
        return std::none_of(t.opens().begin(), t.opens().end(),
                            [&](const FuzzySoftSet& g) { return point_in(p, g) != point_in(q, g); });
      case Axiom::T1:
        return std::none_of(t.opens().begin(), t.opens().end(),
                            [&](const FuzzySoftSet& g) { return point_in(p, g) && !point_in(q, g); });
      case Axiom::T2: return !opens_separate(t, mode, in(p), in(q));
      default: return false;
    }
  }
  if (const auto* w = std::get_if<PointWitness>(&v.witness)) {
    return a == Axiom::points_closed && is_lattice_point_of(t, w->point, c.lattice) &&
           !is_closed(t, point_as_fss(w->point));
  }
  if (const auto* w = std::get_if<PointClosedWitness>(&v.witness)) {
    if (a != Axiom::regular || !is_lattice_point_of(t, w->point, c.lattice) || !is_closed(t, w->closed)) return false;
    const bool hyp = c.regular_reading.value_or(RegularReading::not_in) == RegularReading::not_in
                         ? !point_in(w->point, w->closed)
                         : fss_disjoint(point_as_fss(w->point), w->closed, mode);
    return hyp && !opens_separate(t, mode, in(w->point), above(w->closed));
  }
  if (const auto* w = std::get_if<ClosedPairWitness>(&v.witness)) {
    return a == Axiom::normal && is_closed(t, w->first) && is_closed(t, w->second) &&
           fss_disjoint(w->first, w->second, mode) && !opens_separate(t, mode, above(w->first), above(w->second));
  }
  if (const auto* w = std::get_if<SeparationWitness>(&v.witness)) {
    return a == Axiom::connected && is_open(t, w->first) && is_open(t, w->second) && !w->first.is_null() &&
           !w->second.is_null() && fss_disjoint(w->first, w->second, mode) &&
           fss_union(w->first, w->second) == t.carrier();
  }
  return false;
}

}  // namespace fst
