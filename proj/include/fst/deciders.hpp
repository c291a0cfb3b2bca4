#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fst/relations.hpp"
#include "fst/soft_point.hpp"
#include "fst/topology.hpp"

namespace fst {

enum class Axiom { T0, T1, T2, points_closed, regular, normal, T3, T4, connected };

std::string_view to_string(Axiom a);
/// Accepts the names printed by to_string, case-insensitively.
Axiom parse_axiom(std::string_view text);
inline constexpr Axiom kAllAxioms[] = {Axiom::T0,     Axiom::T1,     Axiom::T2, Axiom::points_closed, Axiom::regular,
                                       Axiom::normal, Axiom::T3,     Axiom::T4, Axiom::connected};

/// How "closed set k does not contain point p" is read in regularity.
enum class RegularReading { not_in, disjoint };

std::string_view to_string(RegularReading r);
RegularReading parse_regular_reading(std::string_view text);

struct DeciderConfig {
  /// Unset: the closure of every grade occurring in the carrier and the opens.
  std::optional<GradeLattice> lattice;
  Disjointness mode = Disjointness::pointwise;
  /// Unset: disjoint for T0, distinct for T1 and T2.
  std::optional<PairRelation> pair_relation;
  RegularReading regular_reading = RegularReading::not_in;
  std::uint64_t cap = kDefaultPointCap;
};

/// The configuration a verdict was actually computed under.
struct ResolvedConfig {
  GradeLattice lattice;
  Disjointness mode;
  std::optional<PairRelation> pair_relation;  // set when the axiom quantifies over point pairs
  std::optional<RegularReading> regular_reading;
  std::uint64_t cap;
};

GradeLattice default_lattice(const FuzzySoftTopology& t);
PairRelation pair_relation_for(Axiom a, std::optional<PairRelation> override_relation);

struct PointPairWitness {
  FuzzySoftPoint first, second;
};
struct PointWitness {
  FuzzySoftPoint point;
};
struct PointClosedWitness {
  FuzzySoftPoint point;
  FuzzySoftSet closed;
};
struct ClosedPairWitness {
  FuzzySoftSet first, second;
};
struct SeparationWitness {
  FuzzySoftSet first, second;
};

using Witness =
    std::variant<std::monostate, PointPairWitness, PointWitness, PointClosedWitness, ClosedPairWitness, SeparationWitness>;

struct AxiomVerdict {
  Axiom axiom;
  bool holds;
  Witness witness;
  /// For T3/T4: which conjunct failed ("regular", "normal" or "T1").
  std::string failed_component;
  /// Number of hypothesis instances examined (pairs, triples, closed pairs).
  std::uint64_t instances = 0;
  ResolvedConfig config;
};

AxiomVerdict decide(Axiom a, const FuzzySoftTopology& t, const DeciderConfig& cfg = {});

AxiomVerdict is_T0(const FuzzySoftTopology& t, const DeciderConfig& cfg = {});
AxiomVerdict is_T1(const FuzzySoftTopology& t, const DeciderConfig& cfg = {});
AxiomVerdict is_T2(const FuzzySoftTopology& t, const DeciderConfig& cfg = {});
AxiomVerdict points_all_closed(const FuzzySoftTopology& t, const DeciderConfig& cfg = {});
AxiomVerdict is_regular(const FuzzySoftTopology& t, const DeciderConfig& cfg = {});
AxiomVerdict is_normal(const FuzzySoftTopology& t, const DeciderConfig& cfg = {});
AxiomVerdict is_T3(const FuzzySoftTopology& t, const DeciderConfig& cfg = {});
AxiomVerdict is_T4(const FuzzySoftTopology& t, const DeciderConfig& cfg = {});
AxiomVerdict is_connected(const FuzzySoftTopology& t, const DeciderConfig& cfg = {});

/// Lattice points below the carrier, in enumeration order. Throws CapExceeded.
std::vector<FuzzySoftPoint> carrier_points(const FuzzySoftTopology& t, const GradeLattice& lattice, std::uint64_t cap);

/// First pair (i < j in canonical order) of nonempty opens, disjoint per mode,
/// whose union is the carrier.
std::optional<std::pair<FuzzySoftSet, FuzzySoftSet>> find_separation(const FuzzySoftTopology& t,
                                                                     const DeciderConfig& cfg = {});

/// First nonempty proper clopen subset of the carrier in canonical order.
std::optional<FuzzySoftSet> clopen_witness(const FuzzySoftTopology& t);

/// k ∧ cl(h) and h ∧ cl(k) are both disjoint per mode, closures taken in the
/// parent. Throws PreconditionError unless k, h are nonempty with union equal
/// to the subspace carrier.
bool subspace_separation(const SubspaceView& view, const FuzzySoftSet& k, const FuzzySoftSet& h,
                         const DeciderConfig& cfg = {});

/// Re-evaluates a failing verdict's witness straight from the definitions.
/// True when the witness really violates the axiom.
bool confirm_witness(const FuzzySoftTopology& t, const AxiomVerdict& v);

/// Index-level result of a scan over FamilyRelations.
enum class WitnessKind { none, point_pair, point, point_closed, closed_pair, open_pair };

struct ScanResult {
  bool holds = true;
  WitnessKind kind = WitnessKind::none;
  std::size_t first = 0, second = 0;
  const char* component = "";
  std::uint64_t instances = 0;
};

/// Matrices each axiom's scan reads.
unsigned relation_needs(Axiom a);

ScanResult scan(Axiom a, const FamilyRelations& rel, PairRelation relation, RegularReading reading);

}  // namespace fst
