#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fst/soft_point.hpp"
#include "fst/soft_set.hpp"

namespace fst {

/// A validated family of open fuzzy soft subsets of a carrier. Opens are
/// deduplicated and kept in canonical order; closed sets are the complements
/// of the opens taken inside the carrier.
class FuzzySoftTopology {
 public:
  const FuzzySoftSet& carrier() const noexcept { return carrier_; }
  const FramePtr& frame_ptr() const noexcept { return carrier_.frame_ptr(); }
  std::span<const FuzzySoftSet> opens() const noexcept { return opens_; }
  std::span<const FuzzySoftSet> closeds() const noexcept { return closeds_; }

  bool has_open(const FuzzySoftSet& g) const;
  bool has_closed(const FuzzySoftSet& g) const;

  friend bool operator==(const FuzzySoftTopology& a, const FuzzySoftTopology& b) {
    return a.carrier_ == b.carrier_ && a.opens_ == b.opens_;
  }

 private:
  FuzzySoftTopology(FuzzySoftSet carrier, std::vector<FuzzySoftSet> sorted_opens);
  friend FuzzySoftTopology validate_topology(FuzzySoftSet carrier, std::vector<FuzzySoftSet> candidates);

  FuzzySoftSet carrier_;
  std::vector<FuzzySoftSet> opens_;
  std::vector<FuzzySoftSet> closeds_;
};

enum class TopologyAxiom { within_carrier, contains_null, contains_carrier, intersection, union_ };

std::string_view to_string(TopologyAxiom axiom);

struct AxiomViolation {
  TopologyAxiom axiom;
  /// The offending set, or the pair whose intersection/union is missing.
  std::vector<FuzzySoftSet> witness;
};

struct TopologyCheck {
  std::vector<AxiomViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks the axioms on the deduplicated candidates and reports the first
/// witness (canonical order) for each violated axiom. Unions and
/// intersections are checked pairwise, which covers every finite subfamily.
TopologyCheck check_topology(const FuzzySoftSet& carrier, std::span<const FuzzySoftSet> candidates);

class TopologyError : public Error {
 public:
  explicit TopologyError(TopologyCheck check);
  const TopologyCheck& check() const noexcept { return check_; }

 private:
  TopologyCheck check_;
};

/// Throws TopologyError carrying every violation.
FuzzySoftTopology validate_topology(FuzzySoftSet carrier, std::vector<FuzzySoftSet> candidates);

FuzzySoftTopology indiscrete_topology(const FuzzySoftSet& carrier);

/// Every lattice-representable subset of the carrier is open.
FuzzySoftTopology discrete_topology(const FuzzySoftSet& carrier, const GradeLattice& lattice, std::uint64_t cap);

/// Closes {null, carrier} plus the generators under pairwise min and max.
/// Returns nullopt once the family would exceed max_opens.
std::optional<FuzzySoftTopology> generate_topology(const FuzzySoftSet& carrier,
                                                   std::span<const FuzzySoftSet> generators,
                                                   std::size_t max_opens);

std::span<const FuzzySoftSet> closed_sets(const FuzzySoftTopology& t);
bool is_open(const FuzzySoftTopology& t, const FuzzySoftSet& g);
bool is_closed(const FuzzySoftTopology& t, const FuzzySoftSet& g);
bool is_clopen(const FuzzySoftTopology& t, const FuzzySoftSet& g);

/// Intersection of every closed superset of g (the all-one set when there is none).
FuzzySoftSet closure(const FuzzySoftTopology& t, const FuzzySoftSet& g);
/// Union of every open subset of g.
FuzzySoftSet interior(const FuzzySoftTopology& t, const FuzzySoftSet& g);

/// Some open h has p in h and h <= n.
bool is_neighborhood(const FuzzySoftTopology& t, const FuzzySoftSet& n, const FuzzySoftPoint& p);

/// Every lattice-representable n <= carrier that is a neighborhood of p.
std::vector<FuzzySoftSet> neighborhood_system(const FuzzySoftTopology& t, const FuzzySoftPoint& p,
                                              const GradeLattice& lattice, std::uint64_t cap);

/// The topology induced on a subset g of the carrier: {g ∧ h : h open}.
struct SubspaceView {
  std::shared_ptr<const FuzzySoftTopology> parent;
  FuzzySoftTopology topology;

  const FuzzySoftSet& carrier() const noexcept { return topology.carrier(); }
  std::span<const FuzzySoftSet> opens() const noexcept { return topology.opens(); }
};

/// Throws PreconditionError when g is not below the parent's carrier.
SubspaceView subspace(const FuzzySoftTopology& parent, const FuzzySoftSet& g);
SubspaceView subspace(std::shared_ptr<const FuzzySoftTopology> parent, const FuzzySoftSet& g);

/// Closure of h computed inside the subspace topology.
FuzzySoftSet subspace_closure(const SubspaceView& view, const FuzzySoftSet& h);

/// Every open of coarse is an open of fine. Throws MismatchError when the carriers differ.
bool is_finer(const FuzzySoftTopology& fine, const FuzzySoftTopology& coarse);

}  // namespace fst
