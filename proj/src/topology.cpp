#include "fst/topology.hpp"

#include "fst/detail/closure_fold.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

namespace fst {

namespace {

void sort_unique(std::vector<FuzzySoftSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

bool sorted_contains(std::span<const FuzzySoftSet> sorted, const FuzzySoftSet& g) {
  return std::binary_search(sorted.begin(), sorted.end(), g);
}

}  // namespace

FuzzySoftTopology::FuzzySoftTopology(FuzzySoftSet carrier, std::vector<FuzzySoftSet> sorted_opens)
    : carrier_(std::move(carrier)), opens_(std::move(sorted_opens)) {
  closeds_.reserve(opens_.size());
  for (const auto& o : opens_) closeds_.push_back(relative_complement(o, carrier_));
  sort_unique(closeds_);
}

bool FuzzySoftTopology::has_open(const FuzzySoftSet& g) const { return sorted_contains(opens_, g); }
bool FuzzySoftTopology::has_closed(const FuzzySoftSet& g) const { return sorted_contains(closeds_, g); }

std::string_view to_string(TopologyAxiom axiom) {
  switch (axiom) {
    case TopologyAxiom::within_carrier: return "within-carrier";
    case TopologyAxiom::contains_null: return "axiom-1-null";
    case TopologyAxiom::contains_carrier: return "axiom-1-carrier";
    case TopologyAxiom::intersection: return "axiom-2-intersection";
    case TopologyAxiom::union_: return "axiom-3-union";
  }
  return "?";
}

TopologyCheck check_topology(const FuzzySoftSet& carrier, std::span<const FuzzySoftSet> candidates) {
  std::vector<FuzzySoftSet> family(candidates.begin(), candidates.end());
  for (const auto& g : family) {
    if (!same_frame(g.frame_ptr(), carrier.frame_ptr())) throw MismatchError("open set over a different frame");
  }
  sort_unique(family);

  TopologyCheck check;
  for (const auto& g : family) {
    if (!fss_leq(g, carrier)) {
      check.violations.push_back({TopologyAxiom::within_carrier, {g}});
      break;
    }
  }
  if (!sorted_contains(family, fss_null(carrier.frame_ptr()))) {
    check.violations.push_back({TopologyAxiom::contains_null, {fss_null(carrier.frame_ptr())}});
  }
  if (!sorted_contains(family, carrier)) {
    check.violations.push_back({TopologyAxiom::contains_carrier, {carrier}});
  }
  auto first_missing = [&](TopologyAxiom axiom, auto op) {
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (!sorted_contains(family, op(family[i], family[j]))) {
          check.violations.push_back({axiom, {family[i], family[j]}});
          return;
        }
      }
    }
  };
  first_missing(TopologyAxiom::intersection, fss_intersection);
  first_missing(TopologyAxiom::union_, fss_union);
  return check;
}

namespace {

std::string describe(const TopologyCheck& check) {
  std::string out = "not a fuzzy soft topology:";
  for (const auto& v : check.violations) {
    out += fmt::format(" [{}", to_string(v.axiom));
    for (const auto& w : v.witness) out += " " + render(w);
    out += "]";
  }
  return out;
}

}  // namespace

TopologyError::TopologyError(TopologyCheck check) : Error(describe(check)), check_(std::move(check)) {}

FuzzySoftTopology validate_topology(FuzzySoftSet carrier, std::vector<FuzzySoftSet> candidates) {
  TopologyCheck check = check_topology(carrier, candidates);
  if (!check.ok()) throw TopologyError(std::move(check));
  sort_unique(candidates);
  return FuzzySoftTopology(std::move(carrier), std::move(candidates));
}

FuzzySoftTopology indiscrete_topology(const FuzzySoftSet& carrier) {
  return validate_topology(carrier, {fss_null(carrier.frame_ptr()), carrier});
}

FuzzySoftTopology discrete_topology(const FuzzySoftSet& carrier, const GradeLattice& lattice, std::uint64_t cap) {
  auto sets = lattice_subsets(carrier, lattice, cap);
  sets.push_back(carrier);  // the carrier need not be lattice-representable
  return validate_topology(carrier, std::move(sets));
}

std::optional<FuzzySoftTopology> generate_topology(const FuzzySoftSet& carrier,
                                                   std::span<const FuzzySoftSet> generators,
                                                   std::size_t max_opens) {
  std::set<FuzzySoftSet> family{fss_null(carrier.frame_ptr()), carrier};
  std::vector<FuzzySoftSet> pending;
  for (const auto& g : generators) {
    if (!fss_leq(g, carrier)) throw PreconditionError("generator exceeds the carrier");
    if (family.insert(g).second) pending.push_back(g);
  }
  if (family.size() > max_opens) return std::nullopt;
  // Worklist: combine every new member with every member seen so far.
  while (!pending.empty()) {
    FuzzySoftSet x = std::move(pending.back());
    pending.pop_back();
    std::vector<FuzzySoftSet> snapshot(family.begin(), family.end());
    for (const auto& y : snapshot) {
      for (auto z : {fss_intersection(x, y), fss_union(x, y)}) {
        if (family.insert(z).second) {
          if (family.size() > max_opens) return std::nullopt;
          pending.push_back(std::move(z));
        }
      }
    }
  }
  return validate_topology(carrier, std::vector<FuzzySoftSet>(family.begin(), family.end()));
}

std::span<const FuzzySoftSet> closed_sets(const FuzzySoftTopology& t) { return t.closeds(); }

bool is_open(const FuzzySoftTopology& t, const FuzzySoftSet& g) { return t.has_open(g); }
bool is_closed(const FuzzySoftTopology& t, const FuzzySoftSet& g) { return t.has_closed(g); }
bool is_clopen(const FuzzySoftTopology& t, const FuzzySoftSet& g) { return t.has_open(g) && t.has_closed(g); }

FuzzySoftSet closure(const FuzzySoftTopology& t, const FuzzySoftSet& g) {
  return detail::fold_closure(fss_full(t.frame_ptr()), t.closeds(), g, fss_leq, fss_intersection, fss_union);
}

FuzzySoftSet interior(const FuzzySoftTopology& t, const FuzzySoftSet& g) {
  FuzzySoftSet result = fss_null(t.frame_ptr());
  for (const auto& o : t.opens()) {
    if (fss_leq(o, g)) result = fss_union(result, o);
  }
  return result;
}

bool is_neighborhood(const FuzzySoftTopology& t, const FuzzySoftSet& n, const FuzzySoftPoint& p) {
  return std::any_of(t.opens().begin(), t.opens().end(),
                     [&](const FuzzySoftSet& h) { return point_in(p, h) && fss_leq(h, n); });
}

std::vector<FuzzySoftSet> neighborhood_system(const FuzzySoftTopology& t, const FuzzySoftPoint& p,
                                              const GradeLattice& lattice, std::uint64_t cap) {
  std::vector<FuzzySoftSet> out;
  for (auto& n : lattice_subsets(t.carrier(), lattice, cap)) {
    if (is_neighborhood(t, n, p)) out.push_back(std::move(n));
  }
  return out;
}

SubspaceView subspace(const FuzzySoftTopology& parent, const FuzzySoftSet& g) {
  return subspace(std::make_shared<const FuzzySoftTopology>(parent), g);
}

SubspaceView subspace(std::shared_ptr<const FuzzySoftTopology> parent, const FuzzySoftSet& g) {
  if (!fss_leq(g, parent->carrier())) throw PreconditionError("subspace carrier is not a subset of the carrier");
  std::vector<FuzzySoftSet> induced;
  induced.reserve(parent->opens().size());
  for (const auto& h : parent->opens()) induced.push_back(fss_intersection(g, h));
  FuzzySoftTopology topology = validate_topology(g, std::move(induced));
  return SubspaceView{std::move(parent), std::move(topology)};
}

FuzzySoftSet subspace_closure(const SubspaceView& view, const FuzzySoftSet& h) { return closure(view.topology, h); }

bool is_finer(const FuzzySoftTopology& fine, const FuzzySoftTopology& coarse) {
  if (fine.carrier() != coarse.carrier()) throw MismatchError("topologies live on different carriers");
  return std::all_of(coarse.opens().begin(), coarse.opens().end(),
                     [&](const FuzzySoftSet& g) { return fine.has_open(g); });
}

}  // namespace fst
