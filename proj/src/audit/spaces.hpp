#pragma once

// Two evaluation backends for the claim templates. Both hand out pool indices
// for sets and pool point positions for points, so a witness found by one can
// be compared with the other.
//
// PoolSpace answers from the SetPool tables and is what the corpus audit runs.
// ObjectSpace answers through the public engine and decider functions and is
// used to re-validate counterexamples.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fst/auditor.hpp"
#include "fst/deciders.hpp"
#include "fst/relations.hpp"
#include "fst/set_pool.hpp"
#include "fst/topology.hpp"

namespace fst::audit {

using Ix = SetPool::Index;
using Bits = std::span<const std::uint64_t>;

inline bool test_bit(Bits b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }

struct Item {
  const char* role;
  Ix set;
  bool point = false;
};

inline DeciderConfig decider_config(const SetPool& pool, const AuditConfig& cfg) {
  DeciderConfig d;
  d.lattice = pool.lattice();
  d.mode = cfg.mode;
  d.pair_relation = cfg.pair_relation;
  d.regular_reading = cfg.regular_reading;
  d.cap = UINT64_MAX;
  return d;
}

class PoolSpace {
 public:
  PoolSpace(const SetPool& pool, Ix carrier, std::vector<Ix> opens, const AuditConfig& cfg);

  const SetPool& pool() const { return *pool_; }
  const AuditConfig& config() const { return *cfg_; }
  std::size_t pool_size() const { return pool_->size(); }

  Ix carrier() const { return carrier_; }
  Ix null() const { return 0; }
  const std::vector<Ix>& opens() const { return opens_; }
  const std::vector<Ix>& closeds() const { return closeds_; }
  const std::vector<Ix>& domain();
  const std::vector<std::uint32_t>& points();
  Ix point_set(std::uint32_t pos) const { return pool_->point_set(pos); }

  Ix meet(Ix a, Ix b) const { return pool_->meet(a, b); }
  Ix join(Ix a, Ix b) const { return pool_->join(a, b); }
  bool leq(Ix a, Ix b) const { return pool_->leq(a, b); }
  Ix comp(Ix a) const { return pool_->complement(a); }
  Ix rel(Ix a) const { return pool_->relative(a, carrier_); }
  bool disjoint(Ix a, Ix b) const { return pool_->disjoint(a, b, cfg_->mode); }
  bool crisp(Ix a) const { return pool_->crisp(a); }
  bool is_null(Ix a) const { return a == 0; }
  bool is_open(Ix a) const { return test_bit(open_mask_, a); }
  bool is_closed(Ix a) const { return test_bit(closed_mask_, a); }

  Ix closure(Ix a);
  Ix interior(Ix a);
  /// Points lying in a.
  Bits pts(Ix a) const { return pool_->points_in(a); }
  /// Points of which a is a neighborhood.
  Bits nb(Ix a);
  /// Union of the sets of which a is a neighborhood.
  Ix interior_via_neighborhoods(Ix a);
  bool point_value_leq(std::uint32_t p, std::uint32_t q) const;
  bool related(Axiom a, std::uint32_t p, std::uint32_t q) const;

  PoolSpace& subspace(Ix g);
  bool axiom(Axiom a);
  std::vector<Item> axiom_witness(Axiom a);
  std::optional<std::pair<Ix, Ix>> separation();
  std::vector<std::pair<Ix, Ix>> separations();
  std::optional<Ix> split_partner(Ix g, Ix k) const;
  bool separation_criterion(Ix g, Ix k, Ix h);
  bool coarser_connected(Ix o1, Ix o2);

 private:
  void ensure_relations(unsigned needs);
  std::optional<std::pair<Ix, Ix>> separation_from(std::size_t start, std::size_t* at);

  const SetPool* pool_;
  const AuditConfig* cfg_;
  Ix carrier_;
  std::vector<Ix> opens_, closeds_;
  std::vector<std::uint64_t> open_mask_, closed_mask_;
  std::vector<Ix> domain_;
  bool domain_ready_ = false;
  std::vector<std::uint32_t> points_;
  bool points_ready_ = false;
  std::vector<Ix> closure_, interior_, via_nb_;
  BitMatrix nb_;
  std::vector<char> nb_ready_;
  std::vector<std::unique_ptr<PoolSpace>> subs_;
  std::array<signed char, 9> axiom_{-1, -1, -1, -1, -1, -1, -1, -1, -1};
  std::array<ScanResult, 9> scans_{};
  FamilyRelations rel_;
  bool separation_ready_ = false;
  std::optional<std::pair<Ix, Ix>> separation_;
};

class ObjectSpace {
 public:
  ObjectSpace(const SetPool& pool, FuzzySoftTopology t, const AuditConfig& cfg);

  const SetPool& pool() const { return *pool_; }
  const AuditConfig& config() const { return *cfg_; }
  std::size_t pool_size() const { return pool_->size(); }
  const FuzzySoftTopology& topology() const { return t_; }

  Ix carrier() const { return carrier_; }
  Ix null() const { return 0; }
  const std::vector<Ix>& opens() const { return opens_; }
  const std::vector<Ix>& closeds() const { return closeds_; }
  const std::vector<Ix>& domain() const { return domain_; }
  const std::vector<std::uint32_t>& points() const { return points_; }
  Ix point_set(std::uint32_t pos) const { return pool_->index_of(point_as_fss(pool_->point(pos))); }

  Ix meet(Ix a, Ix b) const { return ix(fss_intersection(S(a), S(b))); }
  Ix join(Ix a, Ix b) const { return ix(fss_union(S(a), S(b))); }
  bool leq(Ix a, Ix b) const { return fss_leq(S(a), S(b)); }
  Ix comp(Ix a) const { return ix(fss_complement(S(a))); }
  Ix rel(Ix a) const { return ix(relative_complement(S(a), t_.carrier())); }
  bool disjoint(Ix a, Ix b) const { return fss_disjoint(S(a), S(b), cfg_->mode); }
  bool crisp(Ix a) const { return is_crisp(S(a)); }
  bool is_null(Ix a) const { return fss_is_null(S(a)); }
  bool is_open(Ix a) const { return fst::is_open(t_, S(a)); }
  bool is_closed(Ix a) const { return fst::is_closed(t_, S(a)); }

  Ix closure(Ix a) const { return ix(fst::closure(t_, S(a))); }
  Ix interior(Ix a) const { return ix(fst::interior(t_, S(a))); }
  Bits pts(Ix a);
  Bits nb(Ix a);
  Ix interior_via_neighborhoods(Ix a) const;
  bool point_value_leq(std::uint32_t p, std::uint32_t q) const;
  bool related(Axiom a, std::uint32_t p, std::uint32_t q) const;

  ObjectSpace& subspace(Ix g);
  bool axiom(Axiom a) { return verdict(a).holds; }
  std::vector<Item> axiom_witness(Axiom a);
  std::optional<std::pair<Ix, Ix>> separation() const;
  std::vector<std::pair<Ix, Ix>> separations() const;
  std::optional<Ix> split_partner(Ix g, Ix k) const;
  bool separation_criterion(Ix g, Ix k, Ix h) const;
  bool coarser_connected(Ix o1, Ix o2) const;

 private:
  const FuzzySoftSet& S(Ix a) const { return pool_->set(a); }
  Ix ix(const FuzzySoftSet& g) const { return pool_->index_of(g); }
  const AxiomVerdict& verdict(Axiom a);

  const SetPool* pool_;
  const AuditConfig* cfg_;
  DeciderConfig dcfg_;
  FuzzySoftTopology t_;
  Ix carrier_;
  std::vector<Ix> opens_, closeds_, domain_;
  std::vector<std::uint32_t> points_;
  std::map<Ix, std::vector<std::uint64_t>> pts_, nb_;
  std::map<Ix, std::unique_ptr<ObjectSpace>> subs_;
  std::map<Axiom, AxiomVerdict> verdicts_;
};

}  // namespace fst::audit
