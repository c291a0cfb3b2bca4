#include "audit/spaces.hpp"

#include <algorithm>
#include <stdexcept>

#include "fst/detail/closure_fold.hpp"

namespace fst::audit {

namespace {

std::vector<std::uint64_t> mask_of(std::size_t n, const std::vector<Ix>& members) {
  std::vector<std::uint64_t> m((n + 63) / 64, 0);
  for (Ix i : members) m[i / 64] |= std::uint64_t{1} << (i % 64);
  return m;
}

std::vector<Item> items_from_scan(const ScanResult& r, const std::vector<Ix>& point_sets, const std::vector<Ix>& opens,
                                  const std::vector<Ix>& closeds) {
  switch (r.kind) {
    case WitnessKind::none: return {};
    case WitnessKind::point_pair:
      return {{"first point", point_sets[r.first], true}, {"second point", point_sets[r.second], true}};
    case WitnessKind::point: return {{"point", point_sets[r.first], true}};
    case WitnessKind::point_closed: return {{"point", point_sets[r.first], true}, {"closed set", closeds[r.second]}};
    case WitnessKind::closed_pair: return {{"closed set", closeds[r.first]}, {"closed set", closeds[r.second]}};
    case WitnessKind::open_pair: return {{"open set", opens[r.first]}, {"open set", opens[r.second]}};
  }
  return {};
}

}  // namespace

PoolSpace::PoolSpace(const SetPool& pool, Ix carrier, std::vector<Ix> opens, const AuditConfig& cfg)
    : pool_(&pool), cfg_(&cfg), carrier_(carrier), opens_(std::move(opens)) {
  closeds_.reserve(opens_.size());
  for (Ix o : opens_) closeds_.push_back(pool.relative(o, carrier_));
  std::sort(closeds_.begin(), closeds_.end());
  closeds_.erase(std::unique(closeds_.begin(), closeds_.end()), closeds_.end());
  open_mask_ = mask_of(pool.size(), opens_);
  closed_mask_ = mask_of(pool.size(), closeds_);
}

const std::vector<Ix>& PoolSpace::domain() {
  if (!domain_ready_) {
    bits::for_each(pool_->below(carrier_), [&](std::size_t i) { domain_.push_back(static_cast<Ix>(i)); });
    domain_ready_ = true;
  }
  return domain_;
}

const std::vector<std::uint32_t>& PoolSpace::points() {
  if (!points_ready_) {
    bits::for_each(pool_->points_in(carrier_), [&](std::size_t p) { points_.push_back(static_cast<std::uint32_t>(p)); });
    points_ready_ = true;
  }
  return points_;
}

Ix PoolSpace::closure(Ix a) {
  if (closure_.empty()) closure_.assign(pool_->size(), SetPool::npos);
  if (closure_[a] == SetPool::npos) {
    const SetPool& p = *pool_;
    closure_[a] = detail::fold_closure(
        p.full(), closeds_, a, [&](Ix x, Ix y) { return p.leq(x, y); }, [&](Ix x, Ix y) { return p.meet(x, y); },
        [&](Ix x, Ix y) { return p.join(x, y); });
  }
  return closure_[a];
}

Ix PoolSpace::interior(Ix a) {
  if (interior_.empty()) interior_.assign(pool_->size(), SetPool::npos);
  if (interior_[a] == SetPool::npos) {
    Ix r = 0;
    for (Ix o : opens_)
      if (pool_->leq(o, a)) r = pool_->join(r, o);
    interior_[a] = r;
  }
  return interior_[a];
}

Bits PoolSpace::nb(Ix a) {
  if (nb_ready_.empty()) {
    nb_.reset(pool_->size(), pool_->point_count());
    nb_ready_.assign(pool_->size(), 0);
  }
  if (!nb_ready_[a]) {
    for (Ix o : opens_) {
      if (!pool_->leq(o, a)) continue;
      bits::for_each(pool_->points_in(o), [&](std::size_t p) { nb_.set(a, p); });
    }
    nb_ready_[a] = 1;
  }
  return nb_.row(a);
}

Ix PoolSpace::interior_via_neighborhoods(Ix a) {
  if (via_nb_.empty()) via_nb_.assign(pool_->size(), SetPool::npos);
  if (via_nb_[a] == SetPool::npos) {
    std::vector<std::uint64_t> under((pool_->size() + 63) / 64, 0);
    for (Ix o : opens_) {
      if (!pool_->leq(o, a)) continue;
      auto row = pool_->below(o);
      for (std::size_t w = 0; w < under.size(); ++w) under[w] |= row[w];
    }
    Ix r = 0;
    bits::for_each(std::span<const std::uint64_t>(under), [&](std::size_t g) { r = pool_->join(r, static_cast<Ix>(g)); });
    via_nb_[a] = r;
  }
  return via_nb_[a];
}

bool PoolSpace::point_value_leq(std::uint32_t p, std::uint32_t q) const {
  const auto& a = pool_->point(p);
  const auto& b = pool_->point(q);
  return a.support() == b.support() && pool_->leq(pool_->point_set(p), pool_->point_set(q));
}

bool PoolSpace::related(Axiom a, std::uint32_t p, std::uint32_t q) const {
  if (pair_relation_for(a, cfg_->pair_relation) == PairRelation::distinct) return p != q;
  return pool_->disjoint(pool_->point_set(p), pool_->point_set(q), cfg_->mode);
}

PoolSpace& PoolSpace::subspace(Ix g) {
  if (subs_.empty()) subs_.resize(pool_->size());
  if (!subs_[g]) {
    std::vector<std::uint64_t> seen((pool_->size() + 63) / 64, 0);
    for (Ix o : opens_) {
      const Ix m = pool_->meet(g, o);
      seen[m / 64] |= std::uint64_t{1} << (m % 64);
    }
    std::vector<Ix> induced;
    bits::for_each(std::span<const std::uint64_t>(seen), [&](std::size_t i) { induced.push_back(static_cast<Ix>(i)); });
    subs_[g] = std::make_unique<PoolSpace>(*pool_, g, std::move(induced), *cfg_);
  }
  return *subs_[g];
}

void PoolSpace::ensure_relations(unsigned needs) {
  needs &= ~rel_.built;
  if (!needs) return;
  const SetPool& p = *pool_;
  const auto& pts = points();
  if (rel_.built == 0) {
    for (auto pos : pts) rel_.points.push_back(&p.point(pos));
    for (Ix o : opens_) rel_.opens.push_back(&p.set(o));
    for (Ix k : closeds_) rel_.closeds.push_back(&p.set(k));
  }
  const std::size_t P = pts.size(), O = opens_.size(), C = closeds_.size();
  const auto mode = cfg_->mode;
  if (needs & kNeedPoints) {
    rel_.point_in_open.reset(P, O);
    rel_.point_disjoint_point.reset(P, P);
    for (std::size_t i = 0; i < P; ++i) {
      const Ix a = p.point_set(pts[i]);
      for (std::size_t o = 0; o < O; ++o)
        if (p.leq(a, opens_[o])) rel_.point_in_open.set(i, o);
      for (std::size_t j = 0; j < P; ++j)
        if (p.disjoint(a, p.point_set(pts[j]), mode)) rel_.point_disjoint_point.set(i, j);
    }
  }
  if (needs & kNeedPointClosed) {
    rel_.point_in_closed.reset(P, C);
    rel_.point_disjoint_closed.reset(P, C);
    rel_.point_is_closed.assign(P, 0);
    for (std::size_t i = 0; i < P; ++i) {
      const Ix a = p.point_set(pts[i]);
      for (std::size_t k = 0; k < C; ++k) {
        if (p.leq(a, closeds_[k])) rel_.point_in_closed.set(i, k);
        if (p.disjoint(a, closeds_[k], mode)) rel_.point_disjoint_closed.set(i, k);
      }
      rel_.point_is_closed[i] = is_closed(a);
    }
  }
  if (needs & kNeedOpenPairs) {
    rel_.open_disjoint.reset(O, O);
    rel_.open_covers.reset(O, O);
    rel_.open_nonempty.assign(O, 0);
    rel_.open_is_closed.assign(O, 0);
    rel_.open_is_carrier.assign(O, 0);
    for (std::size_t i = 0; i < O; ++i) {
      rel_.open_nonempty[i] = opens_[i] != 0;
      rel_.open_is_closed[i] = is_closed(opens_[i]);
      rel_.open_is_carrier[i] = opens_[i] == carrier_;
      for (std::size_t j = 0; j < O; ++j) {
        if (p.disjoint(opens_[i], opens_[j], mode)) rel_.open_disjoint.set(i, j);
        if (p.join(opens_[i], opens_[j]) == carrier_) rel_.open_covers.set(i, j);
      }
    }
  }
  if (needs & kNeedClosedPairs) {
    rel_.closed_under_open.reset(C, O);
    rel_.closed_disjoint.reset(C, C);
    for (std::size_t k = 0; k < C; ++k) {
      for (std::size_t o = 0; o < O; ++o)
        if (p.leq(closeds_[k], opens_[o])) rel_.closed_under_open.set(k, o);
      for (std::size_t m = 0; m < C; ++m)
        if (p.disjoint(closeds_[k], closeds_[m], mode)) rel_.closed_disjoint.set(k, m);
    }
  }
  rel_.built |= needs;
}

bool PoolSpace::axiom(Axiom a) {
  const auto i = static_cast<std::size_t>(a);
  if (axiom_[i] < 0) {
    if (a == Axiom::connected) {
      axiom_[i] = !separation().has_value();
    } else {
      ensure_relations(relation_needs(a));
      scans_[i] = scan(a, rel_, pair_relation_for(a, cfg_->pair_relation), cfg_->regular_reading);
      axiom_[i] = scans_[i].holds;
    }
  }
  return axiom_[i] == 1;
}

std::vector<Item> PoolSpace::axiom_witness(Axiom a) {
  if (axiom(a)) return {};
  if (a == Axiom::connected) {
    auto s = *separation();
    return {{"open set", s.first}, {"open set", s.second}};
  }
  std::vector<Ix> point_sets;
  for (auto pos : points()) point_sets.push_back(pool_->point_set(pos));
  return items_from_scan(scans_[static_cast<std::size_t>(a)], point_sets, opens_, closeds_);
}

std::optional<std::pair<Ix, Ix>> PoolSpace::separation_from(std::size_t start, std::size_t* at) {
  const SetPool& p = *pool_;
  for (std::size_t i = start; i < opens_.size(); ++i) {
    const Ix h = opens_[i];
    if (h == 0 || h == carrier_) continue;
    const Ix k = p.restrict_off(carrier_, h);
    if (k == 0 || k < h || !is_open(k) || p.join(h, k) != carrier_ || !p.disjoint(h, k, cfg_->mode)) continue;
    if (at) *at = i;
    return std::pair{h, k};
  }
  return std::nullopt;
}

std::optional<std::pair<Ix, Ix>> PoolSpace::separation() {
  if (!separation_ready_) {
    separation_ = separation_from(0, nullptr);
    separation_ready_ = true;
  }
  return separation_;
}

std::vector<std::pair<Ix, Ix>> PoolSpace::separations() {
  std::vector<std::pair<Ix, Ix>> out;
  std::size_t at = 0;
  while (auto s = separation_from(at, &at)) {
    out.push_back(*s);
    ++at;
  }
  return out;
}

std::optional<Ix> PoolSpace::split_partner(Ix g, Ix k) const {
  const Ix h = pool_->restrict_off(g, k);
  if (pool_->join(k, h) != g) return std::nullopt;
  return h;
}

bool PoolSpace::separation_criterion(Ix, Ix k, Ix h) {
  return disjoint(k, closure(h)) && disjoint(h, closure(k));
}

bool PoolSpace::coarser_connected(Ix o1, Ix o2) {
  std::array<Ix, 6> f{0, carrier_, o1, o2, meet(o1, o2), join(o1, o2)};
  std::sort(f.begin(), f.end());
  const auto end = std::unique(f.begin(), f.end());
  for (auto a = f.begin(); a != end; ++a) {
    if (*a == 0) continue;
    for (auto b = a + 1; b != end; ++b)
      if (disjoint(*a, *b) && join(*a, *b) == carrier_) return false;
  }
  return true;
}

ObjectSpace::ObjectSpace(const SetPool& pool, FuzzySoftTopology t, const AuditConfig& cfg)
    : pool_(&pool), cfg_(&cfg), dcfg_(decider_config(pool, cfg)), t_(std::move(t)), carrier_(ix(t_.carrier())) {
  for (const auto& o : t_.opens()) opens_.push_back(ix(o));
  for (const auto& k : closed_sets(t_)) closeds_.push_back(ix(k));
  for (const auto& g : lattice_subsets(t_.carrier(), pool.lattice(), UINT64_MAX)) domain_.push_back(ix(g));
  for (const auto& p : carrier_points(t_, pool.lattice(), UINT64_MAX))
    points_.push_back(pool.point_position(ix(point_as_fss(p))));
}

Bits ObjectSpace::pts(Ix a) {
  auto [it, fresh] = pts_.try_emplace(a);
  if (fresh) {
    it->second.assign(pool_->point_words(), 0);
    for (std::size_t pos = 0; pos < pool_->point_count(); ++pos)
      if (point_in(pool_->point(pos), S(a))) it->second[pos / 64] |= std::uint64_t{1} << (pos % 64);
  }
  return it->second;
}

Bits ObjectSpace::nb(Ix a) {
  auto [it, fresh] = nb_.try_emplace(a);
  if (fresh) {
    it->second.assign(pool_->point_words(), 0);
    for (std::size_t pos = 0; pos < pool_->point_count(); ++pos)
      if (is_neighborhood(t_, S(a), pool_->point(pos))) it->second[pos / 64] |= std::uint64_t{1} << (pos % 64);
  }
  return it->second;
}

Ix ObjectSpace::interior_via_neighborhoods(Ix a) const {
  FuzzySoftSet r = fss_null(t_.frame_ptr());
  for (Ix g : domain_) {
    const bool interior_set = std::any_of(t_.opens().begin(), t_.opens().end(), [&](const FuzzySoftSet& o) {
      return fss_leq(S(g), o) && fss_leq(o, S(a));
    });
    if (interior_set) r = fss_union(r, S(g));
  }
  return ix(r);
}

bool ObjectSpace::point_value_leq(std::uint32_t p, std::uint32_t q) const {
  const auto& a = pool_->point(p);
  const auto& b = pool_->point(q);
  return a.support() == b.support() && fuzzy_leq(a.value(), b.value());
}

bool ObjectSpace::related(Axiom a, std::uint32_t p, std::uint32_t q) const {
  return points_related(pool_->point(p), pool_->point(q), pair_relation_for(a, cfg_->pair_relation), cfg_->mode);
}

ObjectSpace& ObjectSpace::subspace(Ix g) {
  auto& slot = subs_[g];
  if (!slot) slot = std::make_unique<ObjectSpace>(*pool_, fst::subspace(t_, S(g)).topology, *cfg_);
  return *slot;
}

const AxiomVerdict& ObjectSpace::verdict(Axiom a) {
  auto it = verdicts_.find(a);
  if (it == verdicts_.end()) it = verdicts_.emplace(a, decide(a, t_, dcfg_)).first;
  return it->second;
}

std::vector<Item> ObjectSpace::axiom_witness(Axiom a) {
  const auto& v = verdict(a);
  if (v.holds) return {};
  auto pt = [&](const FuzzySoftPoint& p) { return ix(point_as_fss(p)); };
  if (auto* w = std::get_if<PointPairWitness>(&v.witness))
    return {{"first point", pt(w->first), true}, {"second point", pt(w->second), true}};
  if (auto* w = std::get_if<PointWitness>(&v.witness)) return {{"point", pt(w->point), true}};
  if (auto* w = std::get_if<PointClosedWitness>(&v.witness))
    return {{"point", pt(w->point), true}, {"closed set", ix(w->closed)}};
  if (auto* w = std::get_if<ClosedPairWitness>(&v.witness))
    return {{"closed set", ix(w->first)}, {"closed set", ix(w->second)}};
  if (auto* w = std::get_if<SeparationWitness>(&v.witness)) return {{"open set", ix(w->first)}, {"open set", ix(w->second)}};
  return {};
}

std::optional<std::pair<Ix, Ix>> ObjectSpace::separation() const {
  auto s = find_separation(t_, dcfg_);
  if (!s) return std::nullopt;
  return std::pair{ix(s->first), ix(s->second)};
}

std::vector<std::pair<Ix, Ix>> ObjectSpace::separations() const {
  std::vector<std::pair<Ix, Ix>> out;
  const auto opens = t_.opens();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (opens[i].is_null()) continue;
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (opens[j].is_null()) continue;
      if (fss_disjoint(opens[i], opens[j], cfg_->mode) && fss_union(opens[i], opens[j]) == t_.carrier())
        out.emplace_back(ix(opens[i]), ix(opens[j]));
    }
  }
  return out;
}

std::optional<Ix> ObjectSpace::split_partner(Ix g, Ix k) const {
  const auto& gs = S(g);
  const auto& ks = S(k);
  std::vector<Grade> cells(gs.cells().size());
  for (std::size_t c = 0; c < cells.size(); ++c) cells[c] = ks.cells()[c].is_zero() ? gs.cells()[c] : Grade::zero();
  FuzzySoftSet h(gs.frame_ptr(), std::move(cells));
  if (fss_union(ks, h) != gs) return std::nullopt;
  return ix(h);
}

bool ObjectSpace::separation_criterion(Ix g, Ix k, Ix h) const {
  return subspace_separation(fst::subspace(t_, S(g)), S(k), S(h), dcfg_);
}

bool ObjectSpace::coarser_connected(Ix o1, Ix o2) const {
  const std::vector<FuzzySoftSet> gens{S(o1), S(o2)};
  auto coarse = generate_topology(t_.carrier(), gens, SIZE_MAX);
  if (!coarse || !is_finer(t_, *coarse)) throw std::logic_error("coarsening is not coarser");
  return is_connected(*coarse, dcfg_).holds;
}

}  // namespace fst::audit
