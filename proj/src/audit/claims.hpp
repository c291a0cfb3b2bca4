#pragma once

// Claim evaluators, written once against the backend interface in spaces.hpp.
// Each evaluator scans its quantifier domain over lattice sets and points of
// the carrier and stops a part at its first failure.

#include <algorithm>
#include <array>
#include <bit>
#include <initializer_list>
#include <optional>
#include <vector>

#include "audit/spaces.hpp"

namespace fst::audit {

struct PartState {
  std::uint64_t instances = 0;
  bool failed = false;
  std::vector<Item> witness;
};
using Parts = std::array<PartState, 2>;

/// Records one hypothesis instance; true when it fails.
inline bool check(PartState& s, bool ok, std::initializer_list<Item> w) {
  ++s.instances;
  if (ok) return false;
  if (!s.failed) {
    s.failed = true;
    s.witness.assign(w);
  }
  return true;
}

template <class F>
bool check_with(PartState& s, bool ok, F&& witness) {
  ++s.instances;
  if (ok) return false;
  if (!s.failed) {
    s.failed = true;
    s.witness = witness();
  }
  return true;
}

/// Adds popcount(a & b) to count and returns the first bit of a & b missing
/// from c.
inline std::optional<std::size_t> implication(Bits a, Bits b, Bits c, std::uint64_t& count) {
  std::optional<std::size_t> miss;
  for (std::size_t w = 0; w < a.size(); ++w) {
    const std::uint64_t h = a[w] & b[w];
    count += static_cast<std::uint64_t>(std::popcount(h));
    const std::uint64_t bad = h & ~c[w];
    if (bad && !miss) miss = w * 64 + static_cast<std::size_t>(std::countr_zero(bad));
  }
  return miss;
}

/// Bulk form of check for claims quantified over the points in a bit row.
template <class S>
bool check_points(S& s, PartState& st, Bits hyp1, Bits hyp2, Bits concl, std::initializer_list<Item> w) {
  std::uint64_t n = 0;
  const auto miss = implication(hyp1, hyp2, concl, n);
  st.instances += n;
  if (!miss) return false;
  if (!st.failed) {
    st.failed = true;
    st.witness.assign(w);
    st.witness.push_back({"point", s.point_set(static_cast<std::uint32_t>(*miss)), true});
  }
  return true;
}

template <class S>
bool discrete(S& s) {
  return s.opens().size() == s.domain().size();
}

// ---- topology axioms

template <class S>
void top_ax3_union(S& s, Parts& r) {
  const auto& o = s.opens();
  for (std::size_t i = 0; i < o.size(); ++i)
    for (std::size_t j = i + 1; j < o.size(); ++j) {
      const Ix u = s.join(o[i], o[j]);
      if (check(r[0], s.is_open(u), {{"open set", o[i]}, {"open set", o[j]}, {"union", u}})) return;
    }
}

template <class S>
void top_ax3_intersection(S& s, Parts& r) {
  const auto& o = s.opens();
  for (Ix x : o) {
    if (x == s.null() || x == s.carrier()) continue;
    bool meets_closed = true;
    for (std::size_t i = 0; i < o.size() && meets_closed; ++i)
      for (std::size_t j = i + 1; j < o.size(); ++j)
        if (o[i] != x && o[j] != x && s.meet(o[i], o[j]) == x) {
          meets_closed = false;
          break;
        }
    if (!meets_closed) continue;
    std::optional<std::pair<Ix, Ix>> gap;
    for (std::size_t i = 0; i < o.size() && !gap; ++i)
      for (std::size_t j = i + 1; j < o.size(); ++j)
        if (o[i] != x && o[j] != x && s.join(o[i], o[j]) == x) {
          gap = std::pair{o[i], o[j]};
          break;
        }
    if (check_with(r[0], !gap, [&] {
          return std::vector<Item>{{"removed open set", x}, {"open set", gap->first}, {"open set", gap->second}};
        }))
      return;
  }
}

// ---- points

template <class S>
void pt_1(S& s, Parts& r) {
  for (Ix g : s.domain()) {
    const Ix gc = s.comp(g);
    const Bits in_g = s.pts(g), in_gc = s.pts(gc);
    if (check_points(s, r[0], in_g, in_g, std::vector<std::uint64_t>(in_gc.size(), 0), {{"set", g}, {"complement", gc}}))
      return;
  }
}

template <class S>
void pt_3(S& s, Parts& r) {
  for (Ix g : s.domain()) {
    Ix acc = s.null();
    const Bits in = s.pts(g);
    for (auto p : s.points())
      if (test_bit(in, p)) acc = s.join(acc, s.point_set(p));
    if (check(r[0], acc == g, {{"set", g}, {"union of its points", acc}})) return;
  }
}

template <class S>
void pt_4(S& s, Parts& r) {
  const auto& pts = s.points();
  for (auto q : pts) {
    const Bits in_q = s.pts(s.point_set(q));
    for (auto p : pts)
      if (check(r[0], test_bit(in_q, p) == s.point_value_leq(p, q),
                {{"point", s.point_set(p), true}, {"point", s.point_set(q), true}}))
        return;
  }
}

/// Pairs i < j of the domain.
template <class S, class F>
void domain_pairs(S& s, F&& f) {
  const auto& d = s.domain();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (f(d[i], d[j])) return;
}

template <class S>
void pt_5(S& s, Parts& r) {
  domain_pairs(s, [&](Ix g, Ix h) {
    const Ix u = s.join(g, h);
    const Bits in_g = s.pts(g), in_h = s.pts(h), in_u = s.pts(u);
    return check_points(s, r[0], in_g, in_g, in_u, {{"member", g}, {"member", h}, {"union", u}}) ||
           check_points(s, r[0], in_h, in_h, in_u, {{"member", g}, {"member", h}, {"union", u}});
  });
}

template <class S>
void pt_5_converse(S& s, Parts& r) {
  domain_pairs(s, [&](Ix g, Ix h) {
    const Ix u = s.join(g, h);
    const Bits in_g = s.pts(g), in_h = s.pts(h), in_u = s.pts(u);
    std::vector<std::uint64_t> either(in_g.size());
    for (std::size_t w = 0; w < either.size(); ++w) either[w] = in_g[w] | in_h[w];
    return check_points(s, r[0], in_u, in_u, either, {{"member", g}, {"member", h}, {"union", u}});
  });
}

template <class S>
void pt_6(S& s, Parts& r) {
  domain_pairs(s, [&](Ix g, Ix h) {
    const Ix m = s.meet(g, h);
    const Bits in_g = s.pts(g), in_h = s.pts(h), in_m = s.pts(m);
    std::vector<std::uint64_t> both(in_g.size());
    for (std::size_t w = 0; w < both.size(); ++w) both[w] = in_g[w] & in_h[w];
    return check_points(s, r[0], both, both, in_m, {{"member", g}, {"member", h}, {"intersection", m}}) ||
           check_points(s, r[0], in_m, in_m, both, {{"member", g}, {"member", h}, {"intersection", m}});
  });
}

// ---- neighborhoods

template <class S>
std::optional<std::size_t> first_missing(Bits a, Bits b) {
  std::uint64_t n = 0;
  return implication(a, a, b, n);
}

template <class S>
void nb_open(S& s, Parts& r) {
  for (Ix g : s.domain()) {
    const auto miss = first_missing<S>(s.pts(g), s.nb(g));
    if (s.is_open(g) && !r[0].failed)
      check_with(r[0], !miss, [&] {
        return std::vector<Item>{{"open set", g}, {"point", s.point_set(static_cast<std::uint32_t>(*miss)), true}};
      });
    if (!miss && !r[1].failed) check(r[1], s.is_open(g), {{"set", g}});
    if (r[0].failed && r[1].failed) return;
  }
}

template <class S>
void nb_1(S& s, Parts& r) {
  for (Ix g : s.domain()) {
    const Bits n = s.nb(g);
    if (check_points(s, r[0], n, n, s.pts(g), {{"neighborhood", g}})) return;
  }
}

template <class S>
void nb_2(S& s, Parts& r) {
  for (Ix g : s.domain()) {
    const Bits n = s.nb(g);
    for (Ix h : s.domain())
      if (s.leq(g, h) && check_points(s, r[0], n, n, s.nb(h), {{"neighborhood", g}, {"superset", h}})) return;
  }
}

template <class S>
void nb_3(S& s, Parts& r) {
  domain_pairs(s, [&](Ix g, Ix h) {
    const Ix m = s.meet(g, h);
    return check_points(s, r[0], s.nb(g), s.nb(h), s.nb(m), {{"neighborhood", g}, {"neighborhood", h}, {"intersection", m}});
  });
}

template <class S>
void nb_4(S& s, Parts& r) {
  std::vector<Ix> self;
  for (Ix h : s.domain())
    if (!first_missing<S>(s.pts(h), s.nb(h))) self.push_back(h);
  std::vector<std::uint64_t> reach;
  for (Ix k : s.domain()) {
    const Bits n = s.nb(k);
    reach.assign(n.size(), 0);
    for (Ix h : self) {
      if (!s.leq(h, k)) continue;
      const Bits nh = s.nb(h);
      for (std::size_t w = 0; w < reach.size(); ++w) reach[w] |= nh[w];
    }
    if (check_points(s, r[0], n, n, reach, {{"neighborhood", k}})) return;
  }
}

template <class S>
void int_equiv(S& s, Parts& r) {
  for (Ix g : s.domain()) {
    const Ix a = s.interior(g), b = s.interior_via_neighborhoods(g);
    if (check(r[0], a == b, {{"set", g}, {"interior", a}, {"union of interior sets", b}})) return;
  }
}

// ---- closure and interior

template <class S>
void cl_fixed(S& s, Parts& r) {
  for (Ix g : s.domain()) {
    const Ix c = s.closure(g);
    if (s.is_closed(g) && !r[0].failed) check(r[0], c == g, {{"closed set", g}, {"closure", c}});
    if (c == g && !r[1].failed) check(r[1], s.is_closed(g), {{"set", g}});
    if (r[0].failed && r[1].failed) return;
  }
}

template <class S, bool Fuzzy>
void cl_1(S& s, Parts& r) {
  if (s.crisp(s.carrier()) == Fuzzy) return;
  for (Ix g : s.domain()) {
    const Ix a = s.rel(s.closure(g)), b = s.interior(s.rel(g));
    if (check(r[0], a == b, {{"set", g}, {"complement of closure", a}, {"interior of complement", b}})) return;
  }
}

template <class S, bool Fuzzy>
void cl_2(S& s, Parts& r) {
  if (s.crisp(s.carrier()) == Fuzzy) return;
  for (Ix g : s.domain()) {
    const Ix a = s.rel(s.interior(g)), b = s.closure(s.rel(g));
    if (check(r[0], a == b, {{"set", g}, {"complement of interior", a}, {"closure of complement", b}})) return;
  }
}

template <class S>
void cl_3(S& s, Parts& r) {
  for (Ix g : s.domain())
    for (Ix h : s.domain())
      if (s.leq(g, h) && check(r[0], s.leq(s.closure(g), s.closure(h)), {{"smaller", g}, {"larger", h}})) return;
}

template <class S>
void cl_4(S& s, Parts& r) {
  for (Ix g : s.domain())
    for (Ix h : s.domain())
      if (s.leq(g, h) && check(r[0], s.leq(s.interior(g), s.interior(h)), {{"smaller", g}, {"larger", h}})) return;
}

template <class S>
void cl_5(S& s, Parts& r) {
  for (Ix g : s.domain()) {
    const Ix c = s.closure(g);
    if (check(r[0], s.closure(c) == c, {{"set", g}, {"closure", c}})) return;
  }
}

template <class S>
void cl_6(S& s, Parts& r) {
  for (Ix g : s.domain()) {
    const Ix i = s.interior(g);
    if (check(r[0], s.interior(i) == i, {{"set", g}, {"interior", i}})) return;
  }
}

template <class S, bool Fuzzy>
void cl_7(S& s, Parts& r) {
  if (s.crisp(s.carrier()) == Fuzzy) return;
  check(r[0], s.closure(s.null()) == s.null(), {{"closure of null", s.closure(s.null())}});
  check(r[1], s.closure(s.carrier()) == s.carrier(), {{"closure of carrier", s.closure(s.carrier())}});
}

template <class S>
void cl_8(S& s, Parts& r) {
  check(r[0], s.interior(s.null()) == s.null(), {{"interior of null", s.interior(s.null())}});
  check(r[1], s.interior(s.carrier()) == s.carrier(), {{"interior of carrier", s.interior(s.carrier())}});
}

template <class S>
void cl_9(S& s, Parts& r) {
  domain_pairs(s, [&](Ix g, Ix h) {
    const Ix a = s.closure(s.join(g, h)), b = s.join(s.closure(g), s.closure(h));
    return check(r[0], a == b, {{"set", g}, {"set", h}, {"closure of union", a}, {"union of closures", b}});
  });
}

template <class S>
void cl_10(S& s, Parts& r) {
  domain_pairs(s, [&](Ix g, Ix h) {
    const Ix a = s.interior(s.meet(g, h)), b = s.meet(s.interior(g), s.interior(h));
    return check(r[0], a == b, {{"set", g}, {"set", h}, {"interior of intersection", a}, {"intersection of interiors", b}});
  });
}

template <class S>
void cl_10_literal(S& s, Parts& r) {
  const Ix ic = s.interior(s.carrier());
  for (Ix g : s.domain())
    for (Ix h : s.domain()) {
      const Ix a = s.interior(s.meet(g, h)), b = s.meet(ic, s.interior(h));
      if (check(r[0], a == b, {{"set", g}, {"set", h}, {"interior of intersection", a}, {"printed right side", b}})) return;
    }
}

template <class S>
void cl_11(S& s, Parts& r) {
  domain_pairs(s, [&](Ix g, Ix h) {
    const Ix a = s.closure(s.meet(g, h)), b = s.meet(s.closure(g), s.closure(h));
    return check(r[0], s.leq(a, b), {{"set", g}, {"set", h}, {"closure of intersection", a}, {"intersection of closures", b}});
  });
}

template <class S>
void cl_12(S& s, Parts& r) {
  domain_pairs(s, [&](Ix g, Ix h) {
    const Ix a = s.interior(s.join(g, h)), b = s.join(s.interior(g), s.interior(h));
    return check(r[0], s.leq(a, b), {{"set", g}, {"set", h}, {"interior of union", a}, {"union of interiors", b}});
  });
}

template <class S>
void cl_12_reverse(S& s, Parts& r) {
  domain_pairs(s, [&](Ix g, Ix h) {
    const Ix a = s.interior(s.join(g, h)), b = s.join(s.interior(g), s.interior(h));
    return check(r[0], s.leq(b, a), {{"set", g}, {"set", h}, {"interior of union", a}, {"union of interiors", b}});
  });
}

// ---- subspaces

template <class S, bool Fuzzy>
void sub_closed(S& s, Parts& r) {
  for (Ix g : s.domain()) {
    if (s.crisp(g) == Fuzzy) continue;
    auto& sub = s.subspace(g);
    std::vector<Ix> traces;
    for (Ix k : s.closeds()) traces.push_back(s.meet(k, g));
    std::sort(traces.begin(), traces.end());
    for (Ix h : s.domain()) {
      if (!s.leq(h, g)) continue;
      const bool closed_in_sub = sub.is_closed(h);
      const bool trace = std::binary_search(traces.begin(), traces.end(), h);
      if (closed_in_sub && !r[0].failed) check(r[0], trace, {{"subspace", g}, {"subspace closed set", h}});
      if (trace && !r[1].failed) check(r[1], closed_in_sub, {{"subspace", g}, {"trace of a closed set", h}});
      if (r[0].failed && r[1].failed) return;
    }
  }
}

template <class S, bool Fuzzy>
void sub_closure(S& s, Parts& r) {
  for (Ix g : s.domain()) {
    if (s.crisp(g) == Fuzzy) continue;
    auto& sub = s.subspace(g);
    for (Ix h : s.domain()) {
      if (!s.leq(h, g)) continue;
      const Ix a = sub.closure(h), b = s.meet(s.closure(h), g);
      if (check(r[0], a == b, {{"subspace", g}, {"set", h}, {"closure in subspace", a}, {"trace of closure", b}})) return;
    }
  }
}

// ---- separation axioms

template <class S>
std::vector<Item> with_subspace(S& sub, Ix g, Axiom a) {
  std::vector<Item> w{{"subspace", g}};
  for (const auto& i : sub.axiom_witness(a)) w.push_back(i);
  return w;
}

template <class S>
void sep_discrete_t0(S& s, Parts& r) {
  if (!discrete(s)) return;
  check_with(r[0], s.axiom(Axiom::T0), [&] { return s.axiom_witness(Axiom::T0); });
}

template <class S, Axiom A>
void hereditary(S& s, Parts& r) {
  if (!s.axiom(A)) return;
  for (Ix g : s.domain()) {
    auto& sub = s.subspace(g);
    if (check_with(r[0], sub.axiom(A), [&] { return with_subspace(sub, g, A); })) return;
  }
}

template <class S, Axiom A, Axiom B>
void implies(S& s, Parts& r) {
  if (!s.axiom(A)) return;
  check_with(r[0], s.axiom(B), [&] { return s.axiom_witness(B); });
}

template <class S>
void sep_t2char(S& s, Parts& r) {
  const auto& pts = s.points();
  const std::size_t W = s.pool().point_words();
  std::vector<std::uint64_t> escape(pts.size() * W, 0);
  for (Ix o : s.opens()) {
    const Bits in = s.pts(o);
    const Bits in_closure = s.pts(s.closure(o));
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (test_bit(in, pts[i]))
        for (std::size_t w = 0; w < W; ++w) escape[i * W + w] |= ~in_closure[w];
  }
  std::optional<std::pair<std::uint32_t, std::uint32_t>> bad;
  for (std::size_t i = 0; i < pts.size() && !bad; ++i)
    for (auto q : pts)
      if (s.related(Axiom::T2, pts[i], q) && !((escape[i * W + q / 64] >> (q % 64)) & 1U)) {
        bad = std::pair{pts[i], q};
        break;
      }
  const bool t2 = s.axiom(Axiom::T2);
  if (t2)
    check_with(r[0], !bad, [&] {
      return std::vector<Item>{{"first point", s.point_set(bad->first), true}, {"second point", s.point_set(bad->second), true}};
    });
  if (!bad) check_with(r[1], t2, [&] { return s.axiom_witness(Axiom::T2); });
}

template <class S>
void sep_regchar(S& s, Parts& r) {
  if (!s.axiom(Axiom::points_closed)) return;
  std::optional<std::pair<Ix, std::uint32_t>> bad;
  for (Ix g : s.opens()) {
    const Bits in_g = s.pts(g);
    for (auto p : s.points()) {
      if (!test_bit(in_g, p)) continue;
      const bool found = std::any_of(s.opens().begin(), s.opens().end(),
                                     [&](Ix o) { return test_bit(s.pts(o), p) && s.leq(s.closure(o), g); });
      if (!found) {
        bad = std::pair{g, p};
        break;
      }
    }
    if (bad) break;
  }
  const bool regular = s.axiom(Axiom::regular);
  if (regular)
    check_with(r[0], !bad, [&] {
      return std::vector<Item>{{"open set", bad->first}, {"point", s.point_set(bad->second), true}};
    });
  if (!bad) check_with(r[1], regular, [&] { return s.axiom_witness(Axiom::regular); });
}

template <class S>
void sep_normchar(S& s, Parts& r) {
  std::optional<std::pair<Ix, Ix>> bad;
  for (Ix h : s.closeds()) {
    for (Ix g : s.opens()) {
      if (!s.leq(h, g)) continue;
      const bool found = std::any_of(s.opens().begin(), s.opens().end(),
                                     [&](Ix o) { return s.leq(h, o) && s.leq(s.closure(o), g); });
      if (!found) {
        bad = std::pair{h, g};
        break;
      }
    }
    if (bad) break;
  }
  const bool normal = s.axiom(Axiom::normal);
  if (normal)
    check_with(r[0], !bad, [&] { return std::vector<Item>{{"closed set", bad->first}, {"open set", bad->second}}; });
  if (!bad) check_with(r[1], normal, [&] { return s.axiom_witness(Axiom::normal); });
}

template <class S>
void sep_normal_hered(S& s, Parts& r) {
  if (!s.axiom(Axiom::normal)) return;
  for (Ix g : s.closeds()) {
    auto& sub = s.subspace(g);
    if (check_with(r[0], sub.axiom(Axiom::normal), [&] { return with_subspace(sub, g, Axiom::normal); })) return;
  }
}

// ---- connectedness

template <class S>
bool connected_at(S& s, Ix g) {
  return s.subspace(g).axiom(Axiom::connected);
}

template <class S>
void con_ex_discrete(S& s, Parts& r) {
  if (!discrete(s) || s.opens().size() <= 2) return;
  check(r[0], !s.axiom(Axiom::connected), {{"carrier", s.carrier()}});
}

template <class S>
void con_ex_indiscrete(S& s, Parts& r) {
  if (s.opens().size() > 2) return;
  check_with(r[0], s.axiom(Axiom::connected), [&] { return s.axiom_witness(Axiom::connected); });
}

template <class S>
void con_clopen(S& s, Parts& r) {
  std::optional<Ix> clopen;
  for (Ix o : s.opens())
    if (o != s.null() && o != s.carrier() && s.is_closed(o)) {
      clopen = o;
      break;
    }
  const bool connected = s.axiom(Axiom::connected);
  if (!connected) check_with(r[0], clopen.has_value(), [&] { return s.axiom_witness(Axiom::connected); });
  if (clopen) check(r[1], !connected, {{"clopen set", *clopen}});
}

template <class S>
void con_rem_clopen(S& s, Parts& r) {
  std::vector<Ix> clopens;
  for (Ix o : s.opens())
    if (s.is_closed(o)) clopens.push_back(o);
  std::vector<Ix> trivial{s.null(), s.carrier()};
  trivial.erase(std::unique(trivial.begin(), trivial.end()), trivial.end());
  const bool only_trivial = clopens == trivial;
  const bool connected = s.axiom(Axiom::connected);
  if (connected)
    check_with(r[0], only_trivial, [&] {
      for (Ix c : clopens)
        if (c != s.null() && c != s.carrier()) return std::vector<Item>{{"clopen set", c}};
      return std::vector<Item>{{"not clopen", s.is_closed(s.null()) ? s.carrier() : s.null()}};
    });
  if (only_trivial) check_with(r[1], connected, [&] { return s.axiom_witness(Axiom::connected); });
}

template <class S>
void con_subsep(S& s, Parts& r) {
  const auto seps = s.separations();
  if (seps.empty()) return;
  for (Ix g : s.domain()) {
    if (!connected_at(s, g)) continue;
    for (const auto& [h, k] : seps)
      if (check(r[0], s.leq(g, h) || s.leq(g, k), {{"connected subspace", g}, {"open set", h}, {"open set", k}})) return;
  }
}

template <class S>
void con_subsep_crit(S& s, Parts& r) {
  for (Ix g : s.domain()) {
    auto& sub = s.subspace(g);
    for (Ix k : s.domain()) {
      if (k == s.null() || !s.leq(k, g)) continue;
      const auto h = s.split_partner(g, k);
      if (!h || *h == s.null() || *h <= k || !s.disjoint(k, *h)) continue;
      const bool separation = sub.is_open(k) && sub.is_open(*h);
      const bool criterion = s.separation_criterion(g, k, *h);
      if (separation && !r[0].failed) check(r[0], criterion, {{"subspace", g}, {"part", k}, {"part", *h}});
      if (criterion && !r[1].failed) check(r[1], separation, {{"subspace", g}, {"part", k}, {"part", *h}});
      if (r[0].failed && r[1].failed) return;
    }
  }
}

template <class S>
void con_between(S& s, Parts& r) {
  for (Ix g : s.domain()) {
    if (!connected_at(s, g)) continue;
    const Ix c = s.closure(g);
    for (Ix k : s.domain())
      if (s.leq(g, k) && s.leq(k, c) && check(r[0], connected_at(s, k), {{"connected set", g}, {"between set", k}}))
        return;
  }
}

template <class S>
void con_rem_closure(S& s, Parts& r) {
  for (Ix g : s.domain()) {
    if (!connected_at(s, g)) continue;
    const Ix c = s.closure(g);
    if (check(r[0], connected_at(s, c), {{"connected set", g}, {"closure", c}})) return;
  }
}

template <class S>
std::vector<Ix> connected_sets(S& s) {
  std::vector<Ix> out;
  for (Ix g : s.domain())
    if (connected_at(s, g)) out.push_back(g);
  return out;
}

template <class S>
void con_union(S& s, Parts& r) {
  const auto conn = connected_sets(s);
  for (std::size_t i = 0; i < conn.size(); ++i)
    for (std::size_t j = i + 1; j < conn.size(); ++j) {
      if (s.meet(conn[i], conn[j]) == s.null()) continue;
      const Ix u = s.join(conn[i], conn[j]);
      if (check(r[0], connected_at(s, u), {{"connected set", conn[i]}, {"connected set", conn[j]}, {"union", u}})) return;
    }
}

template <class S>
void con_union_star(S& s, Parts& r) {
  const auto conn = connected_sets(s);
  std::vector<Ix> from(s.pool_size());
  std::vector<char> seen(s.pool_size());
  for (Ix center : conn) {
    std::vector<Ix> partial;
    std::fill(seen.begin(), seen.end(), 0);
    for (Ix x : conn) {
      if (s.meet(center, x) == s.null()) continue;
      const Ix u = s.join(center, x);
      if (!seen[u]) {
        seen[u] = 1;
        from[u] = x;
        partial.push_back(u);
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < partial.size(); ++i)
      for (std::size_t j = i; j < partial.size(); ++j) {
        const Ix u = s.join(partial[i], partial[j]);
        if (seen[u]) continue;
        seen[u] = 1;
        if (check(r[0], connected_at(s, u),
                  {{"center", center}, {"member", from[partial[i]]}, {"member", from[partial[j]]}, {"union", u}}))
          return;
      }
  }
}

template <class S>
void con_coarser(S& s, Parts& r) {
  if (!s.axiom(Axiom::connected)) return;
  const auto& o = s.opens();
  for (std::size_t i = 0; i < o.size(); ++i)
    for (std::size_t j = i; j < o.size(); ++j)
      if (check(r[0], s.coarser_connected(o[i], o[j]), {{"generator", o[i]}, {"generator", o[j]}})) return;
}

}  // namespace fst::audit
