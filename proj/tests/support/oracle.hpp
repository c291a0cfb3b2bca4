#pragma once

// Brute-force reference model. Grades are integers scaled by a common
// denominator D; sets are flat parameter-major vectors. Shares no code with
// the library beyond the conversion helpers at the bottom.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "fst/deciders.hpp"
#include "fst/topology.hpp"

namespace oracle {

using Set = std::vector<int>;

struct Space {
  int params = 0, elems = 0, D = 1;
  Set carrier;
  std::vector<Set> opens;
};

inline Set meet(const Set& a, const Set& b) {
  Set r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}
inline Set join(const Set& a, const Set& b) {
  Set r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}
inline bool leq(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}
inline bool null(const Set& a) {
  return std::all_of(a.begin(), a.end(), [](int g) { return g == 0; });
}
inline Set rel_complement(const Space& s, const Set& o) {
  Set r(o.size());
  for (std::size_t i = 0; i < o.size(); ++i) r[i] = std::min(s.carrier[i], s.D - o[i]);
  return r;
}
inline bool disjoint(const Space& s, const Set& a, const Set& b, bool cross) {
  for (int p = 0; p < s.params; ++p) {
    for (int q = 0; q < s.params; ++q) {
      if (!cross && p != q) continue;
      for (int x = 0; x < s.elems; ++x)
        if (std::min(a[p * s.elems + x], b[q * s.elems + x]) > 0) return false;
    }
  }
  return true;
}

inline bool in(const std::vector<Set>& family, const Set& g) {
  return std::find(family.begin(), family.end(), g) != family.end();
}

inline bool is_topology(const Space& s) {
  if (!in(s.opens, Set(s.carrier.size(), 0)) || !in(s.opens, s.carrier)) return false;
  for (const auto& a : s.opens) {
    if (!leq(a, s.carrier)) return false;
    for (const auto& b : s.opens)
      if (!in(s.opens, meet(a, b)) || !in(s.opens, join(a, b))) return false;
  }
  return true;
}

inline std::vector<Set> closeds(const Space& s) {
  std::vector<Set> out;
  for (const auto& o : s.opens) out.push_back(rel_complement(s, o));
  return out;
}

inline Set closure(const Space& s, const Set& g) {
  Set r(g.size(), s.D);
  for (const auto& k : closeds(s))
    if (leq(g, k)) r = meet(r, k);
  return r;
}
inline Set interior(const Space& s, const Set& g) {
  Set r(g.size(), 0);
  for (const auto& o : s.opens)
    if (leq(o, g)) r = join(r, o);
  return r;
}

/// Point as a set: one nonzero row.
struct Point {
  int support;
  Set set;
};

/// Single-support sets below the carrier whose grades are lattice values
/// (given as scaled integers).
inline std::vector<Point> points(const Space& s, const std::vector<int>& lattice) {
  std::vector<Point> out;
  const int L = static_cast<int>(lattice.size());
  int combos = 1;
  for (int x = 0; x < s.elems; ++x) combos *= L;
  for (int p = 0; p < s.params; ++p) {
    for (int c = 1; c < combos; ++c) {
      Set g(s.carrier.size(), 0);
      int rest = c;
      for (int x = s.elems - 1; x >= 0; --x) {
        g[p * s.elems + x] = lattice[rest % L];
        rest /= L;
      }
      if (!null(g) && leq(g, s.carrier)) out.push_back({p, g});
    }
  }
  return out;
}

struct Options {
  bool cross = false;
  bool t0_disjoint = true;   // pair relation for T0
  bool t12_disjoint = false; // pair relation for T1/T2
  bool regular_disjoint_reading = false;
};

inline bool related(const Space& s, const Point& p, const Point& q, bool disjoint_relation, bool cross) {
  if (p.set == q.set) return false;
  return !disjoint_relation || disjoint(s, p.set, q.set, cross);
}

inline bool T0(const Space& s, const std::vector<Point>& pts, const Options& o) {
  for (const auto& p : pts)
    for (const auto& q : pts) {
      if (!related(s, p, q, o.t0_disjoint, o.cross)) continue;
      bool ok = false;
      for (const auto& g : s.opens) ok = ok || (leq(p.set, g) != leq(q.set, g));
      if (!ok) return false;
    }
  return true;
}

inline bool T1(const Space& s, const std::vector<Point>& pts, const Options& o) {
  for (const auto& p : pts)
    for (const auto& q : pts) {
      if (!related(s, p, q, o.t12_disjoint, o.cross)) continue;
      bool a = false, b = false;
      for (const auto& g : s.opens) {
        a = a || (leq(p.set, g) && !leq(q.set, g));
        b = b || (leq(q.set, g) && !leq(p.set, g));
      }
      if (!a || !b) return false;
    }
  return true;
}

inline bool separated(const Space& s, const Set& a, const Set& b, bool cross) {
  for (const auto& g1 : s.opens) {
    if (!leq(a, g1)) continue;
    for (const auto& g2 : s.opens)
      if (leq(b, g2) && disjoint(s, g1, g2, cross)) return true;
  }
  return false;
}

inline bool T2(const Space& s, const std::vector<Point>& pts, const Options& o) {
  for (const auto& p : pts)
    for (const auto& q : pts)
      if (related(s, p, q, o.t12_disjoint, o.cross) && !separated(s, p.set, q.set, o.cross)) return false;
  return true;
}

inline bool points_closed(const Space& s, const std::vector<Point>& pts) {
  auto ks = closeds(s);
  return std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return in(ks, p.set); });
}

inline bool regular(const Space& s, const std::vector<Point>& pts, const Options& o) {
  for (const auto& k : closeds(s))
    for (const auto& p : pts) {
      const bool hyp = o.regular_disjoint_reading ? disjoint(s, p.set, k, o.cross) : !leq(p.set, k);
      if (hyp && !separated(s, p.set, k, o.cross)) return false;
    }
  return true;
}

inline bool normal(const Space& s, const Options& o) {
  auto ks = closeds(s);
  for (const auto& a : ks)
    for (const auto& b : ks)
      if (a != b && disjoint(s, a, b, o.cross) && !separated(s, a, b, o.cross)) return false;
  return true;
}

inline bool connected(const Space& s, const Options& o) {
  for (const auto& a : s.opens)
    for (const auto& b : s.opens)
      if (!null(a) && !null(b) && disjoint(s, a, b, o.cross) && join(a, b) == s.carrier) return false;
  return true;
}

// ---- conversion helpers ----

inline int scale(fst::Grade g, int D) { return static_cast<int>(g.numerator() * D / g.denominator()); }

inline Set to_set(const fst::FuzzySoftSet& g, int D) {
  Set out;
  for (auto c : g.cells()) out.push_back(scale(c, D));
  return out;
}

inline Space to_space(const fst::FuzzySoftTopology& t, int D) {
  Space s;
  s.params = static_cast<int>(t.carrier().parameter_count());
  s.elems = static_cast<int>(t.carrier().universe_size());
  s.D = D;
  s.carrier = to_set(t.carrier(), D);
  for (const auto& o : t.opens()) s.opens.push_back(to_set(o, D));
  return s;
}

inline std::vector<int> to_lattice(const fst::GradeLattice& l, int D) {
  std::vector<int> out;
  for (auto g : l.grades()) out.push_back(scale(g, D));
  return out;
}

}  // namespace oracle
