#include "fst/relations.hpp"

#include "fst/topology.hpp"

namespace fst {

void build_relations(FamilyRelations& rel, const FuzzySoftTopology& t, std::span<const FuzzySoftPoint> points,
                     Disjointness mode, unsigned needs) {
  rel.points.clear();
  rel.opens.clear();
  rel.closeds.clear();
  for (const auto& p : points) rel.points.push_back(&p);
  for (const auto& o : t.opens()) rel.opens.push_back(&o);
  for (const auto& k : t.closeds()) rel.closeds.push_back(&k);
  rel.built = needs;

  const std::size_t P = rel.points.size(), O = rel.opens.size(), C = rel.closeds.size();
  std::vector<FuzzySoftSet> point_sets;
  if (needs & (kNeedPoints | kNeedPointClosed)) {
    point_sets.reserve(P);
    for (const auto& p : points) point_sets.push_back(point_as_fss(p));
  }

  if (needs & kNeedPoints) {
    rel.point_in_open.reset(P, O);
    rel.point_disjoint_point.reset(P, P);
    for (std::size_t p = 0; p < P; ++p) {
      for (std::size_t o = 0; o < O; ++o)
        if (point_in(points[p], *rel.opens[o])) rel.point_in_open.set(p, o);
      for (std::size_t q = 0; q < P; ++q)
        if (fss_disjoint(point_sets[p], point_sets[q], mode)) rel.point_disjoint_point.set(p, q);
    }
  }
  if (needs & kNeedPointClosed) {
    rel.point_in_closed.reset(P, C);
    rel.point_disjoint_closed.reset(P, C);
    rel.point_is_closed.assign(P, 0);
    for (std::size_t p = 0; p < P; ++p) {
      for (std::size_t k = 0; k < C; ++k) {
        if (point_in(points[p], *rel.closeds[k])) rel.point_in_closed.set(p, k);
        if (fss_disjoint(point_sets[p], *rel.closeds[k], mode)) rel.point_disjoint_closed.set(p, k);
      }
      rel.point_is_closed[p] = t.has_closed(point_sets[p]);
    }
  }
  if (needs & kNeedOpenPairs) {
    rel.open_disjoint.reset(O, O);
    rel.open_covers.reset(O, O);
    rel.open_nonempty.assign(O, 0);
    rel.open_is_closed.assign(O, 0);
    rel.open_is_carrier.assign(O, 0);
    for (std::size_t i = 0; i < O; ++i) {
      const auto& g = *rel.opens[i];
      rel.open_nonempty[i] = !g.is_null();
      rel.open_is_closed[i] = t.has_closed(g);
      rel.open_is_carrier[i] = g == t.carrier();
      for (std::size_t j = 0; j < O; ++j) {
        if (fss_disjoint(g, *rel.opens[j], mode)) rel.open_disjoint.set(i, j);
        if (fss_union(g, *rel.opens[j]) == t.carrier()) rel.open_covers.set(i, j);
      }
    }
  }
  if (needs & kNeedClosedPairs) {
    rel.closed_under_open.reset(C, O);
    rel.closed_disjoint.reset(C, C);
    for (std::size_t k = 0; k < C; ++k) {
      for (std::size_t o = 0; o < O; ++o)
        if (fss_leq(*rel.closeds[k], *rel.opens[o])) rel.closed_under_open.set(k, o);
      for (std::size_t m = 0; m < C; ++m)
        if (fss_disjoint(*rel.closeds[k], *rel.closeds[m], mode)) rel.closed_disjoint.set(k, m);
    }
  }
}

}  // namespace fst
