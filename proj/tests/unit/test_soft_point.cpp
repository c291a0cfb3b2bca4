#include <doctest.h>

#include "fst/soft_point.hpp"
#include "support/helpers.hpp"

using fst::FuzzySoftPoint;
using testing::S;

namespace {

FuzzySoftPoint pt(const fst::FramePtr& f, std::string_view text) { return fst::point_of_fss(S(f, text)); }

}  // namespace

TEST_SUITE("soft_point") {
  TEST_CASE("point as a set") {
    auto f = fst::make_frame({"h1", "h2", "h3", "h4"}, {"e1", "e2"});
    auto p = pt(f, "{e1: {h1: 0.1, h2: 0.9, h3: 0, h4: 0.4}}");
    CHECK(p.support_name() == "e1");
    CHECK(fst::point_as_fss(p) == S(f, "{e1: {h1: 1/10, h2: 9/10, h3: 0, h4: 2/5}, e2: {}}"));
    CHECK(fst::point_of_fss(fst::point_as_fss(p)) == p);
    CHECK_THROWS_AS(fst::point_of_fss(S(f, "{e1: {h1: 1}, e2: {h1: 1}}")), fst::PreconditionError);
    CHECK_THROWS_AS(fst::point_of_fss(fst::fss_null(f)), fst::PreconditionError);
    CHECK(fst::render(p) == "e1 @ {h1: 1/10, h2: 9/10, h3: 0, h4: 2/5}");
  }

  TEST_CASE("point complement") {
    auto f = fst::make_frame({"h1", "h2", "h3", "h4"}, {"e1"});
    auto p = pt(f, "{e1: {h1: 0.1, h2: 0.9, h3: 0, h4: 0.4}}");
    CHECK(fst::point_complement(p) == pt(f, "{e1: {h1: 0.9, h2: 0.1, h3: 1, h4: 0.6}}"));
    auto g = fst::make_frame({"x"}, {"e1"});
    CHECK(fst::point_complement(pt(g, "{e1: {x: 1/2}}")) == pt(g, "{e1: {x: 1/2}}"));
    CHECK_THROWS_WITH_AS(fst::point_complement(pt(g, "{e1: {x: 1}}")), doctest::Contains("complement is not a point"),
                         fst::PreconditionError);
  }

  TEST_CASE("membership examples") {
    auto f = fst::make_frame({"h1", "h2"}, {"e1", "e2"});
    auto h = S(f, "{e1: {h1: 0.1, h2: 0.9}, e2: {h1: 0.2, h2: 0.3}}");
    auto p = pt(f, "{e1: {h1: 0.1, h2: 0.2}}");
    CHECK(fst::point_in(p, h));
    auto hc = fst::fss_complement(h);
    CHECK(hc == S(f, "{e1: {h1: 0.9, h2: 0.1}, e2: {h1: 0.8, h2: 0.7}}"));
    CHECK_FALSE(fst::point_in(fst::point_complement(p), hc));
    CHECK(fst::point_in(p, fst::fss_full(f)));
  }

  TEST_CASE("membership across parameter sets") {
    auto u = fst::make_universe({"x"});
    auto fa = fst::make_frame(u, fst::ParameterSet({"a", "b"}));
    auto fb = fst::make_frame(u, fst::ParameterSet({"b"}));
    auto p = pt(fa, "{b: {x: 1/2}}");
    CHECK(fst::point_in(p, S(fb, "{b: {x: 1}}")));
    CHECK_THROWS_WITH_AS(fst::point_in(pt(fa, "{a: {x: 1/2}}"), S(fb, "{b: {x: 1}}")),
                         doctest::Contains("not comparable"), fst::MismatchError);
  }

  TEST_CASE("canonical decomposition") {
    auto f = fst::make_frame({"x"}, {"e1", "e2"});
    CHECK(fst::canonical_decomposition(fst::fss_null(f)).empty());
    auto g = S(f, "{e1: {x: 1/2}, e2: {x: 1/4}}");
    auto d = fst::canonical_decomposition(g);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == pt(f, "{e1: {x: 1/2}}"));
    CHECK(d[1] == pt(f, "{e2: {x: 1/4}}"));

    auto f2 = fst::make_frame({"h1", "h2"}, {"e1", "e2"});
    auto h = S(f2, "{e1: {h1: 0.1, h2: 0.9}, e2: {h1: 0.2, h2: 0.3}}");
    auto acc = fst::fss_null(f2);
    for (const auto& p : fst::canonical_decomposition(h)) acc = fst::fss_union(acc, fst::point_as_fss(p));
    CHECK(acc == h);
  }

  TEST_CASE("decomposition reconstructs every set") {
    testing::Rng rng(11);
    auto f = testing::frame(3, 3);
    for (int i = 0; i < 500; ++i) {
      auto g = testing::random_set(rng, f, 5);
      if (rng.coin()) g = fst::fss_intersection(g, testing::random_set(rng, f, 1));
      auto acc = fst::fss_null(f);
      for (const auto& p : fst::canonical_decomposition(g)) acc = fst::fss_union(acc, fst::point_as_fss(p));
      CHECK(acc == g);
    }
  }

  TEST_CASE("enumeration") {
    auto crisp = fst::GradeLattice::with_denominator(1);
    auto half = fst::GradeLattice::with_denominator(2);
    auto f1 = fst::make_frame({"x"}, {"e1"});
    auto pts = fst::enumerate_points(f1, crisp);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == pt(f1, "{e1: {x: 1}}"));

    auto f2 = fst::make_frame({"x"}, {"e1", "e2"});
    pts = fst::enumerate_points(f2, half);
    std::vector<std::string> rendered;
    for (const auto& p : pts) rendered.push_back(fst::render(p));
    CHECK(rendered == std::vector<std::string>{"e1 @ {x: 1/2}", "e1 @ {x: 1}", "e2 @ {x: 1/2}", "e2 @ {x: 1}"});

    auto f3 = fst::make_frame({"x", "y"}, {"e1"});
    CHECK(fst::enumerate_points(f3, half).size() == 8);

    auto big = testing::frame(3, 4);
    const auto quarter = fst::GradeLattice::with_denominator(4);
    CHECK(fst::count_points(*big, quarter) == 3 * (625 - 1));
    auto all = fst::enumerate_points(big, quarter);
    CHECK(all.size() == 1872);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    try {
      fst::enumerate_points(big, quarter, 1000);
      FAIL("expected cap error");
    } catch (const fst::CapExceeded& e) {
      CHECK(e.count() == 1872);
    }
  }

  TEST_CASE("membership meets intersections; unions only one way") {
    testing::Rng rng(5);
    auto f = testing::frame(2, 2);
    auto pts = fst::enumerate_points(f, fst::GradeLattice::with_denominator(4));
    bool converse_fails = false;
    for (int i = 0; i < 300; ++i) {
      auto a = testing::random_set(rng, f, 4), b = testing::random_set(rng, f, 4);
      for (const auto& p : pts) {
        CHECK(fst::point_in(p, fst::fss_intersection(a, b)) == (fst::point_in(p, a) && fst::point_in(p, b)));
        const bool some = fst::point_in(p, a) || fst::point_in(p, b);
        const bool in_union = fst::point_in(p, fst::fss_union(a, b));
        CHECK((!some || in_union));
        converse_fails = converse_fails || (in_union && !some);
      }
    }
    CHECK(converse_fails);
  }

  TEST_CASE("pair relations") {
    auto f = fst::make_frame({"x", "y"}, {"e1", "e2"});
    auto p = pt(f, "{e1: {x: 1}}"), q = pt(f, "{e1: {y: 1/2}}"), r = pt(f, "{e2: {x: 1}}");
    using fst::Disjointness;
    using fst::PairRelation;
    CHECK(fst::points_related(p, q, PairRelation::distinct, Disjointness::pointwise));
    CHECK_FALSE(fst::points_related(p, p, PairRelation::distinct, Disjointness::pointwise));
    CHECK(fst::points_related(p, q, PairRelation::disjoint, Disjointness::pointwise));
    CHECK(fst::points_related(p, r, PairRelation::disjoint, Disjointness::pointwise));
    CHECK_FALSE(fst::points_related(p, r, PairRelation::disjoint, Disjointness::cross_parameter));
    CHECK(fst::parse_pair_relation("disjoint") == PairRelation::disjoint);
    CHECK_THROWS_AS(fst::parse_pair_relation("apart"), fst::ParseError);
  }
}
