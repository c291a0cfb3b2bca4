#include <doctest.h>

#include "fst/topology.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

using fst::FuzzySoftSet;
using testing::S;

namespace {

struct Running {
  fst::FramePtr f = fst::make_frame({"x", "y"}, {"e1"});
  FuzzySoftSet full = fst::fss_full(f);
  FuzzySoftSet u = S(f, "{e1: {x: 1/2, y: 0}}");
  fst::FuzzySoftTopology t = fst::validate_topology(full, {fst::fss_null(f), full, u});
};

std::vector<FuzzySoftSet> as_vector(std::span<const FuzzySoftSet> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_SUITE("topology") {
  TEST_CASE("validation accepts the indiscrete family and canonicalizes") {
    auto f = testing::frame(1, 2);
    auto c = S(f, "{e1: {x: 1, y: 1/2}}");
    auto t = fst::validate_topology(c, {c, fst::fss_null(f), c});
    CHECK(t.opens().size() == 2);
    CHECK(t.opens()[0] == fst::fss_null(f));
    CHECK(fst::indiscrete_topology(c) == t);
  }

  TEST_CASE("validation names the pair whose meet is missing") {
    auto f = testing::frame(1, 2);
    auto full = fst::fss_full(f);
    auto u = S(f, "{e1: {x: 1, y: 1/2}}"), v = S(f, "{e1: {x: 1/2, y: 1}}");
    std::vector<FuzzySoftSet> fam{fst::fss_null(f), full, u, v};
    auto check = fst::check_topology(full, fam);
    REQUIRE(check.violations.size() == 1);
    CHECK(check.violations[0].axiom == fst::TopologyAxiom::intersection);
    CHECK(check.violations[0].witness == std::vector<FuzzySoftSet>{v, u});
    try {
      fst::validate_topology(full, fam);
      FAIL("expected a topology error");
    } catch (const fst::TopologyError& e) {
      CHECK(std::string(e.what()).find("axiom-2-intersection") != std::string::npos);
    }
  }

  TEST_CASE("validation reports each violated axiom") {
    auto f = testing::frame(1, 2);
    auto c = S(f, "{e1: {x: 1/2, y: 1/2}}");
    auto above = S(f, "{e1: {x: 1}}");
    auto a = S(f, "{e1: {x: 1/2}}"), b = S(f, "{e1: {y: 1/2}}");
    auto check = fst::check_topology(c, std::vector<FuzzySoftSet>{above, a, b});
    std::vector<fst::TopologyAxiom> axioms;
    for (const auto& v : check.violations) axioms.push_back(v.axiom);
    CHECK(axioms == std::vector<fst::TopologyAxiom>{fst::TopologyAxiom::within_carrier, fst::TopologyAxiom::contains_null,
                                                   fst::TopologyAxiom::contains_carrier, fst::TopologyAxiom::intersection,
                                                   fst::TopologyAxiom::union_});
    CHECK(check.violations[0].witness[0] == above);
    auto g = testing::frame(1, 3);
    CHECK_THROWS_AS(fst::check_topology(c, std::vector<FuzzySoftSet>{fst::fss_null(g)}), fst::MismatchError);
  }

  TEST_CASE("crisp discrete family on two parameters") {
    auto f = testing::frame(2, 2);
    auto t = fst::discrete_topology(fst::fss_full(f), fst::GradeLattice::with_denominator(1), 100);
    CHECK(t.opens().size() == 16);
    for (const auto& g : t.opens()) CHECK(fst::is_clopen(t, g));
  }

  TEST_CASE("closed sets") {
    Running r;
    CHECK(as_vector(fst::closed_sets(r.t)) ==
          std::vector<FuzzySoftSet>{fst::fss_null(r.f), S(r.f, "{e1: {x: 1/2, y: 1}}"), r.full});
    auto ind = fst::indiscrete_topology(r.full);
    CHECK(as_vector(fst::closed_sets(ind)) == std::vector<FuzzySoftSet>{fst::fss_null(r.f), r.full});
    CHECK(fst::is_open(r.t, fst::fss_null(r.f)));
    CHECK(fst::is_clopen(ind, fst::fss_null(r.f)));
    CHECK_FALSE(fst::is_clopen(r.t, r.u));
  }

  TEST_CASE("closed sets are taken inside the carrier") {
    auto f = testing::frame(1, 2);
    auto c = S(f, "{e1: {x: 1, y: 1/2}}");
    auto t = fst::indiscrete_topology(c);
    // carrier ∧ (1 - carrier) is not null for a fuzzy carrier.
    CHECK(as_vector(fst::closed_sets(t)) == std::vector<FuzzySoftSet>{S(f, "{e1: {y: 1/2}}"), c});
    CHECK(fst::closure(t, c) == c);
    CHECK(fst::closure(t, fst::fss_null(f)) == S(f, "{e1: {y: 1/2}}"));
  }

  TEST_CASE("closure and interior examples") {
    Running r;
    CHECK(fst::closure(r.t, S(r.f, "{e1: {x: 1/4}}")) == S(r.f, "{e1: {x: 1/2, y: 1}}"));
    CHECK(fst::closure(r.t, r.full) == r.full);
    CHECK(fst::closure(r.t, fst::fss_null(r.f)) == fst::fss_null(r.f));
    CHECK(fst::interior(r.t, S(r.f, "{e1: {x: 3/4, y: 1/4}}")) == r.u);
    CHECK(fst::interior(r.t, fst::fss_null(r.f)) == fst::fss_null(r.f));
    CHECK(fst::interior(r.t, r.full) == r.full);
  }

  TEST_CASE("neighborhoods") {
    Running r;
    auto ind = fst::indiscrete_topology(r.full);
    auto half = fst::GradeLattice::with_denominator(2);
    auto p = fst::point_of_fss(S(r.f, "{e1: {x: 1/2}}"));
    CHECK(fst::is_neighborhood(r.t, r.full, p));
    CHECK_FALSE(fst::is_neighborhood(ind, S(r.f, "{e1: {x: 1, y: 1/2}}"), p));
    CHECK(fst::neighborhood_system(ind, p, half, 100) == std::vector<FuzzySoftSet>{r.full});
    CHECK(fst::is_neighborhood(r.t, r.u, p));
    auto sys = fst::neighborhood_system(r.t, p, half, 100);
    // Every lattice set above u: x = 1/2 or 1, y free.
    CHECK(sys.size() == 6);
    CHECK_THROWS_AS(fst::neighborhood_system(r.t, p, half, 5), fst::CapExceeded);
  }

  TEST_CASE("subspaces") {
    Running r;
    auto g = S(r.f, "{e1: {x: 1}}");
    auto view = fst::subspace(r.t, g);
    CHECK(as_vector(view.opens()) == std::vector<FuzzySoftSet>{fst::fss_null(r.f), r.u, g});
    CHECK(fst::subspace_closure(view, r.u) == fst::fss_intersection(fst::closure(r.t, r.u), g));
    CHECK(fst::subspace_closure(view, g) == g);
    CHECK(fst::subspace(r.t, r.full).topology == r.t);
    CHECK(view.opens().size() == 3);
    CHECK(fst::subspace(r.t, fst::fss_null(r.f)).opens().size() == 1);
    auto full_view = fst::subspace(r.t, r.full);
    CHECK(fst::subspace_closure(full_view, r.u) == fst::closure(r.t, r.u));
    auto narrow = fst::indiscrete_topology(S(r.f, "{e1: {x: 1/2}}"));
    CHECK_THROWS_AS(fst::subspace(narrow, r.full), fst::PreconditionError);
  }

  TEST_CASE("finer relation") {
    Running r;
    auto ind = fst::indiscrete_topology(r.full);
    auto disc = fst::discrete_topology(r.full, fst::GradeLattice::with_denominator(2), 100);
    CHECK(fst::is_finer(r.t, r.t));
    CHECK(fst::is_finer(disc, ind));
    CHECK_FALSE(fst::is_finer(ind, r.t));
    CHECK_THROWS_AS(fst::is_finer(ind, fst::indiscrete_topology(r.u)), fst::MismatchError);
  }

  TEST_CASE("generation") {
    auto f = testing::frame(1, 2);
    auto full = fst::fss_full(f);
    std::vector<FuzzySoftSet> gens{S(f, "{e1: {x: 1, y: 1/2}}"), S(f, "{e1: {x: 1/2, y: 1}}")};
    auto t = fst::generate_topology(full, gens, 64);
    REQUIRE(t);
    CHECK(t->opens().size() == 5);
    CHECK_FALSE(fst::generate_topology(full, gens, 4));
    CHECK_THROWS_AS(fst::generate_topology(S(f, "{e1: {x: 1/2}}"), gens, 64), fst::PreconditionError);
  }

  TEST_CASE("engine agrees with the brute-force oracle") {
    testing::Rng rng(2024);
    for (int round = 0; round < 300; ++round) {
      const int D = round % 2 ? 4 : 2;
      auto f = testing::frame(1 + rng.below(2), 1 + rng.below(2));
      auto t = testing::random_topology(rng, f, D);
      auto s = oracle::to_space(t, D);
      CHECK(oracle::is_topology(s));
      std::vector<oracle::Set> ks = oracle::closeds(s);
      for (const auto& k : t.closeds()) CHECK(oracle::in(ks, oracle::to_set(k, D)));
      for (int i = 0; i < 10; ++i) {
        auto g = testing::random_set(rng, f, D);
        CHECK(oracle::to_set(fst::closure(t, g), D) == oracle::closure(s, oracle::to_set(g, D)));
        CHECK(oracle::to_set(fst::interior(t, g), D) == oracle::interior(s, oracle::to_set(g, D)));
      }
    }
  }

  TEST_CASE("closure and interior laws on random spaces") {
    testing::Rng rng(99);
    for (int round = 0; round < 200; ++round) {
      auto f = testing::frame(2, 2);
      auto t = testing::random_topology(rng, f, 4);
      const auto& c = t.carrier();
      const bool all_one = c == fst::fss_full(f);
      using fst::closure;
      using fst::interior;
      for (int i = 0; i < 8; ++i) {
        auto g = testing::random_set(rng, f, 4, &c), h = testing::random_set(rng, f, 4, &c);
        if (all_one) {
          CHECK(fst::fss_complement(closure(t, g)) == interior(t, fst::fss_complement(g)));
          CHECK(fst::fss_complement(interior(t, g)) == closure(t, fst::fss_complement(g)));
        }
        auto gh = fst::fss_intersection(g, h);
        CHECK(fst::fss_leq(closure(t, gh), closure(t, g)));
        CHECK(fst::fss_leq(interior(t, gh), interior(t, g)));
        CHECK(closure(t, closure(t, g)) == closure(t, g));
        CHECK(interior(t, interior(t, g)) == interior(t, g));
        CHECK(closure(t, fst::fss_union(g, h)) == fst::fss_union(closure(t, g), closure(t, h)));
        CHECK(interior(t, gh) == fst::fss_intersection(interior(t, g), interior(t, h)));
        CHECK(fst::fss_leq(closure(t, gh), fst::fss_intersection(closure(t, g), closure(t, h))));
        CHECK(fst::fss_leq(fst::fss_union(interior(t, g), interior(t, h)), interior(t, fst::fss_union(g, h))));
        CHECK(fst::is_closed(t, closure(t, g)));
        CHECK(fst::is_open(t, interior(t, g)));
        CHECK(fst::is_closed(t, g) == (closure(t, g) == g));
        bool nbhd_of_points = true;
        for (const auto& p : fst::canonical_decomposition(g)) nbhd_of_points = nbhd_of_points && fst::is_neighborhood(t, g, p);
        CHECK(fst::is_open(t, g) == nbhd_of_points);
      }
      CHECK(closure(t, c) == c);
      if (fst::is_crisp(c)) CHECK(closure(t, fst::fss_null(f)) == fst::fss_null(f));
      CHECK(interior(t, c) == c);
    }
  }

  TEST_CASE("neighborhood system laws") {
    testing::Rng rng(3);
    auto half = fst::GradeLattice::with_denominator(2);
    for (int round = 0; round < 40; ++round) {
      auto f = testing::frame(2, 2);
      auto t = testing::random_topology(rng, f, 2);
      for (const auto& p : fst::enumerate_points(f, half)) {
        if (!fst::point_in(p, t.carrier())) continue;
        auto sys = fst::neighborhood_system(t, p, half, 100);
        auto member = [&](const FuzzySoftSet& n) { return std::binary_search(sys.begin(), sys.end(), n); };
        for (const auto& n : sys) {
          CHECK(fst::point_in(p, n));
          CHECK(member(fst::fss_intersection(n, sys.front())));
          bool inner = false;
          for (const auto& h : sys) {
            if (!fst::fss_leq(h, n)) continue;
            bool all = true;
            for (const auto& q : fst::canonical_decomposition(h)) all = all && fst::is_neighborhood(t, h, q);
            inner = inner || all;
          }
          CHECK(inner);
        }
        for (const auto& n : fst::lattice_subsets(t.carrier(), half, 100)) {
          bool above_member = std::any_of(sys.begin(), sys.end(), [&](const auto& m) { return fst::fss_leq(m, n); });
          CHECK(above_member == member(n));
          CHECK(member(n) == fst::point_in(p, fst::interior(t, n)));
        }
      }
    }
  }

  TEST_CASE("subspace closure matches the parent formula on crisp subspace carriers") {
    testing::Rng rng(17);
    auto crisp = fst::GradeLattice::with_denominator(1);
    for (int round = 0; round < 100; ++round) {
      auto f = testing::frame(2, 2);
      auto t = std::make_shared<const fst::FuzzySoftTopology>(testing::random_topology(rng, f, 4));
      for (const auto& g : fst::lattice_subsets(t->carrier(), crisp, 100)) {
        auto view = fst::subspace(t, g);
        for (int i = 0; i < 4; ++i) {
          auto h = testing::random_set(rng, f, 4, &g);
          CHECK(fst::subspace_closure(view, h) == fst::fss_intersection(fst::closure(*t, h), g));
        }
        for (const auto& k : view.topology.closeds()) {
          bool from_parent = false;
          for (const auto& kp : t->closeds()) from_parent = from_parent || fst::fss_intersection(kp, g) == k;
          CHECK(from_parent);
        }
      }
    }
  }
}
