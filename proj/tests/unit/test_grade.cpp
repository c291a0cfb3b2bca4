#include <doctest.h>

#include "fst/grade.hpp"

using fst::Grade;

namespace {

fst::FuzzySet fs(const fst::UniversePtr& u, std::initializer_list<const char*> grades) {
  std::vector<Grade> g;
  for (auto t : grades) g.push_back(fst::parse_grade(t));
  return fst::FuzzySet(u, g);
}

std::vector<Grade> quarters() {
  std::vector<Grade> out;
  for (int i = 0; i <= 4; ++i) out.emplace_back(i, 4);
  return out;
}

}  // namespace

TEST_SUITE("grade") {
  TEST_CASE("canonical representation") {
    CHECK(Grade(2, 4) == Grade(1, 2));
    CHECK(Grade(2, 4).numerator() == 1);
    CHECK(Grade(0, 7) == Grade::zero());
    CHECK(Grade(5, 5).is_one());
    CHECK(Grade(1, 3) < Grade(1, 2));
    CHECK_THROWS_AS(Grade(3, 2), fst::PreconditionError);
    CHECK_THROWS_AS(Grade(-1, 2), fst::PreconditionError);
    CHECK_THROWS_AS(Grade(1, 0), fst::PreconditionError);
  }

  TEST_CASE("complement examples") {
    CHECK(fst::grade_complement(Grade::zero()) == Grade::one());
    CHECK(fst::grade_complement(Grade(1, 10)) == Grade(9, 10));
    CHECK(fst::grade_complement(Grade(1, 2)) == Grade(1, 2));
  }

  TEST_CASE("complement is an involution") {
    for (int d = 1; d <= 12; ++d)
      for (int n = 0; n <= d; ++n) {
        Grade g(n, d);
        CHECK(fst::grade_complement(fst::grade_complement(g)) == g);
      }
  }

  TEST_CASE("parsing and printing") {
    CHECK(fst::parse_grade("0.1") == Grade(1, 10));
    CHECK(fst::parse_grade("0.25") == Grade(1, 4));
    CHECK(fst::parse_grade(".5") == Grade(1, 2));
    CHECK(fst::parse_grade("1.000000") == Grade::one());
    CHECK(fst::parse_grade("3/6") == Grade(1, 2));
    CHECK(fst::parse_grade(" 1 ") == Grade::one());
    CHECK(fst::parse_grade("0") == Grade::zero());
    CHECK(fst::to_string(Grade(3, 6)) == "1/2");
    CHECK(fst::to_string(Grade::zero()) == "0");
    CHECK(fst::to_string(Grade::one()) == "1");
    for (const char* bad : {"0.1234567", "2/1", "-1/2", "abc", "1/0", "", ".", "1.5", "0.1e2", "1//2"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(fst::parse_grade(bad), fst::ParseError);
    }
  }

  TEST_CASE("print then parse is the identity") {
    for (int d = 1; d <= 30; ++d)
      for (int n = 0; n <= d; ++n) CHECK(fst::parse_grade(fst::to_string(Grade(n, d))) == Grade(n, d));
  }

  TEST_CASE("fuzzy set operations") {
    auto u = fst::make_universe({"x", "y"});
    auto a = fs(u, {"1/2", "0"});
    auto b = fs(u, {"1/4", "3/4"});
    CHECK(fst::fuzzy_union(a, b) == fs(u, {"1/2", "3/4"}));
    CHECK(fst::fuzzy_union(a, fst::FuzzySet::constant(u, Grade::zero())) == a);
    CHECK(fst::fuzzy_union(a, a) == a);
    CHECK(fst::fuzzy_intersection(a, b) == fs(u, {"1/4", "0"}));
    CHECK(fst::fuzzy_intersection(a, fst::FuzzySet::constant(u, Grade::one())) == a);
    CHECK(fst::fuzzy_intersection(fs(u, {"0.1", "0.9"}), fs(u, {"0.9", "0.1"})) == fs(u, {"1/10", "1/10"}));
  }

  TEST_CASE("fuzzy order examples") {
    auto u = fst::make_universe({"h1", "h2"});
    CHECK(fst::fuzzy_leq(fst::FuzzySet::constant(u, Grade::zero()), fs(u, {"0.3", "0"})));
    CHECK(fst::fuzzy_leq(fs(u, {"0.1", "0.2"}), fs(u, {"0.1", "0.9"})));
    CHECK_FALSE(fst::fuzzy_leq(fs(u, {"0.9", "0.8"}), fs(u, {"0.9", "0.1"})));
  }

  TEST_CASE("universe mismatch is rejected") {
    auto u = fst::make_universe({"x", "y"});
    auto v = fst::make_universe({"x", "z"});
    CHECK_THROWS_AS(fst::fuzzy_union(fs(u, {"0", "1"}), fs(v, {"0", "1"})), fst::MismatchError);
    CHECK_THROWS_AS(fst::fuzzy_leq(fs(u, {"0", "1"}), fs(v, {"0", "1"})), fst::MismatchError);
    // Equal element lists denote the same universe.
    auto u2 = fst::make_universe({"x", "y"});
    CHECK_NOTHROW(fst::fuzzy_union(fs(u, {"0", "1"}), fs(u2, {"0", "1"})));
  }

  TEST_CASE("universe validation") {
    CHECK_THROWS_AS(fst::make_universe({}), fst::PreconditionError);
    CHECK_THROWS_AS(fst::make_universe({"x", "x"}), fst::PreconditionError);
    CHECK_THROWS_AS(fst::FuzzySet(fst::make_universe({"x"}), {Grade::zero(), Grade::one()}), fst::PreconditionError);
  }

  TEST_CASE("bounded distributive lattice laws, exhaustive over quarter grades") {
    auto u = fst::make_universe({"x", "y"});
    std::vector<fst::FuzzySet> sets;
    for (auto g : quarters())
      for (auto h : quarters()) sets.emplace_back(u, std::vector<Grade>{g, h});
    const auto zero = fst::FuzzySet::constant(u, Grade::zero());
    const auto one = fst::FuzzySet::constant(u, Grade::one());
    using fst::fuzzy_intersection;
    using fst::fuzzy_union;
    for (const auto& a : sets) {
      CHECK(fuzzy_union(a, zero) == a);
      CHECK(fuzzy_intersection(a, one) == a);
      CHECK(fst::fuzzy_complement(fst::fuzzy_complement(a)) == a);
      for (const auto& b : sets) {
        CHECK(fuzzy_union(a, b) == fuzzy_union(b, a));
        CHECK(fuzzy_intersection(a, fuzzy_union(a, b)) == a);
        CHECK(fuzzy_union(a, fuzzy_intersection(a, b)) == a);
        const bool le = fst::fuzzy_leq(a, b);
        CHECK(le == (fuzzy_intersection(a, b) == a));
        CHECK(le == (fuzzy_union(a, b) == b));
        CHECK(fst::fuzzy_complement(fuzzy_union(a, b)) ==
              fuzzy_intersection(fst::fuzzy_complement(a), fst::fuzzy_complement(b)));
        for (const auto& c : sets) {
          CHECK(fuzzy_union(a, fuzzy_union(b, c)) == fuzzy_union(fuzzy_union(a, b), c));
          CHECK(fuzzy_intersection(a, fuzzy_union(b, c)) ==
                fuzzy_union(fuzzy_intersection(a, b), fuzzy_intersection(a, c)));
        }
      }
    }
  }

  TEST_CASE("lattice closure") {
    CHECK(fst::to_string(fst::lattice_close({})) == "{0, 1}");
    const Grade half[] = {Grade(1, 2)};
    CHECK(fst::to_string(fst::lattice_close(half)) == "{0, 1/2, 1}");
    const Grade seeds[] = {Grade(1, 10), Grade(4, 10)};
    const auto l = fst::lattice_close(seeds);
    CHECK(fst::to_string(l) == "{0, 1/10, 2/5, 3/5, 9/10, 1}");
    for (auto g : l.grades()) CHECK(l.contains(fst::grade_complement(g)));
    CHECK(fst::lattice_close(l.grades()) == l);
  }

  TEST_CASE("lattice validation") {
    CHECK_THROWS_AS(fst::GradeLattice({Grade::zero(), Grade(1, 3), Grade::one()}), fst::PreconditionError);
    CHECK_THROWS_AS(fst::GradeLattice({Grade::one()}), fst::PreconditionError);
    CHECK(fst::GradeLattice({Grade::one(), Grade::zero(), Grade::one()}).size() == 2);
    CHECK(fst::to_string(fst::GradeLattice::with_denominator(4)) == "{0, 1/4, 1/2, 3/4, 1}");
    CHECK(fst::GradeLattice::with_denominator(4).index_of(Grade(3, 4)) == 3);
  }
}
