#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fst/soft_set.hpp"
#include "fst/topology.hpp"

#include <doctest.h>

namespace testing {

/// Universe x1..xn (or x, y, z, w when n <= 4), parameters e1..em.
inline fst::FramePtr frame(std::size_t params, std::size_t elems) {
  static const char* short_names[] = {"x", "y", "z", "w"};
  std::vector<std::string> u, a;
  for (std::size_t i = 0; i < elems; ++i) u.push_back(elems <= 4 ? short_names[i] : "x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < params; ++i) a.push_back("e" + std::to_string(i + 1));
  return fst::make_frame(u, a);
}

inline fst::FuzzySoftSet S(const fst::FramePtr& f, std::string_view text) { return fst::parse_soft_set(text, f); }

inline fst::FuzzySoftSet from_ints(const fst::FramePtr& f, const std::vector<int>& cells, int D) {
  std::vector<fst::Grade> g;
  for (int c : cells) g.emplace_back(c, D);
  return fst::FuzzySoftSet(f, std::move(g));
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(eng); }
  bool coin() { return below(2) == 1; }
};

/// Random set with grades in {0, 1/D, ..., 1}, capped by `bound` when given.
inline fst::FuzzySoftSet random_set(Rng& rng, const fst::FramePtr& f, int D, const fst::FuzzySoftSet* bound = nullptr) {
  std::vector<int> cells(f->cells());
  for (auto& c : cells) c = rng.below(D + 1);
  auto g = from_ints(f, cells, D);
  return bound ? fst::fss_intersection(g, *bound) : g;
}

/// Topology generated by up to `max_generators` random sets below a carrier
/// that is all-one half of the time.
inline fst::FuzzySoftTopology random_topology(Rng& rng, const fst::FramePtr& f, int D, int max_generators = 3,
                                              std::size_t max_opens = 64) {
  const auto carrier = rng.coin() ? fst::fss_full(f) : random_set(rng, f, D);
  while (true) {
    std::vector<fst::FuzzySoftSet> gens;
    const int n = rng.below(max_generators + 1);
    for (int i = 0; i < n; ++i) gens.push_back(random_set(rng, f, D, &carrier));
    if (auto t = fst::generate_topology(carrier, gens, max_opens)) return *t;
  }
}

}  // namespace testing

namespace doctest {
template <>
struct StringMaker<fst::FuzzySoftSet> {
  static String convert(const fst::FuzzySoftSet& g) { return fst::render(g).c_str(); }
};
template <>
struct StringMaker<fst::FuzzySoftPoint> {
  static String convert(const fst::FuzzySoftPoint& p) { return fst::render(p).c_str(); }
};
}  // namespace doctest
