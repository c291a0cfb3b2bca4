#include "fst/auditor.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <thread>
#include <unordered_set>

#include "audit/claims.hpp"
#include "audit/spaces.hpp"

namespace fst {

using audit::Ix;
using audit::ObjectSpace;
using audit::Parts;
using audit::PoolSpace;

// ---- corpus

FramePtr corpus_frame(const CorpusSpec& spec) {
  static const char* const kNames[] = {"x", "y", "z", "w"};
  std::vector<std::string> u, a;
  for (std::size_t i = 0; i < spec.universe_size; ++i)
    u.push_back(spec.universe_size <= 4 ? std::string(kNames[i]) : "x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < spec.parameters; ++i) a.push_back("e" + std::to_string(i + 1));
  return make_frame(std::move(u), std::move(a));
}

FuzzySoftSet corpus_carrier(const CorpusSpec& spec, const FramePtr& frame) {
  FuzzySoftSet c = spec.carrier_text ? parse_soft_set(*spec.carrier_text, frame) : fss_full(frame);
  if (!lattice_representable(c, spec.lattice))
    throw PreconditionError("carrier " + render(c) + " is not on the lattice " + to_string(spec.lattice));
  return c;
}

FuzzySoftTopology SpaceCorpus::topology(std::size_t i) const {
  const auto& s = spaces.at(i);
  std::vector<FuzzySoftSet> opens;
  for (Ix o : s.opens) opens.push_back(pool->set(o));
  return validate_topology(pool->set(s.carrier), std::move(opens));
}

namespace {

std::uint64_t saturating_binomial_sum(std::uint64_t n, std::size_t k_max, std::uint64_t limit) {
  std::uint64_t total = 0, term = 1;
  for (std::size_t k = 0; k <= k_max && k <= n; ++k) {
    if (k > 0) {
      // term = C(n, k) from C(n, k-1); the division is exact.
      const std::uint64_t num = n - k + 1;
      if (term > limit / num) return limit + 1;
      term = term * num / k;
    }
    total += term;
    if (total > limit) return limit + 1;
  }
  return total;
}

struct FamilyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::size_t h = 0;
    for (auto w : v) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class Enumerator {
 public:
  Enumerator(const SetPool& pool, Ix carrier, const CorpusSpec& spec)
      : pool_(pool), carrier_(carrier), spec_(spec), words_((pool.size() + 63) / 64) {
    bits::for_each(pool.below(carrier), [&](std::size_t i) { candidates_.push_back(static_cast<Ix>(i)); });
  }

  void run(SpaceCorpus& out) {
    const std::uint64_t total = saturating_binomial_sum(candidates_.size(), spec_.max_generators, spec_.cap);
    if (total > spec_.cap) throw CapExceeded("generator families", total, spec_.cap);
    Family base;
    base.mask.assign(words_, 0);
    add(base, 0);
    add(base, carrier_);
    ++families_;
    record(base);
    descend(base, 0, spec_.max_generators);
    std::vector<std::vector<Ix>> sorted;
    sorted.reserve(seen_.size());
    for (const auto& m : seen_) {
      std::vector<Ix> opens;
      bits::for_each(m, [&](std::size_t i) { opens.push_back(static_cast<Ix>(i)); });
      sorted.push_back(std::move(opens));
    }
    std::sort(sorted.begin(), sorted.end());
    for (auto& o : sorted) out.spaces.push_back({"enumerated #" + std::to_string(out.spaces.size()), carrier_, std::move(o)});
    out.families = families_;
    out.skipped = skipped_;
    out.enumerated = out.spaces.size();
  }

 private:
  struct Family {
    std::vector<std::uint64_t> mask;
    std::vector<Ix> members;
  };

  static bool has(const Family& f, Ix i) { return (f.mask[i / 64] >> (i % 64)) & 1U; }
  static void add(Family& f, Ix i) {
    f.mask[i / 64] |= std::uint64_t{1} << (i % 64);
    f.members.push_back(i);
  }

  bool close_with(Family& f, Ix g) const {
    if (has(f, g)) return true;
    if (f.members.size() >= spec_.max_opens) return false;
    std::vector<Ix> work{g};
    add(f, g);
    while (!work.empty()) {
      const Ix x = work.back();
      work.pop_back();
      for (std::size_t j = 0; j < f.members.size(); ++j) {
        const Ix y = f.members[j];
        for (Ix z : {pool_.meet(x, y), pool_.join(x, y)})
          if (!has(f, z)) {
            if (f.members.size() >= spec_.max_opens) return false;
            add(f, z);
            work.push_back(z);
          }
      }
    }
    return true;
  }

  void record(const Family& f) { seen_.insert(f.mask); }

  void descend(const Family& f, std::size_t start, std::size_t depth) {
    if (depth == 0) return;
    for (std::size_t i = start; i < candidates_.size(); ++i) {
      Family next = f;
      ++families_;
      if (!close_with(next, candidates_[i])) {
        const std::uint64_t below = saturating_binomial_sum(candidates_.size() - i - 1, depth - 1, UINT64_MAX / 2);
        skipped_ += below;
        families_ += below - 1;
        continue;
      }
      record(next);
      descend(next, i + 1, depth - 1);
    }
  }

  const SetPool& pool_;
  Ix carrier_;
  const CorpusSpec& spec_;
  std::size_t words_;
  std::vector<Ix> candidates_;
  std::unordered_set<std::vector<std::uint64_t>, FamilyHash> seen_;
  std::uint64_t families_ = 0, skipped_ = 0;
};

SpaceCorpus empty_corpus(const CorpusSpec& spec) {
  SpaceCorpus out;
  out.spec = spec;
  out.pool = std::make_shared<const SetPool>(corpus_frame(spec), spec.lattice, spec.pool_cap);
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t kMaxRedraws = 10'000;

struct RandomDraw {
  FuzzySoftTopology space;
  std::uint64_t redraws;
};

RandomDraw draw_random(std::uint64_t seed, const CorpusSpec& spec, const FramePtr& frame) {
  const FuzzySoftSet spec_carrier = corpus_carrier(spec, frame);
  std::vector<std::size_t> top;
  for (auto g : spec_carrier.cells()) top.push_back(*spec.lattice.index_of(g));
  std::mt19937_64 rng(splitmix64(seed));
  auto below = [&](const std::vector<std::size_t>& bound) {
    std::vector<Grade> cells;
    for (auto b : bound) cells.push_back(spec.lattice[std::uniform_int_distribution<std::size_t>(0, b)(rng)]);
    return FuzzySoftSet(frame, std::move(cells));
  };
  std::uint64_t redraws = 0;
  for (;;) {
    FuzzySoftSet carrier = spec_carrier;
    if (rng() & 1U) {
      do carrier = below(top);
      while (fss_is_null(carrier) && !fss_is_null(spec_carrier));
    }
    std::vector<std::size_t> bound;
    for (auto g : carrier.cells()) bound.push_back(*spec.lattice.index_of(g));
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, spec.random_max_generators))(rng);
    std::vector<FuzzySoftSet> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(below(bound));
    if (auto t = generate_topology(carrier, gens, spec.max_opens)) return {std::move(*t), redraws};
    if (++redraws > kMaxRedraws) throw CapExceeded("random space redraws", redraws, kMaxRedraws);
  }
}

void add_landmarks(SpaceCorpus& out, Ix carrier) {
  const SetPool& pool = *out.pool;
  std::vector<Ix> all, pieces;
  bits::for_each(pool.below(carrier), [&](std::size_t i) {
    const auto g = static_cast<Ix>(i);
    all.push_back(g);
    if (pool.join(g, pool.restrict_off(carrier, g)) == carrier) pieces.push_back(g);
  });
  out.spaces.push_back({"landmark discrete", carrier, all});
  out.spaces.push_back({"landmark crisp-discrete", carrier, pieces});
  out.landmarks = 2;
}

}  // namespace

SpaceCorpus enumerate_topologies(const CorpusSpec& spec) {
  SpaceCorpus out = empty_corpus(spec);
  const Ix carrier = out.pool->index_of(corpus_carrier(spec, out.pool->frame()));
  Enumerator(*out.pool, carrier, spec).run(out);
  return out;
}

FuzzySoftTopology random_space(std::uint64_t seed, const CorpusSpec& spec) {
  return draw_random(seed, spec, corpus_frame(spec)).space;
}

SpaceCorpus build_corpus(const CorpusSpec& spec) {
  SpaceCorpus out = enumerate_topologies(spec);
  const SetPool& pool = *out.pool;
  const Ix carrier = pool.index_of(corpus_carrier(spec, pool.frame()));
  if (spec.landmarks) add_landmarks(out, carrier);
  for (std::size_t i = 0; i < spec.random_count; ++i) {
    const std::uint64_t seed = spec.seed + i;
    auto d = draw_random(seed, spec, pool.frame());
    std::vector<Ix> opens;
    for (const auto& o : d.space.opens()) opens.push_back(pool.index_of(o));
    std::sort(opens.begin(), opens.end());
    out.spaces.push_back({"random seed " + std::to_string(seed), pool.index_of(d.space.carrier()), std::move(opens)});
    out.random_redraws += d.redraws;
    ++out.random;
  }
  return out;
}

// ---- registry

std::string_view to_string(ClaimClass c) {
  switch (c) {
    case ClaimClass::asserted_invariant: return "asserted-invariant";
    case ClaimClass::audited: return "audited";
    case ClaimClass::reproduced_example: return "reproduced-example";
  }
  return "?";
}

std::string_view to_string(SearchState s) {
  switch (s) {
    case SearchState::found: return "found";
    case SearchState::exhausted: return "exhausted";
    case SearchState::none_within_budget: return "none-within-budget";
  }
  return "?";
}

namespace {

using PoolFn = void (*)(PoolSpace&, Parts&);
using ObjectFn = void (*)(ObjectSpace&, Parts&);
using ExampleFn = std::vector<PartOutcome> (*)();

struct ClaimDef {
  ClaimInfo info;
  PoolFn pool = nullptr;
  ObjectFn object = nullptr;
  ExampleFn example = nullptr;
};

PartOutcome example_part(std::string_view name, bool ok, std::vector<WitnessLine> lines) {
  PartOutcome p;
  p.name = name;
  p.applicable = true;
  p.instances = 1;
  p.failed = !ok;
  p.witness = std::move(lines);
  return p;
}

std::vector<PartOutcome> example_pt2() {
  const auto f = make_frame({"h1", "h2"}, {"e1", "e2"});
  const auto p = point_of_fss(parse_soft_set("{e1: {h1: 0.1, h2: 0.2}}", f));
  const auto h = parse_soft_set("{e1: {h1: 0.1, h2: 0.9}, e2: {h1: 0.2, h2: 0.3}}", f);
  const auto hc = fss_complement(h);
  const auto pc = point_complement(p);
  return {example_part("containment", point_in(p, h), {{"point", render(p)}, {"set", render(h)}}),
          example_part("complement", !point_in(pc, hc), {{"complement point", render(pc)}, {"complement set", render(hc)}})};
}

std::vector<PartOutcome> example_pt_complement() {
  const auto f = make_frame({"h1", "h2", "h3", "h4"}, {"e1", "e2", "e3", "e4", "e5"});
  const auto p = point_of_fss(parse_soft_set("{e1: {h1: 0.1, h2: 0.9, h4: 0.4}}", f));
  const auto expected = parse_soft_set("{e1: {h1: 0.9, h2: 0.1, h3: 1, h4: 0.6}}", f);
  const auto pc = point_complement(p);
  return {example_part("", point_as_fss(pc) == expected, {{"point", render(p)}, {"complement", render(pc)}})};
}

std::vector<PartOutcome> example_nb() {
  std::vector<std::string> u{"h1", "h2", "h3", "h4", "h5", "h6"};
  const auto f = make_frame(u, {"e1", "e2", "e3"});
  const auto p = point_of_fss(parse_soft_set("{e3: {h1: 0.1, h2: 0.2, h3: 0.8, h4: 0.2, h5: 0.5, h6: 0}}", f));
  const auto n = parse_soft_set("{e3: {h1: 0.2, h2: 0.3, h3: 0.8, h4: 0.2, h5: 0.5, h6: 0.6}}", f);
  return {example_part("", point_in(p, n), {{"point", render(p)}, {"neighborhood", render(n)}})};
}

#define FST_EVAL(fn, ...) &audit::fn<PoolSpace __VA_OPT__(, ) __VA_ARGS__>, &audit::fn<ObjectSpace __VA_OPT__(, ) __VA_ARGS__>

constexpr auto A = ClaimClass::asserted_invariant;
constexpr auto D = ClaimClass::audited;
constexpr auto X = ClaimClass::reproduced_example;
constexpr auto SP = ClaimScope::space;
constexpr auto CA = ClaimScope::carrier;
constexpr auto EX = ClaimScope::example;

const std::vector<std::string_view> kOne{""};
const std::vector<std::string_view> kBoth{"forward", "converse"};

std::vector<ClaimDef> make_registry() {
  std::vector<ClaimDef> d{
      {{"TOP.AX3-union", A, SP, "topology definition, third axiom read with unions",
        "The union of any two open sets is open.", kOne},
       FST_EVAL(top_ax3_union)},
      {{"TOP.AX3-intersection", D, SP, "topology definition, third axiom read with the printed intersection symbol",
        "A family holding the null set and the carrier and closed under intersections is closed under unions. "
        "Instances delete one open set whose removal keeps intersections closed.",
        kOne},
       FST_EVAL(top_ax3_intersection)},
      {{"PT.1", D, CA, "point properties, item 1",
        "A point lying in a set does not lie in the absolute complement of that set.", kOne},
       FST_EVAL(pt_1)},
      {{"PT.2", X, EX, "point properties, item 2 and the example after it",
        "The example point lies in the example set while its complement point misses the complement set.",
        {"containment", "complement"}},
       nullptr, nullptr, &example_pt2},
      {{"PT.3", A, CA, "point properties, item 3", "The union of the lattice points lying in a set is the set.", kOne},
       FST_EVAL(pt_3)},
      {{"PT.4", A, CA, "point properties, item 4",
        "A point lies in another point iff they share a parameter and its grades are pointwise no larger.", kOne},
       FST_EVAL(pt_4)},
      {{"PT.5", A, CA, "point properties, item 5, if direction",
        "A point in one member of a pair lies in the union of the pair.", kOne},
       FST_EVAL(pt_5)},
      {{"PT.5-converse", D, CA, "point properties, item 5, only-if direction",
        "A point in the union of a pair lies in one of the two members.", kOne},
       FST_EVAL(pt_5_converse)},
      {{"PT.6", A, CA, "point properties, item 6",
        "A point lies in the intersection of a pair iff it lies in both members.", kOne},
       FST_EVAL(pt_6)},
      {{"PT.EX-COMPLEMENT", X, EX, "point complement example",
        "Complement of the four-element example point, taken cell by cell.", kOne},
       nullptr, nullptr, &example_pt_complement},
      {{"NB.EXAMPLE", X, EX, "neighborhood example", "The example point lies in the example neighborhood set.", kOne},
       nullptr, nullptr, &example_nb},
      {{"NB.OPEN", A, SP, "open sets versus neighborhoods of their points",
        "A set is open iff it is a neighborhood of every point lying in it.", kBoth},
       FST_EVAL(nb_open)},
      {{"NB.1", A, SP, "neighborhood system, item 1", "A point lies in each of its neighborhoods.", kOne},
       FST_EVAL(nb_1)},
      {{"NB.2", A, SP, "neighborhood system, item 2",
        "A subset of the carrier above a neighborhood of a point is a neighborhood of it.", kOne},
       FST_EVAL(nb_2)},
      {{"NB.3", A, SP, "neighborhood system, item 3",
        "The intersection of two neighborhoods of a point is a neighborhood of it.", kOne},
       FST_EVAL(nb_3)},
      {{"NB.4", A, SP, "neighborhood system, item 4",
        "Each neighborhood of a point contains a neighborhood of that point which is a neighborhood of each of its own "
        "points.",
        kOne},
       FST_EVAL(nb_4)},
      {{"INT.EQUIV", A, SP, "interior through neighborhoods",
        "The union of open subsets equals the union of the sets of which the given set is a neighborhood.", kOne},
       FST_EVAL(int_equiv)},
      {{"CL.FIXED", A, SP, "closed sets are the fixed points of closure",
        "A set is closed iff it equals its closure.", kBoth},
       FST_EVAL(cl_fixed)},
      {{"CL.1", A, SP, "closure and interior theorem, item 1, crisp carrier",
        "On a crisp carrier, the complement of the closure is the interior of the complement (complements inside the "
        "carrier).",
        kOne},
       FST_EVAL(cl_1, false)},
      {{"CL.1-fuzzy", D, SP, "closure and interior theorem, item 1, fuzzy carrier",
        "Item 1 on a carrier with a grade strictly between 0 and 1.", kOne},
       FST_EVAL(cl_1, true)},
      {{"CL.2", A, SP, "closure and interior theorem, item 2, crisp carrier",
        "On a crisp carrier, the complement of the interior is the closure of the complement.", kOne},
       FST_EVAL(cl_2, false)},
      {{"CL.2-fuzzy", D, SP, "closure and interior theorem, item 2, fuzzy carrier",
        "Item 2 on a carrier with a grade strictly between 0 and 1.", kOne},
       FST_EVAL(cl_2, true)},
      {{"CL.3", A, SP, "closure and interior theorem, item 3", "Closure is monotone.", kOne}, FST_EVAL(cl_3)},
      {{"CL.4", A, SP, "closure and interior theorem, item 4", "Interior is monotone.", kOne}, FST_EVAL(cl_4)},
      {{"CL.5", A, SP, "closure and interior theorem, item 5", "Closure is idempotent.", kOne}, FST_EVAL(cl_5)},
      {{"CL.6", A, SP, "closure and interior theorem, item 6", "Interior is idempotent.", kOne}, FST_EVAL(cl_6)},
      {{"CL.7", A, SP, "closure and interior theorem, item 7, crisp carrier",
        "On a crisp carrier the closure fixes the null set and the carrier.", {"null", "carrier"}},
       FST_EVAL(cl_7, false)},
      {{"CL.7-fuzzy", D, SP, "closure and interior theorem, item 7, fuzzy carrier",
        "Item 7 on a carrier with a grade strictly between 0 and 1.", {"null", "carrier"}},
       FST_EVAL(cl_7, true)},
      {{"CL.8", A, SP, "closure and interior theorem, item 8", "The interior fixes the null set and the carrier.",
        {"null", "carrier"}},
       FST_EVAL(cl_8)},
      {{"CL.9", A, SP, "closure and interior theorem, item 9", "Closure distributes over binary unions.", kOne},
       FST_EVAL(cl_9)},
      {{"CL.10", A, SP, "closure and interior theorem, item 10, intended reading",
        "Interior distributes over binary intersections.", kOne},
       FST_EVAL(cl_10)},
      {{"CL.10-literal", D, SP, "closure and interior theorem, item 10, as printed",
        "The interior of an intersection equals the interior of the carrier met with the interior of the second set.",
        kOne},
       FST_EVAL(cl_10_literal)},
      {{"CL.11", A, SP, "closure and interior theorem, item 11",
        "The closure of an intersection lies below the intersection of the closures.", kOne},
       FST_EVAL(cl_11)},
      {{"CL.12", D, SP, "closure and interior theorem, item 12, direction as printed",
        "The interior of a union lies below the union of the interiors.", kOne},
       FST_EVAL(cl_12)},
      {{"CL.12-reverse", A, SP, "closure and interior theorem, item 12, reverse direction",
        "The union of the interiors lies below the interior of the union.", kOne},
       FST_EVAL(cl_12_reverse)},
      {{"SUB.CLOSED", A, SP, "subspace closed-set theorem, crisp subspace",
        "For a crisp subset g, the closed sets of the subspace on g are the traces on g of closed sets.", kBoth},
       FST_EVAL(sub_closed, false)},
      {{"SUB.CLOSED-fuzzy", D, SP, "subspace closed-set theorem, fuzzy subspace",
        "The same statement for subsets with a grade strictly between 0 and 1.", kBoth},
       FST_EVAL(sub_closed, true)},
      {{"SUB.CLOSURE", A, SP, "subspace closure theorem, crisp subspace",
        "For a crisp subset g, closure inside the subspace on g is the parent closure met with g.", kOne},
       FST_EVAL(sub_closure, false)},
      {{"SUB.CLOSURE-fuzzy", D, SP, "subspace closure theorem, fuzzy subspace",
        "The same statement for subsets with a grade strictly between 0 and 1.", kOne},
       FST_EVAL(sub_closure, true)},
      {{"SEP.EX-DISCRETE-T0", A, SP, "separation example, discrete space",
        "A space in which every lattice subset of the carrier is open is T0.", kOne},
       FST_EVAL(sep_discrete_t0)},
      {{"SEP.T0-HERED", A, SP, "heredity of T0", "Every subspace of a T0 space is T0.", kOne},
       FST_EVAL(hereditary, Axiom::T0)},
      {{"SEP.T1-HERED", A, SP, "heredity of T1", "Every subspace of a T1 space is T1.", kOne},
       FST_EVAL(hereditary, Axiom::T1)},
      {{"SEP.T2-HERED", A, SP, "heredity of T2", "Every subspace of a T2 space is T2.", kOne},
       FST_EVAL(hereditary, Axiom::T2)},
      {{"SEP.T3-HERED", D, SP, "heredity of T3", "Every subspace of a T3 space is T3.", kOne},
       FST_EVAL(hereditary, Axiom::T3)},
      {{"SEP.PTCLOSED-T1", D, SP, "points closed, T1 direction",
        "A space in which every point is closed is T1.", kOne},
       FST_EVAL(implies, Axiom::points_closed, Axiom::T1)},
      {{"SEP.PTCLOSED-T2", D, SP, "points closed, T2 direction",
        "A space in which every point is closed is T2.", kOne},
       FST_EVAL(implies, Axiom::points_closed, Axiom::T2)},
      {{"SEP.T2CHAR", D, SP, "T2 characterization through closures",
        "A space is T2 iff for each related pair p, q some open set holding p has a closure missing q.", kBoth},
       FST_EVAL(sep_t2char)},
      {{"SEP.REGCHAR", D, SP, "regularity characterization",
        "With all points closed, a space is regular iff each open g and point p in g admit an open set holding p whose "
        "closure lies below g.",
        kBoth},
       FST_EVAL(sep_regchar)},
      {{"SEP.NORMCHAR", D, SP, "normality characterization",
        "A space is normal iff each closed h below an open g admits an open set above h whose closure lies below g.",
        kBoth},
       FST_EVAL(sep_normchar)},
      {{"SEP.NORMAL-HERED", D, SP, "heredity of normality on closed subspaces",
        "Every closed subspace of a normal space is normal.", kOne},
       FST_EVAL(sep_normal_hered)},
      {{"SEP.T2-T1", A, SP, "implication chain, T2 to T1", "Every T2 space is T1.", kOne},
       FST_EVAL(implies, Axiom::T2, Axiom::T1)},
      {{"SEP.T1-T0", A, SP, "implication chain, T1 to T0", "Every T1 space is T0.", kOne},
       FST_EVAL(implies, Axiom::T1, Axiom::T0)},
      {{"SEP.T3-T2", D, SP, "implication remark, T3 to T2", "Every T3 space is T2.", kOne},
       FST_EVAL(implies, Axiom::T3, Axiom::T2)},
      {{"SEP.T4-T3", D, SP, "implication remark, T4 to T3", "Every T4 space is T3.", kOne},
       FST_EVAL(implies, Axiom::T4, Axiom::T3)},
      {{"CON.EX-DISCRETE", D, SP, "connectedness example, discrete space",
        "A discrete space with more than two open sets is disconnected.", kOne},
       FST_EVAL(con_ex_discrete)},
      {{"CON.EX-INDISCRETE", A, SP, "connectedness example, indiscrete space",
        "A space with at most two open sets is connected.", kOne},
       FST_EVAL(con_ex_indiscrete)},
      {{"CON.CLOPEN", D, SP, "disconnectedness through clopen sets",
        "A space is disconnected iff some non-null proper subset of the carrier is open and closed.", kBoth},
       FST_EVAL(con_clopen)},
      {{"CON.REM-CLOPEN", D, SP, "remark on connected spaces and clopen sets",
        "A space is connected iff its only clopen sets are the null set and the carrier.", kBoth},
       FST_EVAL(con_rem_clopen)},
      {{"CON.SUBSEP", A, SP, "connected subspaces and separations",
        "A connected subspace lies below one of the two sets of any separation.", kOne},
       FST_EVAL(con_subsep)},
      {{"CON.SUBSEP-CRIT", D, SP, "separation criterion for subspaces",
        "Two non-null disjoint sets with union g separate the subspace on g iff each misses the closure of the other.",
        kBoth},
       FST_EVAL(con_subsep_crit)},
      {{"CON.BETWEEN", D, SP, "sets between a connected set and its closure",
        "A set between a connected set and its closure is connected.", kOne},
       FST_EVAL(con_between)},
      {{"CON.REM-CLOSURE", D, SP, "closure of a connected set", "The closure of a connected set is connected.", kOne},
       FST_EVAL(con_rem_closure)},
      {{"CON.UNION", A, SP, "union of two meeting connected sets",
        "The union of two connected sets with non-null intersection is connected.", kOne},
       FST_EVAL(con_union)},
      {{"CON.UNION-STAR", A, SP, "union of connected sets meeting a common one",
        "The union of connected sets that each meet one connected set is connected, checked on families of up to three.",
        kOne},
       FST_EVAL(con_union_star)},
      {{"CON.COARSER", A, SP, "coarser topologies of connected spaces",
        "A topology coarser than a connected one is connected, checked on coarsenings generated by two open sets.",
        kOne},
       FST_EVAL(con_coarser)},
  };
  std::sort(d.begin(), d.end(), [](const ClaimDef& a, const ClaimDef& b) { return a.info.id < b.info.id; });
  return d;
}

#undef FST_EVAL

const std::vector<ClaimDef>& registry() {
  static const std::vector<ClaimDef> r = make_registry();
  return r;
}

const ClaimDef& find_def(std::string_view id) {
  for (const auto& d : registry())
    if (d.info.id == id) return d;
  throw UnknownClaim(std::string(id));
}

WitnessLine render_item(const SetPool& pool, const audit::Item& it) {
  const auto& s = pool.set(it.set);
  return {it.role, it.point ? render(point_of_fss(s)) : render(s)};
}

std::vector<WitnessLine> render_items(const SetPool& pool, const std::vector<audit::Item>& items) {
  std::vector<WitnessLine> out;
  for (const auto& i : items) out.push_back(render_item(pool, i));
  return out;
}

bool same_items(const std::vector<audit::Item>& a, const std::vector<audit::Item>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const audit::Item& x, const audit::Item& y) {
    return std::string_view(x.role) == y.role && x.set == y.set && x.point == y.point;
  });
}

std::vector<PartOutcome> outcomes(const ClaimDef& d, const SetPool& pool, const Parts& r) {
  std::vector<PartOutcome> out;
  for (std::size_t k = 0; k < d.info.parts.size(); ++k) {
    PartOutcome p;
    p.name = d.info.parts[k];
    p.instances = r[k].instances;
    p.applicable = r[k].instances > 0;
    p.failed = r[k].failed;
    if (p.failed) p.witness = render_items(pool, r[k].witness);
    out.push_back(std::move(p));
  }
  return out;
}

struct Indexed {
  std::shared_ptr<SetPool> pool;
  Ix carrier;
  std::vector<Ix> opens;
};

Indexed index_space(const FuzzySoftTopology& t, std::optional<GradeLattice> lattice) {
  Indexed x;
  x.pool = std::make_shared<SetPool>(t.frame_ptr(), lattice ? *lattice : default_lattice(t));
  x.carrier = x.pool->index_of(t.carrier());
  for (const auto& o : t.opens()) x.opens.push_back(x.pool->index_of(o));
  std::sort(x.opens.begin(), x.opens.end());
  return x;
}

}  // namespace

std::span<const ClaimInfo> claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> v;
    for (const auto& d : registry()) v.push_back(d.info);
    return v;
  }();
  return infos;
}

const ClaimInfo& find_claim(std::string_view id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return c;
  throw UnknownClaim(std::string(id));
}

std::vector<PartOutcome> audit_claim(std::string_view id, const FuzzySoftTopology& t, const AuditConfig& cfg,
                                     std::optional<GradeLattice> lattice) {
  const ClaimDef& d = find_def(id);
  if (d.example) return d.example();
  const Indexed x = index_space(t, std::move(lattice));
  PoolSpace s(*x.pool, x.carrier, x.opens, cfg);
  Parts r;
  d.pool(s, r);
  return outcomes(d, *x.pool, r);
}

std::vector<PartOutcome> audit_claim_reference(std::string_view id, const FuzzySoftTopology& t,
                                               const AuditConfig& cfg, std::optional<GradeLattice> lattice) {
  const ClaimDef& d = find_def(id);
  if (d.example) return d.example();
  const Indexed x = index_space(t, std::move(lattice));
  ObjectSpace s(*x.pool, t, cfg);
  Parts r;
  d.object(s, r);
  return outcomes(d, *x.pool, r);
}

// ---- corpus audit

namespace {

struct PartAcc {
  std::uint64_t spaces = 0, applicable = 0, instances = 0, failures = 0;
  std::optional<std::pair<std::size_t, std::vector<audit::Item>>> first;
};

using ClaimAcc = std::array<PartAcc, 2>;

void accumulate(ClaimAcc& acc, const ClaimDef& d, const Parts& r, std::size_t space) {
  for (std::size_t k = 0; k < d.info.parts.size(); ++k) {
    auto& a = acc[k];
    ++a.spaces;
    a.instances += r[k].instances;
    if (r[k].instances > 0) ++a.applicable;
    if (r[k].failed) {
      ++a.failures;
      if (!a.first) a.first.emplace(space, r[k].witness);
    }
  }
}

void merge(ClaimAcc& into, const ClaimAcc& from) {
  for (std::size_t k = 0; k < into.size(); ++k) {
    into[k].spaces += from[k].spaces;
    into[k].applicable += from[k].applicable;
    into[k].instances += from[k].instances;
    into[k].failures += from[k].failures;
    if (!into[k].first && from[k].first) into[k].first = from[k].first;
  }
}

/// Evaluates the selected claims on spaces [begin, end).
std::vector<ClaimAcc> run_chunk(const SpaceCorpus& corpus, const AuditConfig& cfg,
                                const std::vector<const ClaimDef*>& claims, std::size_t begin, std::size_t end) {
  std::vector<ClaimAcc> acc(claims.size());
  std::map<Ix, std::vector<Parts>> carrier_memo;
  for (std::size_t i = begin; i < end; ++i) {
    const auto& sp = corpus.spaces[i];
    PoolSpace s(*corpus.pool, sp.carrier, sp.opens, cfg);
    std::vector<Parts>* memo = nullptr;
    bool fresh = false;
    for (std::size_t c = 0; c < claims.size(); ++c) {
      const ClaimDef& d = *claims[c];
      if (d.info.scope == ClaimScope::carrier) {
        if (!memo) {
          auto [it, inserted] = carrier_memo.try_emplace(sp.carrier, claims.size());
          memo = &it->second;
          fresh = inserted;
        }
        if (fresh) d.pool(s, (*memo)[c]);
        accumulate(acc[c], d, (*memo)[c], i);
      } else {
        Parts r;
        d.pool(s, r);
        accumulate(acc[c], d, r, i);
      }
    }
  }
  return acc;
}

constexpr std::size_t kChunk = 128;

Counterexample describe(const SpaceCorpus& corpus, std::size_t i, const std::vector<audit::Item>& items) {
  const auto& sp = corpus.spaces[i];
  Counterexample c;
  c.origin = sp.origin;
  c.space_index = i;
  c.carrier = render(corpus.pool->set(sp.carrier));
  for (Ix o : sp.opens) c.opens.push_back(render(corpus.pool->set(o)));
  c.items = render_items(*corpus.pool, items);
  return c;
}

/// Re-runs one part through the public functions and compares the witness.
bool revalidate(const SpaceCorpus& corpus, const AuditConfig& cfg, const ClaimDef& d, std::size_t part, std::size_t i,
                const std::vector<audit::Item>& items) {
  try {
    ObjectSpace s(*corpus.pool, corpus.topology(i), cfg);
    Parts r;
    d.object(s, r);
    return r[part].failed && same_items(r[part].witness, items);
  } catch (const Error&) {
    return false;
  }
}

ClaimRecord example_record(const ClaimDef& d) {
  ClaimRecord rec;
  rec.info = &d.info;
  bool failed = false;
  for (auto& p : d.example()) {
    PartTotals t;
    t.name = p.name;
    t.spaces_checked = 1;
    t.applicable = 1;
    t.instances = p.instances;
    t.failures = p.failed ? 1 : 0;
    Counterexample c;
    c.origin = "example";
    c.items = std::move(p.witness);
    c.revalidated = true;
    t.first = std::move(c);
    failed = failed || p.failed;
    rec.parts.push_back(std::move(t));
  }
  rec.status = failed ? "counterexample-found" : "reproduced";
  rec.alarm = failed;
  return rec;
}

std::vector<const ClaimDef*> select(std::span<const std::string> filter) {
  std::vector<const ClaimDef*> out;
  if (filter.empty()) {
    for (const auto& d : registry()) out.push_back(&d);
    return out;
  }
  for (const auto& id : filter) {
    const ClaimDef* d = &find_def(id);
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  }
  std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->info.id < b->info.id; });
  return out;
}

}  // namespace

AuditReport audit_corpus(const CorpusSpec& spec, const AuditConfig& cfg, std::span<const std::string> filter,
                         unsigned jobs) {
  select(filter);
  return audit_corpus(build_corpus(spec), cfg, filter, jobs);
}

AuditReport audit_corpus(const SpaceCorpus& corpus, const AuditConfig& cfg, std::span<const std::string> filter,
                         unsigned jobs) {
  const auto selected = select(filter);
  std::vector<const ClaimDef*> space_claims;
  for (auto* d : selected)
    if (!d->example) space_claims.push_back(d);

  const std::size_t n = corpus.spaces.size();
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<std::vector<ClaimAcc>> results(chunks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c; (c = next.fetch_add(1)) < chunks;)
      results[c] = run_chunk(corpus, cfg, space_claims, c * kChunk, std::min(n, (c + 1) * kChunk));
  };
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(chunks, 1)));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<ClaimAcc> total(space_claims.size());
  for (const auto& r : results)
    for (std::size_t c = 0; c < total.size(); ++c) merge(total[c], r[c]);

  AuditReport rep;
  rep.spec = corpus.spec;
  rep.config = cfg;
  rep.source = "corpus";
  rep.spaces = n;
  rep.enumerated = corpus.enumerated;
  rep.landmarks = corpus.landmarks;
  rep.random = corpus.random;
  rep.families = corpus.families;
  rep.skipped = corpus.skipped;
  rep.random_redraws = corpus.random_redraws;

  std::size_t sc = 0;
  for (const ClaimDef* d : selected) {
    if (d->example) {
      rep.claims.push_back(example_record(*d));
      continue;
    }
    const ClaimAcc& acc = total[sc++];
    ClaimRecord rec;
    rec.info = &d->info;
    bool failed = false, applicable = false;
    for (std::size_t k = 0; k < d->info.parts.size(); ++k) {
      PartTotals t;
      t.name = d->info.parts[k];
      t.spaces_checked = acc[k].spaces;
      t.applicable = acc[k].applicable;
      t.instances = acc[k].instances;
      t.failures = acc[k].failures;
      if (acc[k].first) {
        const auto& [i, items] = *acc[k].first;
        t.first = describe(corpus, i, items);
        t.first->revalidated = revalidate(corpus, cfg, *d, k, i, items);
        if (!t.first->revalidated) rec.alarm = true;
      }
      failed = failed || t.failures > 0;
      applicable = applicable || t.applicable > 0;
      rec.parts.push_back(std::move(t));
    }
    rec.vacuous = !applicable;
    if (failed) {
      rec.status = "counterexample-found";
      if (d->info.cls == ClaimClass::asserted_invariant) rec.alarm = true;
    } else {
      rec.status = d->info.cls == ClaimClass::asserted_invariant ? "asserted-invariant" : "proved-by-exhaustion-at-spec";
    }
    rep.claims.push_back(std::move(rec));
  }
  rep.soundness_alarm = std::any_of(rep.claims.begin(), rep.claims.end(), [](const ClaimRecord& r) { return r.alarm; });
  return rep;
}

SearchResult search_counterexample(std::string_view id, const CorpusSpec& spec, std::optional<std::uint64_t> budget,
                                   const AuditConfig& cfg) {
  const ClaimDef& d = find_def(id);
  SearchResult res;
  if (d.example) {
    if (budget && *budget == 0) return res;
    res.spaces_scanned = 1;
    for (auto& p : d.example())
      if (p.failed) {
        res.state = SearchState::found;
        res.part = p.name;
        Counterexample c;
        c.origin = "example";
        c.items = std::move(p.witness);
        c.revalidated = true;
        res.witness = std::move(c);
        return res;
      }
    res.state = SearchState::exhausted;
    return res;
  }
  const SpaceCorpus corpus = build_corpus(spec);
  const std::size_t n = corpus.spaces.size();
  const std::size_t limit = budget ? static_cast<std::size_t>(std::min<std::uint64_t>(*budget, n)) : n;
  std::map<Ix, Parts> memo;
  for (std::size_t i = 0; i < limit; ++i) {
    const auto& sp = corpus.spaces[i];
    Parts r;
    if (d.info.scope == ClaimScope::carrier && memo.count(sp.carrier)) {
      r = memo[sp.carrier];
    } else {
      PoolSpace s(*corpus.pool, sp.carrier, sp.opens, cfg);
      d.pool(s, r);
      if (d.info.scope == ClaimScope::carrier) memo[sp.carrier] = r;
    }
    res.spaces_scanned = i + 1;
    for (std::size_t k = 0; k < d.info.parts.size(); ++k)
      if (r[k].failed) {
        res.state = SearchState::found;
        res.part = d.info.parts[k];
        res.witness = describe(corpus, i, r[k].witness);
        res.witness->revalidated = revalidate(corpus, cfg, d, k, i, r[k].witness);
        return res;
      }
  }
  res.state = (!budget || *budget > n) ? SearchState::exhausted : SearchState::none_within_budget;
  return res;
}

}  // namespace fst
