#pragma once

// Space corpora, the claim registry and the audit driver.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fst/deciders.hpp"
#include "fst/error.hpp"
#include "fst/set_pool.hpp"
#include "fst/topology.hpp"

namespace fst {

class UnknownClaim : public Error {
 public:
  explicit UnknownClaim(std::string id) : Error("unknown claim id '" + id + "'"), id_(std::move(id)) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

struct CorpusSpec {
  std::size_t universe_size = 2;
  std::size_t parameters = 2;
  GradeLattice lattice = GradeLattice::with_denominator(2);
  std::size_t max_generators = 3;
  /// Unset: the all-one set of the frame.
  std::optional<std::string> carrier_text;
  std::size_t max_opens = 64;
  /// Bound on the number of generator families examined.
  std::uint64_t cap = 10'000'000;
  std::uint64_t pool_cap = kDefaultPoolCap;
  std::size_t random_count = 200;
  std::size_t random_max_generators = 4;
  std::uint64_t seed = 1;
  /// Adds the discrete and crisp-discrete spaces on the carrier.
  bool landmarks = true;
};

/// Universe x, y, z, w (x1.. beyond four) and parameters e1...
FramePtr corpus_frame(const CorpusSpec& spec);
FuzzySoftSet corpus_carrier(const CorpusSpec& spec, const FramePtr& frame);

struct CorpusSpace {
  std::string origin;
  SetPool::Index carrier;
  std::vector<SetPool::Index> opens;  // ascending
};

struct SpaceCorpus {
  CorpusSpec spec;
  std::shared_ptr<const SetPool> pool;
  std::vector<CorpusSpace> spaces;
  std::uint64_t families = 0;       // generator families examined
  std::uint64_t skipped = 0;        // families whose closure exceeded max_opens
  std::size_t enumerated = 0, landmarks = 0, random = 0;
  std::uint64_t random_redraws = 0;

  /// Validated topology of one entry.
  FuzzySoftTopology topology(std::size_t i) const;
};

/// Every topology generated by at most max_generators lattice subsets of the
/// carrier, deduplicated, ordered by open family. Throws CapExceeded.
SpaceCorpus enumerate_topologies(const CorpusSpec& spec);
/// The enumeration followed by the landmarks and spec.random_count random spaces.
SpaceCorpus build_corpus(const CorpusSpec& spec);

/// Half of the seeds keep the CorpusSpec carrier, the rest draw a non-null lattice
/// subset of it. Generators are drawn uniformly from the subsets of the carrier.
FuzzySoftTopology random_space(std::uint64_t seed, const CorpusSpec& spec);

enum class ClaimClass { asserted_invariant, audited, reproduced_example };
std::string_view to_string(ClaimClass c);

/// space: evaluated on every space; carrier: depends only on the carrier and
/// the lattice; example: evaluated once on fixed data.
enum class ClaimScope { space, carrier, example };

struct ClaimInfo {
  std::string_view id;
  ClaimClass cls;
  ClaimScope scope;
  std::string_view anchor;     // which result of the source it stands for
  std::string_view statement;  // in our own words, with the reading we check
  std::vector<std::string_view> parts;
};

std::span<const ClaimInfo> claim_registry();
/// Throws UnknownClaim.
const ClaimInfo& find_claim(std::string_view id);

struct AuditConfig {
  Disjointness mode = Disjointness::pointwise;
  std::optional<PairRelation> pair_relation;
  RegularReading regular_reading = RegularReading::not_in;
};

struct WitnessLine {
  std::string role, text;
};

struct Counterexample {
  std::string origin;
  std::size_t space_index = 0;
  std::string carrier;
  std::vector<std::string> opens;
  std::vector<WitnessLine> items;
  /// The object-level evaluation reproduced the failure.
  bool revalidated = false;
};

struct PartOutcome {
  std::string_view name;
  bool applicable = false;
  bool failed = false;
  std::uint64_t instances = 0;
  std::vector<WitnessLine> witness;
};

/// One claim on one space, through the table-driven evaluator.
std::vector<PartOutcome> audit_claim(std::string_view id, const FuzzySoftTopology& t, const AuditConfig& cfg = {},
                                     std::optional<GradeLattice> lattice = std::nullopt);
/// Same, through the public engine and decider functions only.
std::vector<PartOutcome> audit_claim_reference(std::string_view id, const FuzzySoftTopology& t,
                                               const AuditConfig& cfg = {},
                                               std::optional<GradeLattice> lattice = std::nullopt);

struct PartTotals {
  std::string_view name;
  std::uint64_t spaces_checked = 0, applicable = 0, instances = 0, failures = 0;
  std::optional<Counterexample> first;
};

struct ClaimRecord {
  const ClaimInfo* info = nullptr;
  std::vector<PartTotals> parts;
  /// asserted-invariant, proved-by-exhaustion-at-spec, counterexample-found
  /// or reproduced.
  std::string status;
  bool vacuous = false;
  /// An asserted invariant failed or a witness did not re-validate.
  bool alarm = false;
};

struct AuditReport {
  CorpusSpec spec;
  AuditConfig config;
  std::string source;  // "corpus" or the document a single space came from
  std::size_t spaces = 0, enumerated = 0, landmarks = 0, random = 0;
  std::uint64_t families = 0, skipped = 0, random_redraws = 0;
  std::vector<ClaimRecord> claims;  // sorted by id
  bool soundness_alarm = false;
};

/// Empty filter: every registered claim. Throws UnknownClaim.
AuditReport audit_corpus(const CorpusSpec& spec, const AuditConfig& cfg, std::span<const std::string> filter,
                         unsigned jobs = 1);
AuditReport audit_corpus(const SpaceCorpus& corpus, const AuditConfig& cfg, std::span<const std::string> filter,
                         unsigned jobs = 1);

enum class SearchState { found, exhausted, none_within_budget };
std::string_view to_string(SearchState s);

struct SearchResult {
  SearchState state = SearchState::none_within_budget;
  std::size_t spaces_scanned = 0;
  std::string_view part;
  std::optional<Counterexample> witness;
};

/// Scans the enumerated spaces in order, then the landmarks and random spaces,
/// stopping at the first failure. budget bounds the number of spaces scanned;
/// unset means the whole corpus.
SearchResult search_counterexample(std::string_view id, const CorpusSpec& spec,
                                   std::optional<std::uint64_t> budget = std::nullopt, const AuditConfig& cfg = {});

}  // namespace fst
