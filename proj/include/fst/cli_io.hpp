#pragma once

// Space documents, run reports and the command implementations behind fstop.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fst/auditor.hpp"
#include "fst/deciders.hpp"
#include "fst/topology.hpp"

namespace fst {

using Json = nlohmann::ordered_json;

/// Bad command-line input: unknown set name, carrier violation, bad flag value.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct SpaceDocument {
  FramePtr frame;
  FuzzySoftSet carrier;
  std::vector<std::pair<std::string, FuzzySoftSet>> opens;  // document order
  std::vector<std::pair<std::string, FuzzySoftSet>> sets;   // extra named sets
  std::optional<GradeLattice> lattice;
};

/// Throws ParseError located by "line L, column C" or a JSON pointer.
SpaceDocument parse_document(std::string_view text);
SpaceDocument load_document(const std::string& path);
Json document_json(const SpaceDocument& doc);
/// Indented JSON with a trailing newline.
std::string dump_document(const SpaceDocument& doc);

/// Throws TopologyError.
FuzzySoftTopology document_topology(const SpaceDocument& doc);
/// "carrier", an open name or an extra set name. Throws UsageError.
const FuzzySoftSet& named_set(const SpaceDocument& doc, std::string_view name);

/// "auto" (nullopt), "denominator N", or a comma-separated grade list.
std::optional<GradeLattice> parse_lattice_flag(std::string_view text);

enum class ReportFormat { text, structured };
ReportFormat parse_format(std::string_view text);

struct RunOptions {
  std::optional<std::string> lattice;  // flag text; unset defers to the document
  Disjointness mode = Disjointness::pointwise;
  std::optional<PairRelation> pair_relation;
  RegularReading regular_reading = RegularReading::not_in;
  std::uint64_t cap = kDefaultPointCap;
  std::uint64_t seed = 1;
};

struct RunReport {
  std::string command;
  Json config = Json::object();
  Json result = Json::object();
  int exit_status = 0;
};

/// Structured: one JSON document. Text: the same tree as indented key lines.
std::string render_report(const RunReport& r, ReportFormat format);

/// Exit codes: 1 validation failure, 2 parse or usage error, 3 cap exceeded.
RunReport error_report(std::string command, const std::exception& e);

RunReport cmd_validate(const std::string& path);
RunReport cmd_closure(const std::string& path, const std::string& set, const RunOptions& opt);
RunReport cmd_interior(const std::string& path, const std::string& set, const RunOptions& opt);
RunReport cmd_axioms(const std::string& path, const RunOptions& opt);
RunReport cmd_connected(const std::string& path, const RunOptions& opt);
RunReport cmd_subspace(const std::string& path, const std::string& set, const std::string& out, const RunOptions& opt);

struct AuditOptions {
  CorpusSpec spec;
  AuditConfig config;
  std::vector<std::string> claims;
  /// Audits only the first N corpus spaces.
  std::optional<std::uint64_t> budget;
  /// Audits this document's space instead of the corpus.
  std::optional<std::string> file;
  std::optional<std::string> lattice;  // only used with file
  unsigned jobs = 1;
};

/// Exit 4 when the soundness alarm fires.
RunReport cmd_audit(const AuditOptions& opt);

}  // namespace fst
