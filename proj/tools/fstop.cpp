// fstop: command-line front end for fuzzy soft topological spaces.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fst/cli_io.hpp"

namespace {

struct Common {
  std::string lattice = "auto";
  std::string disjointness = "pointwise";
  std::string pair_relation = "default";
  std::string regular_reading = "not-in";
  std::uint64_t cap = fst::kDefaultPointCap;
  bool cap_set = false;
  std::uint64_t seed = 1;
  std::string format = "text";
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--lattice", c.lattice, "auto | denominator N | comma-separated grades");
  app->add_option("--disjointness", c.disjointness, "pointwise | cross-parameter");
  app->add_option("--pair-relation", c.pair_relation, "distinct | disjoint | default");
  app->add_option("--regular-reading", c.regular_reading, "not-in | disjoint");
  app->add_option_function<std::uint64_t>(
      "--cap",
      [&c](std::uint64_t v) {
        c.cap = v;
        c.cap_set = true;
      },
      "point or family enumeration cap");
  app->add_option("--seed", c.seed);
  app->add_option("--format", c.format, "text | structured");
}

fst::RunOptions run_options(const Common& c) {
  fst::RunOptions o;
  if (c.lattice != "auto") o.lattice = c.lattice;
  o.mode = fst::parse_disjointness(c.disjointness);
  if (c.pair_relation != "default") o.pair_relation = fst::parse_pair_relation(c.pair_relation);
  o.regular_reading = fst::parse_regular_reading(c.regular_reading);
  o.cap = c.cap;
  o.seed = c.seed;
  return o;
}

std::vector<std::string> split_claims(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& r : raw) {
    std::stringstream ss(r);
    for (std::string id; std::getline(ss, id, ',');)
      if (!id.empty()) out.push_back(id);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite fuzzy soft topological spaces"};
  app.require_subcommand(1);
  Common common;
  std::string file, set, out;

  auto* validate = app.add_subcommand("validate", "check the topology axioms of a space document");
  validate->add_option("file", file)->required();
  validate->add_option("--format", common.format);

  auto* closure = app.add_subcommand("closure", "closure of a named set");
  auto* interior = app.add_subcommand("interior", "interior of a named set");
  for (auto* c : {closure, interior}) {
    c->add_option("file", file)->required();
    c->add_option("set", set)->required();
    add_common(c, common);
  }
  auto* axioms = app.add_subcommand("axioms", "separation axiom verdicts");
  auto* connected = app.add_subcommand("connected", "connectedness verdict");
  for (auto* c : {axioms, connected}) {
    c->add_option("file", file)->required();
    add_common(c, common);
  }
  auto* subspace = app.add_subcommand("subspace", "write the subspace induced on a named set");
  subspace->add_option("file", file)->required();
  subspace->add_option("set", set)->required();
  subspace->add_option("out", out)->required();
  add_common(subspace, common);

  auto* audit = app.add_subcommand("audit", "audit the claim registry over a corpus of spaces");
  fst::CorpusSpec spec;
  std::vector<std::string> claims;
  std::uint64_t budget = 0;
  std::string audit_file, carrier;
  unsigned jobs = 1;
  bool no_landmarks = false;
  add_common(audit, common);
  audit->add_option("--universe-size", spec.universe_size);
  audit->add_option("--parameters", spec.parameters);
  audit->add_option("--max-generators", spec.max_generators);
  audit->add_option("--carrier", carrier, "set text; default the all-one set");
  audit->add_option("--max-opens", spec.max_opens);
  audit->add_option("--random-count", spec.random_count);
  audit->add_option("--random-max-generators", spec.random_max_generators);
  audit->add_flag("--no-landmarks", no_landmarks);
  audit->add_option("--claim", claims, "claim id; repeatable or comma-separated");
  auto* budget_opt = audit->add_option("--budget", budget, "audit only the first N corpus spaces");
  auto* file_opt = audit->add_option("--file", audit_file, "audit a single document's space");
  audit->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));
  budget_opt->excludes(file_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  fst::ReportFormat format = fst::ReportFormat::text;
  fst::RunReport report;
  try {
    format = fst::parse_format(common.format);
    const fst::RunOptions opt = run_options(common);
    if (command == "validate") {
      report = fst::cmd_validate(file);
    } else if (command == "closure") {
      report = fst::cmd_closure(file, set, opt);
    } else if (command == "interior") {
      report = fst::cmd_interior(file, set, opt);
    } else if (command == "axioms") {
      report = fst::cmd_axioms(file, opt);
    } else if (command == "connected") {
      report = fst::cmd_connected(file, opt);
    } else if (command == "subspace") {
      report = fst::cmd_subspace(file, set, out, opt);
    } else {
      fst::AuditOptions a;
      a.spec = spec;
      a.spec.seed = common.seed;
      a.spec.landmarks = !no_landmarks;
      if (common.cap_set) a.spec.cap = common.cap;
      if (!carrier.empty()) a.spec.carrier_text = carrier;
      a.config = {opt.mode, opt.pair_relation, opt.regular_reading};
      a.claims = split_claims(claims);
      a.jobs = jobs;
      if (*budget_opt) a.budget = budget;
      if (*file_opt) {
        a.file = audit_file;
        a.lattice = opt.lattice;
      } else if (opt.lattice) {
        if (auto l = fst::parse_lattice_flag(*opt.lattice)) a.spec.lattice = *l;
      }
      report = fst::cmd_audit(a);
    }
  } catch (const std::exception& e) {
    report = fst::error_report(command, e);
    std::cerr << "fstop " << command << ": " << e.what() << "\n";
  }
  std::cout << fst::render_report(report, format);
  return report.exit_status;
}
