#include "fst/cli_io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace fst {

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::string pointer(std::string_view base, std::string_view key) {
  std::string k;
  for (char c : key) {
    if (c == '~') k += "~0";
    else if (c == '/') k += "~1";
    else k += c;
  }
  return std::string(base) + "/" + k;
}

std::vector<std::string> names_field(const Json& j, const char* key) {
  const std::string where = pointer("", key);
  if (!j.contains(key)) throw ParseError("missing field", where);
  const Json& v = j.at(key);
  if (!v.is_array() || v.empty()) throw ParseError("expected a non-empty array of names", where);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) throw ParseError("expected a string", where + "/" + std::to_string(i));
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

std::string grade_text(const Json& g, const std::string& where) {
  if (g.is_string()) return g.get<std::string>();
  if (g.is_number()) return g.dump();
  throw ParseError("expected a grade", where);
}

FuzzySoftSet set_field(const Json& v, const FramePtr& frame, const std::string& where) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_object()) {
    text = "{";
    bool first_row = true;
    for (const auto& [param, row] : v.items()) {
      if (!row.is_object()) throw ParseError("expected an object of grades", pointer(where, param));
      text += (first_row ? "" : ", ") + param + ": {";
      first_row = false;
      bool first = true;
      for (const auto& [elem, g] : row.items()) {
        text += (first ? "" : ", ") + elem + ": " + grade_text(g, pointer(pointer(where, param), elem));
        first = false;
      }
      text += "}";
    }
    text += "}";
  } else {
    throw ParseError("expected set text or an object", where);
  }
  try {
    return parse_soft_set(text, frame);
  } catch (const Error& e) {
    throw ParseError(e.what(), where);
  }
}

std::vector<std::pair<std::string, FuzzySoftSet>> named_sets(const Json& v, const FramePtr& frame,
                                                             const std::string& where, const char* prefix) {
  std::vector<std::pair<std::string, FuzzySoftSet>> out;
  if (v.is_object()) {
    for (const auto& [name, s] : v.items()) out.emplace_back(name, set_field(s, frame, pointer(where, name)));
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i)
      out.emplace_back(prefix + std::to_string(i + 1), set_field(v[i], frame, where + "/" + std::to_string(i)));
  } else {
    throw ParseError("expected an object of named sets or an array", where);
  }
  return out;
}

GradeLattice lattice_from_list(const std::vector<std::string>& items) {
  std::vector<Grade> g;
  for (const auto& s : items) g.push_back(parse_grade(s));
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return GradeLattice(std::move(g));
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

// ---- documents

SpaceDocument parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::string msg = e.what();
    if (auto p = msg.find(": ", msg.find("column")); p != std::string::npos) msg = msg.substr(p + 2);
    throw ParseError(msg, fmt::format("line {}, column {}", line, col));
  }
  if (!j.is_object()) throw ParseError("a space document is a JSON object", "/");
  for (const auto& [key, _] : j.items())
    if (key != "universe" && key != "parameters" && key != "carrier" && key != "opens" && key != "sets" &&
        key != "lattice")
      throw ParseError("unknown field", pointer("", key));

  SpaceDocument doc{nullptr, FuzzySoftSet(make_frame({"x"}, {"e"}), std::vector<Grade>(1)), {}, {}, std::nullopt};
  auto u = names_field(j, "universe");
  auto a = names_field(j, "parameters");
  try {
    doc.frame = make_frame(std::move(u), std::move(a));
  } catch (const Error& e) {
    throw ParseError(e.what(), "/universe");
  }
  if (!j.contains("carrier")) throw ParseError("missing field", "/carrier");
  doc.carrier = set_field(j.at("carrier"), doc.frame, "/carrier");
  if (!j.contains("opens")) throw ParseError("missing field", "/opens");
  doc.opens = named_sets(j.at("opens"), doc.frame, "/opens", "o");
  if (j.contains("sets")) doc.sets = named_sets(j.at("sets"), doc.frame, "/sets", "s");
  if (j.contains("lattice")) {
    const Json& l = j.at("lattice");
    try {
      if (l.is_string()) {
        doc.lattice = parse_lattice_flag(l.get<std::string>());
      } else if (l.is_array()) {
        std::vector<std::string> items;
        for (std::size_t i = 0; i < l.size(); ++i) items.push_back(grade_text(l[i], "/lattice/" + std::to_string(i)));
        doc.lattice = lattice_from_list(items);
      } else {
        throw ParseError("expected a string or an array of grades");
      }
    } catch (const ParseError& e) {
      if (!e.where().empty()) throw;
      throw ParseError(e.what(), "/lattice");
    } catch (const Error& e) {
      throw ParseError(e.what(), "/lattice");
    }
  }
  return doc;
}

SpaceDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

Json document_json(const SpaceDocument& doc) {
  Json j;
  j["universe"] = doc.frame->universe->elements();
  j["parameters"] = doc.frame->parameters.names();
  j["carrier"] = render(doc.carrier);
  j["opens"] = Json::object();
  for (const auto& [n, s] : doc.opens) j["opens"][n] = render(s);
  if (!doc.sets.empty()) {
    j["sets"] = Json::object();
    for (const auto& [n, s] : doc.sets) j["sets"][n] = render(s);
  }
  if (doc.lattice) {
    j["lattice"] = Json::array();
    for (auto g : doc.lattice->grades()) j["lattice"].push_back(to_string(g));
  }
  return j;
}

std::string dump_document(const SpaceDocument& doc) { return document_json(doc).dump(2) + "\n"; }

FuzzySoftTopology document_topology(const SpaceDocument& doc) {
  std::vector<FuzzySoftSet> opens;
  for (const auto& [n, s] : doc.opens) opens.push_back(s);
  return validate_topology(doc.carrier, std::move(opens));
}

const FuzzySoftSet& named_set(const SpaceDocument& doc, std::string_view name) {
  for (const auto& [n, s] : doc.sets)
    if (n == name) return s;
  for (const auto& [n, s] : doc.opens)
    if (n == name) return s;
  if (name == "carrier") return doc.carrier;
  throw UsageError("no set named '" + std::string(name) + "' in the document");
}

std::optional<GradeLattice> parse_lattice_flag(std::string_view text) {
  const std::string t = trim(text);
  if (t == "auto") return std::nullopt;
  try {
    if (t.rfind("denominator", 0) == 0) {
      const std::string n = trim(std::string_view(t).substr(11));
      std::size_t used = 0;
      const long long d = std::stoll(n, &used);
      if (used != n.size() || d < 1 || d > 1'000'000) throw ParseError("bad denominator '" + n + "'");
      return GradeLattice::with_denominator(d);
    }
    std::vector<std::string> items;
    std::stringstream ss(t);
    for (std::string item; std::getline(ss, item, ',');) items.push_back(trim(item));
    return lattice_from_list(items);
  } catch (const std::logic_error&) {
    throw ParseError("bad lattice '" + t + "'");
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("bad lattice '") + t + "': " + e.what());
  }
}

ReportFormat parse_format(std::string_view text) {
  if (text == "text") return ReportFormat::text;
  if (text == "structured" || text == "json") return ReportFormat::structured;
  throw UsageError("unknown format '" + std::string(text) + "'");
}

// ---- reports

namespace {

void text_tree(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "none";
    return v.dump();
  };
  auto nested = [](const Json& v) { return (v.is_object() || v.is_array()) && !v.empty(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (nested(v)) {
        out += pad + k + ":\n";
        text_tree(v, indent + 2, out);
      } else {
        out += pad + k + ": " + (v.is_object() || v.is_array() ? std::string("none") : scalar(v)) + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() && !v.empty()) {
        // First key on the dash line, the rest aligned under it.
        std::string sub;
        text_tree(v, indent + 2, sub);
        out += pad + "- " + sub.substr(static_cast<std::size_t>(indent) + 2);
      } else if (nested(v)) {
        out += pad + "-\n";
        text_tree(v, indent + 2, out);
      } else {
        out += pad + "- " + scalar(v) + "\n";
      }
    }
  } else {
    out += pad + scalar(j) + "\n";
  }
}

Json violation_json(const AxiomViolation& v) {
  Json w = Json::array();
  for (const auto& s : v.witness) w.push_back(render(s));
  return Json{{"axiom", std::string(to_string(v.axiom))}, {"witness", w}};
}

struct Loaded {
  SpaceDocument doc;
  FuzzySoftTopology topology;
  GradeLattice lattice;
  std::string lattice_source;
};

Loaded load_space(const std::string& path, const std::optional<std::string>& lattice_flag) {
  SpaceDocument doc = load_document(path);
  FuzzySoftTopology t = document_topology(doc);
  std::optional<GradeLattice> flag = lattice_flag ? parse_lattice_flag(*lattice_flag) : std::nullopt;
  if (flag) return {std::move(doc), std::move(t), std::move(*flag), "flag"};
  if (doc.lattice) {
    GradeLattice l = *doc.lattice;
    return {std::move(doc), std::move(t), std::move(l), "document"};
  }
  GradeLattice l = default_lattice(t);
  return {std::move(doc), std::move(t), std::move(l), "auto"};
}

Json space_config(const std::string& command, const std::string& path, const Loaded& s, const RunOptions& opt) {
  Json c;
  c["command"] = command;
  c["input"] = path;
  c["lattice"] = to_string(s.lattice);
  c["lattice_source"] = s.lattice_source;
  c["disjointness"] = std::string(to_string(opt.mode));
  c["pair_relation"] = opt.pair_relation ? std::string(to_string(*opt.pair_relation)) : "default";
  c["regular_reading"] = std::string(to_string(opt.regular_reading));
  c["cap"] = num(opt.cap);
  c["seed"] = num(opt.seed);
  c["document"] = document_json(s.doc);
  return c;
}

DeciderConfig decider_config(const Loaded& s, const RunOptions& opt) {
  DeciderConfig d;
  d.lattice = s.lattice;
  d.mode = opt.mode;
  d.pair_relation = opt.pair_relation;
  d.regular_reading = opt.regular_reading;
  d.cap = opt.cap;
  return d;
}

Json witness_json(const Witness& w) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, PointPairWitness>) {
          return Json{{"kind", "point pair"}, {"first", render(x.first)}, {"second", render(x.second)}};
        } else if constexpr (std::is_same_v<T, PointWitness>) {
          return Json{{"kind", "point"}, {"point", render(x.point)}};
        } else if constexpr (std::is_same_v<T, PointClosedWitness>) {
          return Json{{"kind", "point and closed set"}, {"point", render(x.point)}, {"closed", render(x.closed)}};
        } else if constexpr (std::is_same_v<T, ClosedPairWitness>) {
          return Json{{"kind", "closed pair"}, {"first", render(x.first)}, {"second", render(x.second)}};
        } else {
          return Json{{"kind", "separation"}, {"first", render(x.first)}, {"second", render(x.second)}};
        }
      },
      w);
}

Json verdict_json(const AxiomVerdict& v) {
  Json j;
  j["axiom"] = std::string(to_string(v.axiom));
  j["holds"] = v.holds;
  j["instances"] = num(v.instances);
  if (!v.failed_component.empty()) j["failed_component"] = v.failed_component;
  j["witness"] = witness_json(v.witness);
  Json c;
  c["lattice"] = to_string(v.config.lattice);
  c["disjointness"] = std::string(to_string(v.config.mode));
  if (v.config.pair_relation) c["pair_relation"] = std::string(to_string(*v.config.pair_relation));
  if (v.config.regular_reading) c["regular_reading"] = std::string(to_string(*v.config.regular_reading));
  c["cap"] = num(v.config.cap);
  j["config"] = c;
  return j;
}

RunReport closure_like(const char* command, const std::string& path, const std::string& name, const RunOptions& opt,
                       bool closure_mode) {
  const Loaded s = load_space(path, opt.lattice);
  const FuzzySoftSet& g = named_set(s.doc, name);
  RunReport r;
  r.command = command;
  r.config = space_config(command, path, s, opt);
  r.config["set"] = name;
  r.result["set"] = render(g);
  Json used = Json::array();
  if (closure_mode) {
    r.result["closure"] = render(closure(s.topology, g));
    for (const auto& k : s.topology.closeds())
      if (fss_leq(g, k)) used.push_back(render(k));
    r.result["closed_supersets"] = used;
  } else {
    r.result["interior"] = render(interior(s.topology, g));
    for (const auto& o : s.topology.opens())
      if (fss_leq(o, g)) used.push_back(render(o));
    r.result["open_subsets"] = used;
  }
  return r;
}

Json claim_json(const ClaimRecord& c) {
  Json j;
  j["id"] = std::string(c.info->id);
  j["class"] = std::string(to_string(c.info->cls));
  j["anchor"] = std::string(c.info->anchor);
  j["statement"] = std::string(c.info->statement);
  j["status"] = c.status;
  j["vacuous"] = c.vacuous;
  j["alarm"] = c.alarm;
  Json parts = Json::array();
  for (const auto& p : c.parts) {
    Json q;
    if (!p.name.empty()) q["part"] = std::string(p.name);
    q["spaces_checked"] = num(p.spaces_checked);
    q["applicable"] = num(p.applicable);
    q["instances"] = num(p.instances);
    q["failures"] = num(p.failures);
    if (p.first) {
      const auto& w = *p.first;
      Json f;
      f["origin"] = w.origin;
      if (w.origin != "example") {
        f["space_index"] = num(w.space_index);
        f["carrier"] = w.carrier;
        f["opens"] = w.opens;
      }
      Json items = Json::array();
      for (const auto& it : w.items) items.push_back(Json{{"role", it.role}, {"value", it.text}});
      f["items"] = items;
      f["revalidated"] = w.revalidated;
      q[w.origin == "example" || p.failures == 0 ? "computed" : "first_witness"] = f;
    }
    parts.push_back(q);
  }
  j["parts"] = parts;
  return j;
}

Json spec_json(const CorpusSpec& s) {
  Json j;
  j["universe_size"] = num(s.universe_size);
  j["parameters"] = num(s.parameters);
  j["lattice"] = to_string(s.lattice);
  j["max_generators"] = num(s.max_generators);
  j["carrier"] = s.carrier_text ? *s.carrier_text : "all-one";
  j["max_opens"] = num(s.max_opens);
  j["cap"] = num(s.cap);
  j["random_count"] = num(s.random_count);
  j["random_max_generators"] = num(s.random_max_generators);
  j["seed"] = num(s.seed);
  j["landmarks"] = s.landmarks;
  return j;
}

}  // namespace

std::string render_report(const RunReport& r, ReportFormat format) {
  Json j;
  j["command"] = r.command;
  j["config"] = r.config;
  j["result"] = r.result;
  j["exit_status"] = num(static_cast<std::uint64_t>(r.exit_status));
  if (format == ReportFormat::structured) return j.dump(2) + "\n";
  std::string out;
  text_tree(j, 0, out);
  return out;
}

RunReport error_report(std::string command, const std::exception& e) {
  RunReport r;
  r.command = std::move(command);
  Json err;
  err["message"] = e.what();
  if (const auto* t = dynamic_cast<const TopologyError*>(&e)) {
    err["kind"] = "validation";
    Json v = Json::array();
    for (const auto& x : t->check().violations) v.push_back(violation_json(x));
    err["violations"] = v;
    r.exit_status = 1;
  } else if (const auto* c = dynamic_cast<const CapExceeded*>(&e)) {
    err["kind"] = "cap";
    err["count"] = num(c->count());
    err["cap"] = num(c->cap());
    r.exit_status = 3;
  } else if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
    err["kind"] = "parse";
    if (!p->where().empty()) err["where"] = p->where();
    r.exit_status = 2;
  } else if (dynamic_cast<const UnknownClaim*>(&e)) {
    err["kind"] = "unknown claim";
    r.exit_status = 2;
  } else {
    err["kind"] = "usage";
    r.exit_status = 2;
  }
  r.result["error"] = err;
  return r;
}

// ---- commands

RunReport cmd_validate(const std::string& path) {
  const SpaceDocument doc = load_document(path);
  std::vector<FuzzySoftSet> opens;
  for (const auto& [n, s] : doc.opens) opens.push_back(s);
  const TopologyCheck check = check_topology(doc.carrier, opens);
  RunReport r;
  r.command = "validate";
  r.config["command"] = "validate";
  r.config["input"] = path;
  r.config["document"] = document_json(doc);
  r.result["valid"] = check.ok();
  Json axioms = Json::array();
  for (TopologyAxiom a : {TopologyAxiom::within_carrier, TopologyAxiom::contains_null, TopologyAxiom::contains_carrier,
                          TopologyAxiom::intersection, TopologyAxiom::union_}) {
    Json row{{"axiom", std::string(to_string(a))}, {"holds", true}};
    for (const auto& x : check.violations)
      if (x.axiom == a) {
        row["holds"] = false;
        row["witness"] = violation_json(x)["witness"];
      }
    axioms.push_back(row);
  }
  r.result["axioms"] = axioms;
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  r.result["distinct_opens"] = num(opens.size());
  Json v = Json::array();
  for (const auto& x : check.violations) v.push_back(violation_json(x));
  r.result["violations"] = v;
  r.exit_status = check.ok() ? 0 : 1;
  return r;
}

RunReport cmd_closure(const std::string& path, const std::string& set, const RunOptions& opt) {
  return closure_like("closure", path, set, opt, true);
}

RunReport cmd_interior(const std::string& path, const std::string& set, const RunOptions& opt) {
  return closure_like("interior", path, set, opt, false);
}

RunReport cmd_axioms(const std::string& path, const RunOptions& opt) {
  const Loaded s = load_space(path, opt.lattice);
  const DeciderConfig d = decider_config(s, opt);
  RunReport r;
  r.command = "axioms";
  r.config = space_config("axioms", path, s, opt);
  Json v = Json::array();
  for (Axiom a : {Axiom::T0, Axiom::T1, Axiom::T2, Axiom::regular, Axiom::T3, Axiom::normal, Axiom::T4,
                  Axiom::points_closed})
    v.push_back(verdict_json(decide(a, s.topology, d)));
  r.result["verdicts"] = v;
  return r;
}

RunReport cmd_connected(const std::string& path, const RunOptions& opt) {
  const Loaded s = load_space(path, opt.lattice);
  const DeciderConfig d = decider_config(s, opt);
  RunReport r;
  r.command = "connected";
  r.config = space_config("connected", path, s, opt);
  const auto v = decide(Axiom::connected, s.topology, d);
  const auto clopen = clopen_witness(s.topology);
  r.result["connected"] = v.holds;
  r.result["separation"] = witness_json(v.witness);
  r.result["clopen"] = clopen ? Json(render(*clopen)) : Json(nullptr);
  const bool agree = !v.holds == clopen.has_value();
  r.result["clopen_agreement"] = agree ? "agree" : "disagree";
  r.result["note"] = agree ? "a non-trivial clopen set exists exactly when a separation does"
                     : v.holds ? "connected, yet a non-trivial clopen set exists"
                               : "disconnected, yet no non-trivial clopen set exists";
  return r;
}

RunReport cmd_subspace(const std::string& path, const std::string& set, const std::string& out, const RunOptions& opt) {
  const Loaded s = load_space(path, opt.lattice);
  const FuzzySoftSet& g = named_set(s.doc, set);
  if (!fss_leq(g, s.topology.carrier())) throw UsageError("set '" + set + "' is not below the carrier");
  const SubspaceView view = subspace(s.topology, g);

  SpaceDocument sub{s.doc.frame, g, {}, {}, s.doc.lattice};
  for (const auto& o : view.opens()) {
    std::string name;
    for (const auto& [n, p] : s.doc.opens)
      if (fss_intersection(p, g) == o) {
        name = n;
        break;
      }
    sub.opens.emplace_back(name, o);
  }
  for (const auto& [n, x] : s.doc.sets)
    if (fss_leq(x, g)) sub.sets.emplace_back(n, x);
  {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + out + "'");
    f << dump_document(sub);
    if (!f) throw UsageError("cannot write '" + out + "'");
  }
  RunReport r;
  r.command = "subspace";
  r.config = space_config("subspace", path, s, opt);
  r.config["set"] = set;
  r.config["output"] = out;
  r.result["carrier"] = render(g);
  Json opens = Json::object();
  for (const auto& [n, o] : sub.opens) opens[n] = render(o);
  r.result["opens"] = opens;
  r.result["written"] = out;
  return r;
}

RunReport cmd_audit(const AuditOptions& opt) {
  for (const auto& id : opt.claims) find_claim(id);
  RunReport r;
  r.command = "audit";
  r.config["command"] = "audit";
  Json cfg;
  cfg["disjointness"] = std::string(to_string(opt.config.mode));
  cfg["pair_relation"] = opt.config.pair_relation ? std::string(to_string(*opt.config.pair_relation)) : "default";
  cfg["regular_reading"] = std::string(to_string(opt.config.regular_reading));
  Json claims = Json::array();
  for (const auto& c : opt.claims) claims.push_back(c);

  AuditReport rep;
  if (opt.file) {
    const Loaded s = load_space(*opt.file, opt.lattice);
    SpaceCorpus corpus;
    corpus.pool = std::make_shared<const SetPool>(s.doc.frame, s.lattice, opt.spec.pool_cap);
    std::vector<SetPool::Index> opens;
    for (const auto& o : s.topology.opens()) opens.push_back(corpus.pool->index_of(o));
    corpus.spaces.push_back({"document", corpus.pool->index_of(s.topology.carrier()), std::move(opens)});
    rep = audit_corpus(corpus, opt.config, opt.claims, opt.jobs);
    rep.source = *opt.file;
    r.config["input"] = *opt.file;
    r.config["lattice"] = to_string(s.lattice);
    r.config["lattice_source"] = s.lattice_source;
    r.config["document"] = document_json(s.doc);
  } else {
    SpaceCorpus corpus = build_corpus(opt.spec);
    if (opt.budget && *opt.budget < corpus.spaces.size()) {
      const std::size_t n = static_cast<std::size_t>(*opt.budget);
      corpus.spaces.resize(n);
      corpus.enumerated = std::min(corpus.enumerated, n);
      corpus.landmarks = std::min(corpus.landmarks, n - corpus.enumerated);
      corpus.random = n - corpus.enumerated - corpus.landmarks;
    }
    rep = audit_corpus(corpus, opt.config, opt.claims, opt.jobs);
    r.config["spec"] = spec_json(opt.spec);
    r.config["budget"] = opt.budget ? Json(num(*opt.budget)) : Json("none");
  }
  r.config["audit"] = cfg;
  r.config["claims"] = claims;

  Json corpus;
  corpus["source"] = rep.source;
  corpus["spaces"] = num(rep.spaces);
  if (!opt.file) {
    corpus["enumerated"] = num(rep.enumerated);
    corpus["landmarks"] = num(rep.landmarks);
    corpus["random"] = num(rep.random);
    corpus["generator_families"] = num(rep.families);
    corpus["skipped_families"] = num(rep.skipped);
    corpus["random_redraws"] = num(rep.random_redraws);
  }
  r.result["corpus"] = corpus;
  r.result["soundness_alarm"] = rep.soundness_alarm;
  Json list = Json::array();
  for (const auto& c : rep.claims) list.push_back(claim_json(c));
  r.result["claims"] = list;
  r.exit_status = rep.soundness_alarm ? 4 : 0;
  return r;
}

}  // namespace fst
