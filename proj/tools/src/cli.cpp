#include "ringlab/cli/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ringlab/config.hpp"
#include "ringlab/error.hpp"
#include "ringlab/spec_lang.hpp"

namespace ringlab::cli {

namespace {

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::string cur;
    for (char c : item) {
      if (c == ',') {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Property> parse_properties(const std::vector<std::string>& names) {
  std::vector<Property> out;
  for (const auto& n : split_list(names)) {
    auto p = parse_property(n);
    if (!p) throw UsageError("unknown property '" + n + "'");
    out.push_back(*p);
  }
  return out;
}

Truth parse_expectation(const std::string& s) {
  if (s == "true" || s == "holds" || s == "1") return Truth::holds;
  if (s == "false" || s == "fails" || s == "0") return Truth::fails;
  if (s == "undecided") return Truth::undecided;
  throw UsageError("--expect takes true, false or undecided, not '" + s + "'");
}

Json truth_json(Truth t) {
  if (t == Truth::undecided) return "undecided";
  return t == Truth::holds;
}

std::string truth_text(Truth t) {
  return t == Truth::undecided ? "undecided" : t == Truth::holds ? "true" : "false";
}

std::string seconds_text(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s << " s";
  return os.str();
}

std::string roles_text(const std::vector<std::pair<std::string, std::string>>& roles) {
  std::string s;
  for (const auto& [k, v] : roles) s += (s.empty() ? "" : ", ") + k + " = " + v;
  return s;
}

}  // namespace

// ---- check --------------------------------------------------------------

Json check_json(const PropertyReport& report, bool timing) {
  Json results = Json::array();
  for (const auto& r : report.results) {
    Json j;
    j["property"] = property_name(r.property);
    j["holds"] = truth_json(r.truth);
    if (r.witness) {
      Json w = Json::object();
      for (const auto& [role, value] : r.witness->rendered) w[role] = value;
      j["witness"] = std::move(w);
    } else {
      j["witness"] = nullptr;
    }
    j["universe"] = r.universe.empty() ? Json(nullptr) : Json(r.universe);
    if (timing) j["seconds"] = r.seconds;
    results.push_back(std::move(j));
  }
  Json doc;
  doc["ring"] = report.ring;
  doc["results"] = std::move(results);
  return doc;
}

std::string check_text(const PropertyReport& report, bool timing) {
  std::ostringstream os;
  os << report.ring << "\n";
  for (const auto& r : report.results) {
    os << "  " << property_name(r.property) << ": " << truth_text(r.truth);
    if (!r.universe.empty()) os << "  (" << r.universe << ")";
    if (timing) os << "  [" << seconds_text(r.seconds) << "]";
    os << "\n";
    if (r.witness) {
      os << "    witness: " << roles_text(r.witness->rendered) << "\n";
      for (const auto& c : r.witness->conditions)
        if (c.forall.empty() && !c.value.empty()) os << "      " << c.expression << " = " << c.value << "\n";
    }
    if (!r.note.empty()) os << "    note: " << r.note << "\n";
  }
  return os.str();
}

std::string check_markdown(const PropertyReport& report) {
  std::ostringstream os;
  os << "## `" << report.ring << "`\n\n| property | holds | witness | universe |\n|---|---|---|---|\n";
  for (const auto& r : report.results)
    os << "| " << property_name(r.property) << " | " << truth_text(r.truth) << " | "
       << (r.witness ? roles_text(r.witness->rendered) : "") << " | " << r.universe << " |\n";
  return os.str();
}

// ---- verify-paper -------------------------------------------------------

Json suites_json(const std::vector<SuiteResult>& results, bool timing) {
  Json suites = Json::array();
  bool all = true;
  for (const auto& s : results) {
    all = all && s.pass();
    Json j;
    j["id"] = s.id;
    j["title"] = s.title;
    j["pass"] = s.pass();
    j["bounded"] = s.bounded;
    j["model"] = s.model.empty() ? Json(nullptr) : Json(s.model);
    j["error"] = s.error.empty() ? Json(nullptr) : Json(s.error);
    Json verdicts = Json::array();
    for (const auto& v : s.verdicts) {
      Json jv;
      jv["ring"] = v.ring;
      jv["claim"] = v.claim;
      jv["pass"] = v.pass;
      jv["detail"] = v.detail;
      Json values = Json::object();
      for (const auto& [k, val] : v.values) values[k] = val;
      jv["values"] = std::move(values);
      jv["universe"] = v.universe.empty() ? Json(nullptr) : Json(v.universe);
      verdicts.push_back(std::move(jv));
    }
    j["verdicts"] = std::move(verdicts);
    j["notes"] = s.notes;
    if (timing) j["seconds"] = s.seconds;
    suites.push_back(std::move(j));
  }
  Json doc;
  doc["pass"] = all;
  doc["suites"] = std::move(suites);
  return doc;
}

std::string suites_text(const std::vector<SuiteResult>& results, bool timing) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& s : results) {
    passed += s.pass();
    os << (s.pass() ? "PASS " : "FAIL ") << s.id << "  " << s.title;
    if (s.bounded) os << "  [bounded verification]";
    if (timing) os << "  [" << seconds_text(s.seconds) << "]";
    os << "\n";
    if (!s.model.empty()) os << "    model: " << s.model << "\n";
    for (const auto& v : s.verdicts) {
      os << "    " << (v.pass ? "ok  " : "BAD ") << v.ring << ": " << v.claim;
      if (!v.detail.empty()) os << " (" << v.detail << ")";
      os << "\n";
      if (!v.values.empty()) os << "          " << roles_text(v.values) << "\n";
      if (!v.universe.empty()) os << "          universe: " << v.universe << "\n";
    }
    for (const auto& n : s.notes) os << "    note: " << n << "\n";
    if (!s.error.empty()) os << "    error: " << s.error << "\n";
  }
  os << passed << "/" << results.size() << " suites passed\n";
  return os.str();
}

std::string suites_markdown(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  os << "# Verification report\n\n";
  for (const auto& s : results) {
    os << "## " << s.id << ": " << s.title << "\n\n";
    os << "Status: **" << (s.pass() ? "pass" : "FAIL") << "**";
    if (s.bounded) os << " (bounded verification)";
    os << "\n\n";
    if (!s.model.empty()) os << "Model: " << s.model << "\n\n";
    if (!s.verdicts.empty()) {
      os << "| ring | claim | result | values | universe |\n|---|---|---|---|---|\n";
      for (const auto& v : s.verdicts)
        os << "| `" << v.ring << "` | " << v.claim << (v.detail.empty() ? "" : " (" + v.detail + ")") << " | "
           << (v.pass ? "ok" : "FAIL") << " | " << roles_text(v.values) << " | " << v.universe << " |\n";
      os << "\n";
    }
    for (const auto& n : s.notes) os << "- " << n << "\n";
    if (!s.error.empty()) os << "- error: " << s.error << "\n";
    if (!s.notes.empty() || !s.error.empty()) os << "\n";
  }
  return os.str();
}

// ---- search / report ----------------------------------------------------

Json search_json(const std::vector<Property>& require, const std::vector<Property>& forbid, const SearchResult& r) {
  Json doc;
  Json req = Json::array(), forb = Json::array();
  for (Property p : require) req.push_back(property_name(p));
  for (Property p : forbid) forb.push_back(property_name(p));
  doc["require"] = std::move(req);
  doc["forbid"] = std::move(forb);
  doc["rings"] = r.rings;
  doc["examined"] = r.examined;
  doc["exhausted"] = r.exhausted;
  doc["note"] = r.note.empty() ? Json(nullptr) : Json(r.note);
  return doc;
}

Json implication_json(const ImplicationReport& rep) {
  Json doc;
  doc["rings"] = rep.rings;
  Json cells = Json::array();
  for (const auto& c : rep.cells) {
    Json j;
    j["from"] = property_name(c.from);
    j["to"] = property_name(c.to);
    j["verdict"] = implication_name(c.verdict);
    j["separating"] = c.separating;
    j["support"] = c.support;
    j["unknown"] = c.unknown;
    cells.push_back(std::move(j));
  }
  doc["cells"] = std::move(cells);
  Json seps = Json::array();
  for (const auto& s : rep.separations) {
    Json j;
    j["holds"] = property_name(s.holds);
    j["fails"] = property_name(s.fails);
    j["ring"] = s.ring;
    j["confirmed"] = s.confirmed;
    j["note"] = s.note;
    seps.push_back(std::move(j));
  }
  doc["separations"] = std::move(seps);
  return doc;
}

namespace {

char cell_mark(const ImplicationReport& rep, Property a, Property b) {
  if (a == b) return '.';
  switch (rep.cell(a, b).verdict) {
    case Implication::implied: return '+';
    case Implication::separated: return 'x';
    case Implication::undecided: return '?';
  }
  return ' ';
}

}  // namespace

std::string implication_text(const ImplicationReport& rep) {
  std::ostringstream os;
  const auto& props = all_properties();
  os << "implications over " << rep.rings.size() << " catalog rings (row implies column)\n";
  os << "  + implied on catalog, x separated, ? undecided\n\n";
  for (std::size_t i = 0; i < props.size(); ++i)
    os << "  " << std::setw(2) << i << " " << property_name(props[i]) << "\n";
  os << "\n    ";
  for (std::size_t j = 0; j < props.size(); ++j) os << std::setw(3) << j;
  os << "\n";
  for (std::size_t i = 0; i < props.size(); ++i) {
    os << "  " << std::setw(2) << i;
    for (std::size_t j = 0; j < props.size(); ++j) os << "  " << cell_mark(rep, props[i], props[j]);
    os << "\n";
  }
  os << "\nseparations:\n";
  for (const auto& s : rep.separations)
    os << "  " << (s.confirmed ? "confirmed " : "unconfirmed ") << property_name(s.holds) << " but not "
       << property_name(s.fails) << ": " << s.ring << (s.note.empty() ? "" : "  (" + s.note + ")") << "\n";
  return os.str();
}

std::string implication_markdown(const ImplicationReport& rep) {
  std::ostringstream os;
  const auto& props = all_properties();
  os << "# Implications over " << rep.rings.size() << " catalog rings\n\nRow implies column: `+` implied on the "
        "catalog, `x` separated, `?` undecided.\n\n|   |";
  for (Property p : props) os << " " << property_name(p) << " |";
  os << "\n|---|";
  for (std::size_t j = 0; j < props.size(); ++j) os << "---|";
  os << "\n";
  for (Property a : props) {
    os << "| " << property_name(a) << " |";
    for (Property b : props) os << " " << cell_mark(rep, a, b) << " |";
    os << "\n";
  }
  os << "\n## Separations\n\n";
  for (const auto& s : rep.separations)
    os << "- " << property_name(s.holds) << " but not " << property_name(s.fails) << ": `" << s.ring << "` "
       << (s.confirmed ? "(confirmed)" : "(unconfirmed)") << (s.note.empty() ? "" : ", " + s.note) << "\n";
  return os.str();
}

// ---- driver -------------------------------------------------------------

namespace {

struct Options {
  std::string format = "text";
  bool timing = false;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  // check
  std::string spec;
  std::vector<std::string> props;
  std::vector<std::string> expect;
  // verify-paper
  std::vector<std::string> suites;
  // search
  std::vector<std::string> require, forbid;
  std::size_t budget = 0;
  unsigned depth = 1;
};

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  std::string text = o.spec;
  if (text == "-") text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  std::vector<Property> props = parse_properties(o.props);
  if (props.empty()) props = all_properties();
  std::vector<Truth> expect;
  for (const auto& e : split_list(o.expect)) expect.push_back(parse_expectation(e));
  if (!expect.empty() && expect.size() != 1 && expect.size() != props.size())
    throw UsageError("--expect needs one value or one per property");

  const RingValue v = build_ring(text);
  PropertyReport report;
  report.ring = v.recipe;
  PredicateOptions po;
  po.seed = o.seed;
  if (v.finite) {
    report = check_all(*v.finite, props, po);
    report.ring = v.recipe;
  } else {
    for (Property p : props)
      report.results.push_back(v.free ? check(*v.free, p)
                                      : undecided(p, v.recipe + " is not enumerable; use verify-paper for its suite"));
  }

  if (o.format == "json") emit_json(out, check_json(report, o.timing));
  else if (o.format == "md") out << check_markdown(report);
  else out << check_text(report, o.timing);

  for (std::size_t i = 0; i < report.results.size() && !expect.empty(); ++i) {
    const Truth want = expect.size() == 1 ? expect[0] : expect[i];
    if (report.results[i].truth != want) return mismatch;
  }
  return ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> ids = split_list(o.suites);
  if (ids.empty())
    for (const auto& s : suite_table()) ids.push_back(s.id);
  for (auto& id : ids) {
    for (auto& c : id) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (!is_suite(id)) throw UsageError("unknown suite '" + id + "'");
  }
  const auto results = run_suites(ids, Catalog::standard());
  if (o.format == "json") emit_json(out, suites_json(results, o.timing));
  else if (o.format == "md") out << suites_markdown(results);
  else out << suites_text(results, o.timing);
  bool limited = false, all = true;
  for (const auto& r : results) {
    limited = limited || r.resource_limited;
    all = all && r.pass();
  }
  return all ? ok : limited ? resource_limit : mismatch;
}

int cmd_search(const Options& o, std::ostream& out) {
  const auto require = parse_properties(o.require);
  const auto forbid = parse_properties(o.forbid);
  if (require.empty() && forbid.empty()) throw UsageError("search needs --require or --forbid");
  SearchBudget budget;
  if (o.budget) budget.max_rings = o.budget;
  budget.depth = o.depth;
  const auto r = counterexample_search(require, forbid, budget);
  if (o.format == "json") {
    emit_json(out, search_json(require, forbid, r));
  } else {
    const bool md = o.format == "md";
    if (r.rings.empty()) out << (md ? "No ring found.\n" : "none\n");
    for (const auto& ring : r.rings) out << (md ? "- `" + ring + "`" : ring) << "\n";
    if (!r.note.empty()) out << (md ? "\n" : "") << "note: " << r.note << "\n";
  }
  return ok;
}

int cmd_report(const Options& o, std::ostream& out) {
  const auto rep = implication_report(Catalog::standard(), o.budget ? o.budget : 16384);
  if (o.format == "json") emit_json(out, implication_json(rep));
  else if (o.format == "md") out << implication_markdown(rep);
  else out << implication_text(rep);
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"ringlab: finite ring property checker"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "md", "text"}));
    c->add_flag("--timing", o.timing, "Include timings");
    c->add_option("--threads", o.threads, "Worker threads (results do not depend on it)");
  };
  auto* check = app.add_subcommand("check", "Check properties of one ring");
  check->add_option("spec", o.spec, "Ring description, or - for stdin")->required();
  check->add_option("properties", o.props, "Properties (comma separated)");
  check->add_option("--props", o.props, "Properties (comma separated)");
  check->add_option("--expect", o.expect, "Expected outcomes: true, false or undecided");
  check->add_option("--seed", o.seed, "Seed for sampled checks");
  add_common(check);

  auto* verify = app.add_subcommand("verify-paper", "Run verification suites");
  verify->add_option("--suite", o.suites, "Suite ids (comma separated)");
  verify->add_option("--seed", o.seed, "Accepted for symmetry; suites use fixed seeds");
  add_common(verify);

  auto* search = app.add_subcommand("search", "Search the catalog for counterexamples");
  search->add_option("--require", o.require, "Properties that must hold");
  search->add_option("--forbid", o.forbid, "Properties that must fail");
  search->add_option("--budget", o.budget, "Maximum number of candidate rings");
  search->add_option("--depth", o.depth, "Constructor applications on top of the catalog");
  add_common(search);

  auto* report = app.add_subcommand("report", "Implication matrix over the catalog");
  report->add_option("--budget", o.budget, "Largest catalog ring included");
  add_common(report);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  if (o.threads) set_thread_count(o.threads);

  try {
    if (check->parsed()) return cmd_check(o, in, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (search->parsed()) return cmd_search(o, out);
    return cmd_report(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return resource_limit;
  }
}

}  // namespace ringlab::cli
