#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "primdec/homology.hpp"
#include "primdec/primdec.hpp"
#include "primdec/script.hpp"
#include "primdec/verify.hpp"

namespace primdec {

namespace {

using Json = nlohmann::ordered_json;

struct Binding {
  bool is_module;
  Submodule value;
};

Json element_json(const FreeElement& v, bool is_module) {
  if (!is_module) return v[0].to_string();
  Json row = Json::array();
  for (std::size_t i = 0; i < v.rank(); ++i) row.push_back(v[i].to_string());
  return row;
}

Json generators_json(const Submodule& m, bool is_module) {
  Json out = Json::array();
  Submodule c = canonical(m);
  for (const auto& g : c.gens()) out.push_back(element_json(g, is_module));
  return out;
}

Json report_json(const ValidationReport& r) {
  Json prim = Json::array();
  for (const auto& p : r.primaries) {
    Json e = {{"index", p.index}, {"ok", p.ok}};
    if (!p.ok) e["reason"] = p.reason;
    prim.push_back(e);
  }
  return Json{{"intersection_ok", r.intersection_ok},
              {"primaries", prim},
              {"irredundant_ok", r.irredundant_ok},
              {"primes_distinct_ok", r.primes_distinct_ok},
              {"ok", r.ok()}};
}

Json decomposition_json(const DecompositionResult& d, bool is_module) {
  Json comps = Json::array();
  for (const auto& c : d.components)
    comps.push_back({{"generators", generators_json(c.primary, is_module)},
                     {"prime", generators_json(c.prime.ideal, false)},
                     {"codim", c.prime.codim},
                     {"embedded", c.embedded}});
  return comps;
}

std::string text_of(const Submodule& m) { return canonical(m).to_string(); }

std::string report_text(const ValidationReport& r) {
  if (r.ok()) return "all checks pass";
  std::ostringstream out;
  out << "intersection " << (r.intersection_ok ? "ok" : "FAILED");
  for (const auto& p : r.primaries)
    if (!p.ok) out << "; component " << p.index << ": " << p.reason;
  out << "; irredundant " << (r.irredundant_ok ? "ok" : "FAILED");
  out << "; primes distinct " << (r.primes_distinct_ok ? "ok" : "FAILED");
  return out.str();
}

FreeElement parse_element(const Json& j, const RingPtr& ring, std::size_t rank) {
  std::vector<Polynomial> comps;
  if (j.is_string()) {
    comps.push_back(parse_polynomial(j.get<std::string>(), ring));
  } else if (j.is_array()) {
    for (const auto& c : j) comps.push_back(parse_polynomial(c.get<std::string>(), ring));
  } else {
    throw InvalidArgument("expected a polynomial or a list of polynomials");
  }
  if (comps.size() != rank) throw RankMismatch(rank, comps.size());
  return FreeElement(ring, std::move(comps));
}

// Components of a decomposition stored in the JSON output format.
DecompositionResult parse_decomposition(const Json& doc, const RingPtr& ring, std::size_t rank) {
  const Json* obj = &doc;
  if (doc.is_array()) {
    obj = nullptr;
    for (const auto& e : doc)
      if (e.contains("components")) {
        obj = &e;
        break;
      }
    if (!obj) throw InvalidArgument("no components in expected file");
  }
  DecompositionResult d;
  for (const auto& c : obj->at("components")) {
    Submodule q(ring, rank);
    for (const auto& g : c.at("generators")) q.add(parse_element(g, ring, rank));
    Submodule p(ring, 1);
    for (const auto& g : c.at("prime")) p.add(parse_element(g, ring, 1));
    d.components.push_back({canonical(q), make_prime(p), c.value("embedded", false), q, 0, {}});
  }
  return d;
}

class Runner {
 public:
  explicit Runner(const RunOptions& options) : options_(options) {}
  Runner(const RunOptions& options, Json expected) : options_(options), expected_(std::move(expected)) {}

  RunOutcome run(const Script& script) {
    for (const auto& st : script.statements) {
      if (const auto* r = std::get_if<RingStatement>(&st)) {
        bindings_.clear();
        if (options_.mode == OutputMode::Text) text_ << "// ring " << r->name << "\n";
      } else if (const auto* b = std::get_if<BindStatement>(&st)) {
        bindings_.insert_or_assign(b->name, Binding{b->is_module, b->value});
      } else {
        const auto& c = std::get<CommandStatement>(st);
        try {
          command(c);
        } catch (const ParseError& e) {
          return finish(1, e.what());
        } catch (const std::exception& e) {
          return finish(2, std::to_string(c.line) + ":" + std::to_string(c.column) + ": " + c.command + ": " + e.what());
        }
      }
    }
    return finish(exit_code_, "");
  }

 private:
  RunOutcome finish(int code, const std::string& error) {
    std::string out = options_.mode == OutputMode::Json ? json_.dump(2) + "\n" : text_.str();
    return RunOutcome{code, out, error};
  }

  const Binding& get(const std::string& name) const { return bindings_.at(name); }

  void command(const CommandStatement& c) {
    const Binding& b = get(c.args[0]);
    Json entry = {{"command", c.command}, {"input", c.args[0]}};
    if (expected_) {
      if (c.command != "primdec") return;
      check_expected(c, b, entry);
    } else if (c.command == "primdec") {
      PrimdecOptions opts{options_.component_bound, options_.seed};
      DecompositionResult d = primdec_ehv(b.value, opts);
      ValidationReport report = validate_decomposition(b.value, d, options_.seed);
      entry["components"] = decomposition_json(d, b.is_module);
      entry["validation"] = report_json(report);
      text_ << "primdec " << c.args[0] << ":\n";
      for (std::size_t i = 0; i < d.components.size(); ++i) {
        const auto& comp = d.components[i];
        text_ << "  [" << i + 1 << "] " << text_of(comp.primary) << "\n      prime " << text_of(comp.prime.ideal)
              << ", codim " << comp.prime.codim << (comp.embedded ? ", embedded" : ", isolated") << "\n";
      }
      text_ << "  validation: " << report_text(report) << "\n";
    } else if (c.command == "hull") {
      Submodule h = equidim_hull(b.value);
      entry["generators"] = generators_json(h, b.is_module);
      text_ << "hull " << c.args[0] << ": " << text_of(h) << "\n";
    } else if (c.command == "minass") {
      Json primes = Json::array();
      text_ << "minass " << c.args[0] << ":";
      for (const auto& p : min_ass(b.value, options_.seed)) {
        primes.push_back(generators_json(p.ideal, false));
        text_ << " " << text_of(p.ideal);
      }
      text_ << "\n";
      entry["primes"] = primes;
    } else if (c.command == "localize") {
      const Binding& j = get(c.args[1]);
      Submodule l = localize_module(b.value, j.value, options_.seed);
      entry["at"] = c.args[1];
      entry["generators"] = generators_json(l, b.is_module);
      text_ << "localize " << c.args[0] << " at " << c.args[1] << ": " << text_of(l) << "\n";
    } else if (c.command == "validate") {
      std::filesystem::path path(c.args[1]);
      if (path.is_relative()) path = std::filesystem::path(options_.base_dir) / path;
      std::ifstream in(path);
      if (!in) throw Error("cannot open " + path.string());
      Json doc;
      try {
        doc = Json::parse(in);
      } catch (const Json::exception& e) {
        throw ParseError(c.line, c.column, "invalid JSON in " + path.string() + ": " + e.what());
      }
      DecompositionResult d;
      try {
        d = parse_decomposition(doc, b.value.ring(), b.value.rank());
      } catch (const Json::exception& e) {
        throw ParseError(c.line, c.column, "malformed decomposition in " + path.string() + ": " + e.what());
      }
      ValidationReport report = validate_decomposition(b.value, d, options_.seed);
      entry["file"] = c.args[1];
      entry["validation"] = report_json(report);
      text_ << "validate " << c.args[0] << " against " << c.args[1] << ": " << report_text(report) << "\n";
      if (!report.ok()) exit_code_ = 3;
    }
    json_.push_back(entry);
  }

  // Validates the expected decomposition recorded for this primdec command.
  void check_expected(const CommandStatement& c, const Binding& b, Json& entry) {
    const Json* found = nullptr;
    std::size_t seen = 0;
    for (const auto& e : *expected_) {
      if (e.value("command", "") != "primdec" || e.value("input", "") != c.args[0]) continue;
      if (seen++ == matched_[c.args[0]]) {
        found = &e;
        break;
      }
    }
    if (!found) throw ParseError(c.line, c.column, "no expected decomposition for " + c.args[0]);
    ++matched_[c.args[0]];
    DecompositionResult d;
    try {
      d = parse_decomposition(*found, b.value.ring(), b.value.rank());
    } catch (const Json::exception& e) {
      throw ParseError(c.line, c.column, std::string("malformed expected decomposition: ") + e.what());
    }
    ValidationReport report = validate_decomposition(b.value, d, options_.seed);
    entry["validation"] = report_json(report);
    text_ << "validate " << c.args[0] << ": " << report_text(report) << "\n";
    if (!report.ok()) exit_code_ = 3;
  }

  RunOptions options_;
  std::optional<Json> expected_;
  std::map<std::string, std::size_t> matched_;
  std::map<std::string, Binding> bindings_;
  Json json_ = Json::array();
  std::ostringstream text_;
  int exit_code_ = 0;
};

std::string mismatch(std::size_t index, const std::string& what) {
  return "entry " + std::to_string(index) + ": " + what;
}

std::set<std::string> prime_set(const Json& comps) {
  std::set<std::string> out;
  for (const auto& c : comps) out.insert(c.at("prime").dump());
  return out;
}

std::map<std::string, std::string> isolated(const Json& comps) {
  std::map<std::string, std::string> out;
  for (const auto& c : comps)
    if (!c.value("embedded", false)) out[c.at("prime").dump()] = c.at("generators").dump();
  return out;
}

}  // namespace

RunOutcome run_script(const Script& script, const RunOptions& options) { return Runner(options).run(script); }

RunOutcome run_source(std::string_view source, const RunOptions& options) {
  Script script;
  try {
    script = parse_script(source);
  } catch (const ParseError& e) {
    return RunOutcome{1, "", e.what()};
  }
  return run_script(script, options);
}

RunOutcome validate_script(const Script& script, const std::string& expected_json, const RunOptions& options) {
  Json expected;
  try {
    expected = Json::parse(expected_json);
  } catch (const Json::exception& e) {
    return RunOutcome{1, "", std::string("invalid expected JSON: ") + e.what()};
  }
  if (!expected.is_array()) expected = Json::array({expected});
  return Runner(options, std::move(expected)).run(script);
}

std::string compare_outputs(const std::string& actual_json, const std::string& expected_json) {
  Json actual, expected;
  try {
    actual = Json::parse(actual_json);
    expected = Json::parse(expected_json);
  } catch (const Json::exception& e) {
    return std::string("invalid JSON: ") + e.what();
  }
  if (!actual.is_array() || !expected.is_array()) return "both documents must be arrays";
  if (actual.size() != expected.size())
    return "expected " + std::to_string(expected.size()) + " entries, got " + std::to_string(actual.size());
  for (std::size_t i = 0; i < actual.size(); ++i) {
    const Json& a = actual[i];
    const Json& e = expected[i];
    if (a.value("command", "") != e.value("command", "")) return mismatch(i, "command differs");
    if (a.value("input", "") != e.value("input", "")) return mismatch(i, "input differs");
    std::string cmd = a.value("command", "");
    if (cmd == "primdec") {
      if (prime_set(a.at("components")) != prime_set(e.at("components"))) return mismatch(i, "associated primes differ");
      if (isolated(a.at("components")) != isolated(e.at("components"))) return mismatch(i, "isolated components differ");
      if (!a.at("validation").value("ok", false)) return mismatch(i, "validation failed");
    } else if (cmd == "hull" || cmd == "localize") {
      if (a.at("generators") != e.at("generators")) return mismatch(i, "generators differ");
    } else if (cmd == "minass") {
      if (a.at("primes") != e.at("primes")) return mismatch(i, "primes differ");
    } else if (cmd == "validate") {
      if (!a.at("validation").value("ok", false)) return mismatch(i, "validation failed");
    }
  }
  return "";
}

}  // namespace primdec
