#include "invdiff/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace invdiff {

using nlohmann::json;

namespace {

const std::set<std::string> kKinds{"normal_form", "membership",   "invariance",    "derivations", "classification",
                                   "gaps",        "frobenius",    "module",        "equivalence", "commutativity",
                                   "center",      "separation",   "density",       "annihilator"};

const std::set<std::string> kFamilies{"cone", "ruled-stated", "ruled-corrected"};

// Kinds whose `action` field is required.
const std::set<std::string> kNeedsAction{"invariance", "frobenius",  "module",  "equivalence",
                                         "center",     "separation", "density", "annihilator"};

Lattice lattice_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ScenarioError("expected a pair [n, m], got " + j.dump());
  return {j[0].get<Int>(), j[1].get<Int>()};
}

Weight weight_from(const json& j) {
  if (j.is_number_integer()) return {j.get<Int>()};
  if (j.is_array() && (j.size() == 1 || j.size() == 2)) return j.get<Weight>();
  throw ScenarioError("expected a weight (integer or [a, b]), got " + j.dump());
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

AnalysisRequest analysis_from(const json& j) {
  AnalysisRequest a;
  a.id = j.at("id").get<std::string>();
  a.kind = j.at("kind").get<std::string>();
  a.claim = get_or<std::string>(j, "claim", "");
  a.action = get_or<std::string>(j, "action", "");
  a.operators = get_or<std::vector<std::string>>(j, "operators", {});
  a.witness = get_or<std::vector<std::string>>(j, "witness", {});
  if (j.contains("weights")) {
    for (const auto& w : j.at("weights")) a.weights.push_back(weight_from(w));
  }
  if (j.contains("weight_range")) {
    const auto r = j.at("weight_range").get<std::vector<Int>>();
    if (r.size() != 2 || r[0] > r[1]) throw ScenarioError(a.id + ": weight_range must be [lo, hi]");
    for (Int k = r[0]; k <= r[1]; ++k) a.weights.push_back({k});
  }
  if (j.contains("window")) {
    const auto w = j.at("window").get<std::vector<Int>>();
    if (w.size() != 2 || w[0] < 0 || w[1] < 0) throw ScenarioError(a.id + ": window must be [a, b] with a, b >= 0");
    a.window = Window::box(w[0], w[1]);
  }
  a.order_bound = get_or<unsigned>(j, "order_bound", a.order_bound);
  a.word_length = get_or<unsigned>(j, "word_length", a.word_length);
  a.bound = get_or<Int>(j, "bound", a.bound);
  a.families = get_or<std::string>(j, "families", "");
  if (j.contains("expect")) a.expect = j.at("expect");
  return a;
}

}  // namespace

SemigroupPtr Scenario::semigroup() const { return std::make_shared<const AffineSemigroup2D>(generators); }

const TorusAction& Scenario::action(const std::string& n) const {
  for (const auto& a : actions) {
    if (a.name == n) return a.action;
  }
  throw ScenarioError("scenario " + name + ": unknown action '" + n + "'");
}

SymbolTable Scenario::symbols() const {
  SymbolTable table;
  for (const auto& o : operators) {
    try {
      table.insert_or_assign(o.name, parse_operator(o.expr, notation, table));
    } catch (const std::exception& e) {
      throw ScenarioError("operator " + o.name + ": " + e.what());
    }
  }
  return table;
}

OreOperator Scenario::op(const std::string& name_or_expr) const { return parse_operator(name_or_expr, notation, symbols()); }

Scenario scenario_from_json(const json& j) {
  Scenario sc;
  try {
    sc.name = j.at("name").get<std::string>();
    for (const auto& g : j.at("semigroup")) sc.generators.push_back(lattice_from(g));
    const json& c = j.at("coordinates");
    const auto mode = c.at("mode").get<std::string>();
    if (mode == "angular") {
      sc.notation = Notation::cone();
    } else if (mode == "multiplicative") {
      sc.notation = Notation::ruled();
    } else {
      throw ScenarioError("coordinates.mode must be angular or multiplicative");
    }
    sc.notation.first = get_or(c, "first", sc.notation.first);
    sc.notation.second = get_or(c, "second", sc.notation.second);
    sc.notation.d1 = get_or(c, "d1", sc.notation.d1);
    sc.notation.d2 = get_or(c, "d2", sc.notation.d2);
    sc.truncation = get_or<Int>(j, "truncation", sc.truncation);
    for (const auto& a : j.at("actions")) {
      std::vector<Functional> fs;
      for (const auto& f : a.at("weights")) {
        const Lattice l = lattice_from(f);
        fs.push_back({l.n, l.m});
      }
      sc.actions.push_back({a.at("name").get<std::string>(), TorusAction(a.at("name").get<std::string>(), fs)});
    }
    for (const auto& o : get_or<json>(j, "operators", json::array())) {
      sc.operators.push_back({o.at("name").get<std::string>(), o.at("expr").get<std::string>()});
    }
    for (const auto& a : get_or<json>(j, "analyses", json::array())) sc.analyses.push_back(analysis_from(a));
    if (j.contains("diagram")) {
      const json& d = j.at("diagram");
      sc.diagram.generators = get_or<std::vector<std::string>>(d, "generators", {});
      sc.diagram.n_max = get_or<Int>(d, "n_max", sc.diagram.n_max);
      sc.diagram.m_min = get_or<Int>(d, "m_min", sc.diagram.m_min);
      sc.diagram.m_max = get_or<Int>(d, "m_max", sc.diagram.m_max);
    }
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("malformed scenario: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(std::string("malformed scenario: ") + e.what());
  }
  validate(sc);
  return sc;
}

nlohmann::ordered_json scenario_to_json(const Scenario& sc) {
  nlohmann::ordered_json j;
  j["name"] = sc.name;
  for (const auto& g : sc.generators) j["semigroup"].push_back({g.n, g.m});
  j["coordinates"] = {{"mode", sc.notation.mode == SecondMode::Angular ? "angular" : "multiplicative"},
                      {"first", sc.notation.first},
                      {"second", sc.notation.second},
                      {"d1", sc.notation.d1},
                      {"d2", sc.notation.d2}};
  j["truncation"] = sc.truncation;
  for (const auto& a : sc.actions) {
    nlohmann::ordered_json fs = nlohmann::ordered_json::array();
    for (const auto& f : a.action.functionals) fs.push_back({f.a, f.b});
    j["actions"].push_back({{"name", a.name}, {"weights", fs}});
  }
  j["operators"] = nlohmann::ordered_json::array();
  for (const auto& o : sc.operators) j["operators"].push_back({{"name", o.name}, {"expr", o.expr}});
  j["diagram"] = {{"generators", sc.diagram.generators},
                  {"n_max", sc.diagram.n_max},
                  {"m_min", sc.diagram.m_min},
                  {"m_max", sc.diagram.m_max}};
  j["analyses"] = nlohmann::ordered_json::array();
  for (const auto& a : sc.analyses) {
    nlohmann::ordered_json x{{"id", a.id}, {"kind", a.kind}};
    if (!a.claim.empty()) x["claim"] = a.claim;
    if (!a.action.empty()) x["action"] = a.action;
    if (!a.operators.empty()) x["operators"] = a.operators;
    if (!a.witness.empty()) x["witness"] = a.witness;
    if (!a.weights.empty()) x["weights"] = a.weights;
    x["window"] = {a.window.a_max, a.window.b_max};
    x["order_bound"] = a.order_bound;
    x["word_length"] = a.word_length;
    x["bound"] = a.bound;
    if (!a.families.empty()) x["families"] = a.families;
    if (a.expect) x["expect"] = nlohmann::ordered_json::parse(a.expect->dump());
    j["analyses"].push_back(std::move(x));
  }
  return j;
}

void validate(const Scenario& sc) {
  if (sc.name.empty()) throw ScenarioError("scenario without a name");
  if (sc.generators.empty()) throw ScenarioError(sc.name + ": empty semigroup");
  if (sc.truncation < 1) throw ScenarioError(sc.name + ": truncation must be positive");
  try {
    AffineSemigroup2D(sc.generators).normal_form();
  } catch (const std::exception& e) {
    throw ScenarioError(sc.name + ": unusable semigroup: " + e.what());
  }

  const std::set<std::string> reserved{"i", "e", sc.notation.first, sc.notation.second, sc.notation.d1,
                                       sc.notation.d2, "D1", "D2"};
  std::set<std::string> names;
  for (const auto& a : sc.actions) {
    if (!names.insert("action:" + a.name).second) throw ScenarioError(sc.name + ": duplicate action " + a.name);
  }
  for (const auto& o : sc.operators) {
    if (reserved.count(o.name)) throw ScenarioError(sc.name + ": operator name " + o.name + " is reserved");
    if (!names.insert("op:" + o.name).second) throw ScenarioError(sc.name + ": duplicate operator " + o.name);
  }
  const SymbolTable table = sc.symbols();

  auto check_ops = [&](const AnalysisRequest& a, const std::vector<std::string>& exprs) {
    for (const auto& x : exprs) {
      try {
        parse_operator(x, sc.notation, table);
      } catch (const std::exception& e) {
        throw ScenarioError(sc.name + "/" + a.id + ": " + x + ": " + e.what());
      }
    }
  };
  for (const auto& a : sc.analyses) {
    if (a.id.empty()) throw ScenarioError(sc.name + ": analysis without id");
    if (!names.insert("analysis:" + a.id).second) throw ScenarioError(sc.name + ": duplicate analysis " + a.id);
    if (!kKinds.count(a.kind)) throw ScenarioError(sc.name + "/" + a.id + ": unknown kind " + a.kind);
    if (kNeedsAction.count(a.kind) || !a.action.empty()) {
      if (a.action.empty()) throw ScenarioError(sc.name + "/" + a.id + ": action required");
      const TorusAction& act = sc.action(a.action);
      for (const auto& w : a.weights) {
        if (w.size() != act.arity()) {
          throw ScenarioError(sc.name + "/" + a.id + ": weight " + to_string(w) + " does not match action " + a.action);
        }
      }
    }
    if (a.kind == "classification" && !kFamilies.count(a.families)) {
      throw ScenarioError(sc.name + "/" + a.id + ": unknown families '" + a.families + "'");
    }
    check_ops(a, a.operators);
    check_ops(a, a.witness);
  }
  for (const auto& g : sc.diagram.generators) {
    if (!table.count(g)) throw ScenarioError(sc.name + ": diagram generator " + g + " is not defined");
  }
}

Scenario resolve_scenario(const std::string& name_or_path) {
  for (const auto& n : builtin_scenario_names()) {
    if (n == name_or_path) return builtin_scenario(n);
  }
  std::ifstream in(name_or_path);
  if (!in) throw ScenarioError("no built-in scenario or readable file named '" + name_or_path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ScenarioError(name_or_path + ": " + e.what());
  }
  return scenario_from_json(j);
}

Weight parse_weight(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (c != '(' && c != ')' && c != ' ') t += c;
  }
  Weight w;
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) throw ScenarioError("bad weight '" + text + "'");
    w.push_back(v);
  }
  if (w.empty() || w.size() > 2 || t.back() == ',') throw ScenarioError("bad weight '" + text + "'");
  return w;
}

}  // namespace invdiff
