#include "invdiff/report.hpp"

#include "invdiff/frobenius.hpp"
#include "invdiff/membership.hpp"
#include "invdiff/module_analysis.hpp"

#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace invdiff {

using ojson = nlohmann::ordered_json;

namespace {

std::string str(const GaussRational& z) {
  std::ostringstream os;
  os << z;
  return os.str();
}

std::vector<OreOperator> ops(const Scenario& sc, const std::vector<std::string>& names) {
  std::vector<OreOperator> out;
  for (const auto& n : names) out.push_back(sc.op(n));
  return out;
}

std::size_t components(const ActionGraph& g) {
  std::map<Lattice, Lattice> parent;
  for (const auto& v : g.nodes) parent[v] = v;
  auto find = [&](Lattice x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) parent[find(e.from)] = find(e.to);
  std::set<Lattice> roots;
  for (const auto& v : g.nodes) roots.insert(find(v));
  return roots.size();
}

std::vector<DerivationFamily> families(const std::string& name, const AffineSemigroup2D& s) {
  if (name == "cone") return double_cone_families(s);
  if (name == "ruled-stated") return ruled_surface_families(s);
  if (name == "ruled-corrected") return ruled_surface_families_corrected(s);
  throw ScenarioError("unknown families " + name);
}

bool annihilates(const OreOperator& p, const SemigroupPtr& s, const std::vector<Lattice>& basis) {
  return std::all_of(basis.begin(), basis.end(),
                     [&](const Lattice& b) { return apply(p, RingElement::monomial(s, b)).is_zero(); });
}

// Observed value for one request; internal re-check failures go to `failed`.
ojson observe(const Scenario& sc, const AnalysisRequest& req, Int trunc, std::vector<std::string>& failed) {
  const SemigroupPtr sp = sc.semigroup();
  const AffineSemigroup2D& s = *sp;
  const Notation& nt = sc.notation;
  const SecondMode mode = nt.mode;
  ojson out = ojson::object();
  const std::string& k = req.kind;

  if (k == "normal_form") {
    for (const auto& e : req.operators) out[e] = sc.op(e).str(nt);
  } else if (k == "membership") {
    ojson preserved = ojson::object(), witnesses = ojson::object();
    for (const auto& n : req.operators) {
      const OreOperator p = sc.op(n);
      const auto v = preserves_ring(p, s);
      preserved[n] = v.preserved;
      if (v.witness) {
        const bool confirmed = confirms_leak(p, s, *v.witness);
        if (!confirmed) failed.push_back("leak witness for " + n + " not confirmed");
        witnesses[n] = {{"point", to_string(v.witness->point)},
                        {"shift", to_string(v.witness->shift)},
                        {"value", str(v.witness->value)},
                        {"confirmed", confirmed}};
      }
    }
    out["preserved"] = preserved;
    out["witnesses"] = witnesses;
  } else if (k == "invariance") {
    const TorusAction& act = sc.action(req.action);
    for (const auto& n : req.operators) out[n] = is_invariant(sc.op(n), act);
  } else if (k == "derivations") {
    const auto basis = solve_derivations(s, req.window, mode);
    for (const auto& d : basis.elements) {
      if (!preserves_ring(d, s).preserved) failed.push_back("basis element " + d.str(nt) + " leaks");
    }
    out["dimension"] = basis.dimension();
    ojson contains = ojson::object();
    for (const auto& n : req.operators) contains[n] = basis.spans(sc.op(n));
    out["contains"] = contains;
    bool lowers = false;
    for (const auto& [v, dirs] : basis.by_shift) lowers = lowers || v.n < 0;
    out["lowers_first_degree"] = lowers;
    out["degree_preserving"] = basis.dimension_at({0, 0});
    if (!req.action.empty()) {
      const TorusAction& act = sc.action(req.action);
      const Weight zero(act.arity(), 0);
      std::size_t inv = 0;
      for (const auto& [v, dirs] : basis.by_shift) {
        if (act.weight(v) == zero) inv += dirs.size();
      }
      out["invariant_dimension"] = inv;
    }
  } else if (k == "classification") {
    const auto mism = classification_mismatches(s, req.window, mode, families(req.families, s));
    out["holds"] = mism.empty();
    out["mismatches"] = mism.size();
    ojson shifts = ojson::array();
    for (const auto& m : mism) shifts.push_back(to_string(m.shift));
    out["mismatch_shifts"] = shifts;
    if (!mism.empty()) {
      const auto& m = mism.front();
      out["first_mismatch"] = {{"shift", to_string(m.shift)},
                               {"solved_dimension", m.solved_dimension},
                               {"claimed_dimension", m.claimed_dimension},
                               {"example", m.example.str(nt)},
                               {"missing_from_claim", m.missing_from_claim}};
    }
  } else if (k == "gaps") {
    const auto& nf = s.normal_form();
    std::set<Lattice> gaps;
    for (const auto& ray : nf.gap_rays) {
      for (Int t = 0;; ++t) {
        const Lattice p = ray.at(t);
        const Int size = ray.direction.n == 0 ? std::abs(p.m) : std::abs(p.n);
        if (size > req.bound) break;
        gaps.insert(p);
      }
    }
    for (const auto& p : nf.gap_points) {
      if (std::abs(p.n) <= req.bound) gaps.insert(p);
    }
    ojson list = ojson::array();
    for (const auto& g : gaps) {
      if (s.contains(g) || !nf.in_saturation(g)) failed.push_back("reported gap " + to_string(g) + " is not a gap");
      list.push_back(to_string(g));
    }
    out["gaps"] = list;
  } else if (k == "frobenius") {
    const TorusAction& act = sc.action(req.action);
    out["finite"] = finite_multiplicities(s, act);
    out["rank"] = spectrum_and_rank(s, act, trunc).rank;
    ojson ws = ojson::object();
    for (const auto& w : req.weights) {
      const auto m = multiplicity_space(s, act, w, trunc);
      ws[to_string(w)] = {{"dimension", m.dimension()}, {"complete", m.complete}};
    }
    out["weights"] = ws;
  } else if (k == "module") {
    const TorusAction& act = sc.action(req.action);
    const auto gens = ops(sc, req.operators);
    const auto wit = ops(sc, req.witness);
    for (const auto& w : req.weights) {
      const auto v = analyze_module(s, act, w, gens, wit, trunc);
      const auto g = build_action_graph(gens, multiplicity_space(s, act, w, trunc).basis, s, act);
      if (!verify_verdict(g, v)) failed.push_back("verdict for weight " + to_string(w) + " does not verify");
      ojson x{{"status", v.status()}, {"dimension", g.nodes.size()}, {"summands", components(g)}};
      x["stable"] = v.stable ? ojson(*v.stable) : ojson(nullptr);
      if (!v.closed_subset.empty()) x["closed_subset_size"] = v.closed_subset.size();
      x["note"] = v.note;
      out[to_string(w)] = x;
    }
  } else if (k == "equivalence") {
    const TorusAction& act = sc.action(req.action);
    const auto gens = ops(sc, req.operators);
    const auto wit = ops(sc, req.witness);
    std::vector<std::vector<Lattice>> bases;
    for (const auto& w : req.weights) bases.push_back(multiplicity_space(s, act, w, trunc).basis);
    std::size_t pairs = 0, inequivalent = 0, inconclusive = 0;
    for (std::size_t a = 0; a < bases.size(); ++a) {
      for (std::size_t b = a + 1; b < bases.size(); ++b) {
        ++pairs;
        try {
          if (!are_equivalent(bases[a], bases[b], gens, wit)) ++inequivalent;
        } catch (const Inconclusive&) {
          ++inconclusive;
        }
      }
    }
    out["pairs"] = pairs;
    out["inequivalent"] = inequivalent;
    out["inconclusive"] = inconclusive;
    out["all_inequivalent"] = inequivalent == pairs;
  } else if (k == "commutativity") {
    const auto gens = ops(sc, req.operators);
    const auto r = is_commutative(gens, req.order_bound);
    out["commutative"] = r.commutative;
    if (r.commutative) {
      out["commutator"] = nullptr;
    } else {
      auto word = [&](const std::vector<std::size_t>& letters) {
        ojson names = ojson::array();
        OreOperator p = OreOperator::scalar(mode, 1);
        for (auto l : letters) {
          names.push_back(req.operators[l]);
          p = p * gens[l];
        }
        return std::pair{names, p};
      };
      const auto [na, pa] = word(r.word_a);
      const auto [nb, pb] = word(r.word_b);
      if (commutator(pa, pb) != r.commutator) failed.push_back("reported commutator does not recompute");
      out["word_a"] = na;
      out["word_b"] = nb;
      out["commutator"] = r.commutator.str(nt);
    }
  } else if (k == "center" || k == "separation" || k == "annihilator") {
    const TorusAction& act = sc.action(req.action);
    const auto gens = ops(sc, req.operators);
    const auto z = center_candidates(gens, act, req.window, req.order_bound, mode);
    for (const auto& c : z) {
      const bool central = std::all_of(gens.begin(), gens.end(), [&](const auto& g) { return commutator(c, g).is_zero(); });
      if (!central || !is_invariant(c, act)) failed.push_back(c.str(nt) + " is not an invariant central element");
    }
    if (k == "center") {
      out["dimension"] = z.size();
      out["generators"] = count_center_generators(z, req.order_bound);
      ojson el = ojson::array();
      for (const auto& c : z) el.push_back(c.str(nt));
      out["elements"] = el;
      out["rank"] = spectrum_and_rank(s, act, trunc).rank;
    } else if (k == "separation") {
      const auto r = character_separation(z, req.weights, s, act, trunc);
      out["separated"] = r.separated;
      ojson chars = ojson::object();
      for (const auto& [w, chi] : r.characters) {
        ojson row = ojson::array();
        for (const auto& c : chi) row.push_back(str(c));
        chars[to_string(w)] = row;
      }
      out["center"] = ojson::array();
      for (const auto& c : z) out["center"].push_back(c.str(nt));
      out["characters"] = chars;
    } else {
      for (const auto& w : req.weights) {
        try {
          const OreOperator a = annihilator_witness(s, act, w, z, trunc);
          if (!annihilates(a, sp, multiplicity_space(s, act, w, trunc).basis)) {
            failed.push_back("annihilator for weight " + to_string(w) + " does not annihilate");
          }
          out[to_string(w)] = a.str(nt);
        } catch (const NoWitness&) {
          out[to_string(w)] = "none";
        }
      }
    }
  } else if (k == "density") {
    const TorusAction& act = sc.action(req.action);
    const auto gens = ops(sc, req.operators);
    for (const auto& w : req.weights) {
      const auto d = density_check(s, act, w, gens, req.word_length, trunc);
      out[to_string(w)] = {{"achieved", d.achieved}, {"full", d.full}, {"dense", d.dense()}};
    }
  } else {
    throw ScenarioError("unknown analysis kind " + k);
  }
  return out;
}

}  // namespace

bool matches(const nlohmann::json& pattern, const ojson& observed) {
  if (pattern.is_object()) {
    if (!observed.is_object()) return false;
    for (const auto& [key, val] : pattern.items()) {
      if (!observed.contains(key) || !matches(val, observed.at(key))) return false;
    }
    return true;
  }
  return pattern == nlohmann::json::parse(observed.dump());
}

AnalysisResult run_analysis(const Scenario& sc, const AnalysisRequest& req, Int truncation) {
  AnalysisResult r;
  r.id = req.id;
  r.kind = req.kind;
  r.claim = req.claim;
  r.asserted = req.expect.has_value();
  if (req.expect) r.expected = ojson::parse(req.expect->dump());
  try {
    r.observed = observe(sc, req, truncation, r.failed_checks);
    r.passed = r.failed_checks.empty() && (!req.expect || matches(*req.expect, r.observed));
  } catch (const std::exception& e) {
    r.error = e.what();
    r.passed = false;
  }
  return r;
}

Report run_scenario(const Scenario& sc, std::optional<Int> truncation) {
  validate(sc);
  Report rep;
  rep.scenario = sc.name;
  rep.truncation = truncation.value_or(sc.truncation);
  const SymbolTable table = sc.symbols();
  rep.operators = ojson::object();
  for (const auto& o : sc.operators) {
    const OreOperator& p = table.at(o.name);
    const std::string nf = p.str(sc.notation);
    rep.operators[o.name] = nf;
    if (parse_operator(nf, sc.notation) != p) rep.round_trip = false;
  }
  std::vector<std::future<AnalysisResult>> jobs;
  for (const auto& req : sc.analyses) {
    jobs.push_back(std::async(std::launch::async, [&sc, &req, t = rep.truncation] { return run_analysis(sc, req, t); }));
  }
  for (auto& j : jobs) rep.results.push_back(j.get());
  return rep;
}

bool Report::ok() const {
  return round_trip && std::all_of(results.begin(), results.end(), [](const AnalysisResult& r) {
           return r.passed || (!r.asserted && !r.error);
         });
}

ojson Report::to_json() const {
  ojson j;
  j["scenario"] = scenario;
  j["truncation"] = truncation;
  j["ok"] = ok();
  j["operators"] = operators;
  j["round_trip"] = round_trip;
  j["analyses"] = ojson::array();
  for (const auto& r : results) {
    ojson x;
    x["id"] = r.id;
    x["kind"] = r.kind;
    x["claim"] = r.claim;
    x["asserted"] = r.asserted;
    x["passed"] = r.passed;
    if (r.asserted) x["expected"] = r.expected;
    x["observed"] = r.observed;
    if (!r.failed_checks.empty()) x["failed_checks"] = r.failed_checks;
    if (r.error) x["error"] = *r.error;
    j["analyses"].push_back(std::move(x));
  }
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "scenario " << scenario << " (truncation " << truncation << "): " << (ok() ? "ok" : "FAILED") << "\n";
  os << "operators" << (round_trip ? "" : " (round trip FAILED)") << ":\n";
  for (const auto& [name, nf] : operators.items()) os << "  " << name << " = " << nf.get<std::string>() << "\n";
  for (const auto& r : results) {
    const char* tag = r.error ? "ERROR" : !r.asserted ? "INFO" : r.passed ? "PASS" : "FAIL";
    os << "[" << tag << "] " << r.id << " (" << r.kind << ")";
    if (!r.claim.empty()) os << ": " << r.claim;
    os << "\n";
    if (r.error) {
      os << "    error: " << *r.error << "\n";
      continue;
    }
    os << "    observed: " << r.observed.dump() << "\n";
    if (r.asserted && !r.passed) os << "    expected: " << r.expected.dump() << "\n";
    for (const auto& f : r.failed_checks) os << "    check failed: " << f << "\n";
  }
  return os.str();
}

}  // namespace invdiff
