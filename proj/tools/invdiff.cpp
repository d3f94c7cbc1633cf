// Command-line front end: scenarios, operator arithmetic, membership, derivations, weight spaces,
// module structure and diagrams.

#include "invdiff/diagram.hpp"
#include "invdiff/frobenius.hpp"
#include "invdiff/membership.hpp"
#include "invdiff/module_analysis.hpp"
#include "invdiff/report.hpp"
#include "invdiff/scenario.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace invdiff;

namespace {

std::string ring_str(const RingElement& f, const Notation& names) {
  OreOperator p(names.mode);
  for (const auto& [pt, c] : f.terms()) p.add_term({pt, 0, 0}, c);
  return p.str(names);
}

RingElement as_function(const OreOperator& f, const SemigroupPtr& s) {
  RingElement::Terms terms;
  for (const auto& [k, c] : f.terms()) {
    if (k.order() != 0) throw std::invalid_argument("expected a function, got an operator of order " + std::to_string(k.order()));
    terms[k.coef] = c;
  }
  return RingElement::from_terms(s, std::move(terms));
}

Window parse_window(const std::string& text) {
  const Weight w = parse_weight(text);
  if (w.size() != 2 || w[0] < 0 || w[1] < 0) throw std::invalid_argument("window must be a,b with a, b >= 0");
  return Window::box(w[0], w[1]);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant differential operators on affine semigroup rings"};
  app.require_subcommand(1);
  std::string scenario_name = "cone";
  int exit_code = 0;

  auto scenario_opt = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", scenario_name, "built-in name (cone, ruled, cylinder) or JSON file")
        ->capture_default_str();
  };

  // scenario
  auto* scenario = app.add_subcommand("scenario", "run or inspect scenarios");
  scenario->require_subcommand(1);
  auto* run = scenario->add_subcommand("run", "run every analysis of a scenario");
  std::string run_target;
  std::optional<Int> run_truncation;
  std::string report_format = "text";
  run->add_option("scenario", run_target, "built-in name or JSON file")->required();
  run->add_option("--truncation", run_truncation, "norm bound for infinite weight spaces");
  run->add_option("--report", report_format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  run->callback([&] {
    const Report rep = run_scenario(resolve_scenario(run_target), run_truncation);
    std::cout << (report_format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_text());
    exit_code = rep.ok() ? 0 : 1;
  });
  auto* list = scenario->add_subcommand("list", "list built-in scenarios");
  list->callback([] {
    for (const auto& n : builtin_scenario_names()) std::cout << n << "\n";
  });
  auto* show = scenario->add_subcommand("show", "print a scenario in the JSON file format");
  std::string show_target;
  show->add_option("scenario", show_target)->required();
  show->callback([&] { std::cout << scenario_to_json(resolve_scenario(show_target)).dump(2) << "\n"; });

  // ops
  auto* opsc = app.add_subcommand("ops", "operator arithmetic in normal form");
  opsc->require_subcommand(1);
  std::string lhs, rhs;
  for (const char* name : {"mul", "commutator", "apply"}) {
    auto* cmd = opsc->add_subcommand(name, std::string(name) == "apply" ? "apply an operator to a function"
                                                                       : std::string(name) + " of two operators");
    cmd->add_option("lhs", lhs)->required();
    cmd->add_option("rhs", rhs)->required();
    scenario_opt(cmd);
    cmd->callback([&, name] {
      const Scenario sc = resolve_scenario(scenario_name);
      const OreOperator a = sc.op(lhs);
      const OreOperator b = sc.op(rhs);
      const std::string what = name;
      if (what == "mul") {
        std::cout << (a * b).str(sc.notation) << "\n";
      } else if (what == "commutator") {
        std::cout << commutator(a, b).str(sc.notation) << "\n";
      } else {
        const RingElement f = apply(a, as_function(b, sc.semigroup()));
        std::cout << ring_str(f, sc.notation) << (f.support_in_semigroup() ? "" : "  (leaves the ring)") << "\n";
      }
    });
  }

  // check membership
  auto* check = app.add_subcommand("check", "decision procedures");
  check->require_subcommand(1);
  auto* membership = check->add_subcommand("membership", "does the operator preserve the ring?");
  std::string member_expr;
  membership->add_option("expr", member_expr)->required();
  scenario_opt(membership);
  membership->callback([&] {
    const Scenario sc = resolve_scenario(scenario_name);
    const OreOperator p = sc.op(member_expr);
    const auto v = preserves_ring(p, *sc.semigroup());
    std::cout << p.str(sc.notation) << ": " << (v.preserved ? "preserves" : "does not preserve") << " the ring\n";
    if (v.witness) {
      std::cout << "  witness: monomial " << to_string(v.witness->point) << " -> " << to_string(v.witness->point + v.witness->shift)
                << " with coefficient " << v.witness->value
                << (confirms_leak(p, *sc.semigroup(), *v.witness) ? " (confirmed)" : " (NOT confirmed)") << "\n";
    }
  });

  // derivations solve
  auto* deriv = app.add_subcommand("derivations", "derivations of the ring");
  deriv->require_subcommand(1);
  auto* solve = deriv->add_subcommand("solve", "basis of the derivations with coefficients in a window");
  std::string window_text = "2,2";
  solve->add_option("--window", window_text, "a,b bounds |n| <= a, |m| <= b")->capture_default_str();
  scenario_opt(solve);
  solve->callback([&] {
    const Scenario sc = resolve_scenario(scenario_name);
    const auto basis = solve_derivations(*sc.semigroup(), parse_window(window_text), sc.notation.mode);
    std::cout << "dimension " << basis.dimension() << "\n";
    for (const auto& d : basis.elements) std::cout << "  " << d.str(sc.notation) << "\n";
  });

  // frobenius decompose
  auto* frob = app.add_subcommand("frobenius", "weight decomposition");
  frob->require_subcommand(1);
  auto* decompose = frob->add_subcommand("decompose", "weight spaces within a bound");
  std::string action_name;
  Int bound = 3;
  std::optional<Int> truncation;
  decompose->add_option("--action", action_name)->required();
  decompose->add_option("--bound", bound, "|weight| <= bound")->capture_default_str();
  decompose->add_option("--truncation", truncation);
  scenario_opt(decompose);
  decompose->callback([&] {
    const Scenario sc = resolve_scenario(scenario_name);
    const auto s = sc.semigroup();
    const TorusAction& act = sc.action(action_name);
    const Int t = truncation.value_or(sc.truncation);
    const auto spec = spectrum_and_rank(*s, act, t);
    std::cout << "finite multiplicities: " << (finite_multiplicities(*s, act) ? "yes" : "no") << ", rank " << spec.rank
              << "\n";
    std::vector<Weight> weights;
    for (Int a = -bound; a <= bound; ++a) {
      if (act.arity() == 1) {
        weights.push_back({a});
        continue;
      }
      for (Int b = -bound; b <= bound; ++b) weights.push_back({a, b});
    }
    for (const auto& w : weights) {
      const auto m = multiplicity_space(*s, act, w, t);
      if (m.basis.empty()) continue;
      std::cout << "  " << to_string(w) << ": dimension " << m.dimension() << (m.complete ? "" : "+ (truncated)") << "\n";
    }
  });

  // module analyze
  auto* module = app.add_subcommand("module", "module structure of weight spaces");
  module->require_subcommand(1);
  auto* analyze = module->add_subcommand("analyze", "irreducibility and decomposability");
  std::vector<std::string> weight_texts, gens, witness;
  analyze->add_option("--action", action_name)->required();
  analyze->add_option("--weights", weight_texts, "weights such as 2 or 1,-3")->required();
  analyze->add_option("--gens", gens, "generator names or expressions")->required();
  analyze->add_option("--witness", witness, "diagonal witnesses (default: the first generator)");
  analyze->add_option("--truncation", truncation);
  scenario_opt(analyze);
  analyze->callback([&] {
    const Scenario sc = resolve_scenario(scenario_name);
    const auto s = sc.semigroup();
    const TorusAction& act = sc.action(action_name);
    std::vector<OreOperator> g, w;
    for (const auto& x : gens) g.push_back(sc.op(x));
    for (const auto& x : witness) w.push_back(sc.op(x));
    if (w.empty()) w.push_back(g.front());
    for (const auto& text : weight_texts) {
      const Weight lambda = parse_weight(text);
      const auto v = analyze_module(*s, act, lambda, g, w, truncation.value_or(sc.truncation));
      std::cout << to_string(lambda) << ": " << v.status();
      if (!v.note.empty()) std::cout << " (" << v.note << ")";
      std::cout << "\n";
      if (!v.closed_subset.empty()) {
        std::cout << "  invariant subspace spanned by " << v.closed_subset.size() << " monomials, from "
                  << to_string(v.closed_subset.front()) << "\n";
      }
    }
  });

  // diagram emit
  auto* diagram = app.add_subcommand("diagram", "coordinate ring diagrams");
  diagram->require_subcommand(1);
  auto* emit = diagram->add_subcommand("emit", "emit a diagram of the ring and generator actions");
  std::string format = "dot";
  std::vector<std::string> diagram_gens;
  std::optional<Int> n_max, m_min, m_max;
  std::string diagram_action;
  emit->add_option("--format", format)->check(CLI::IsMember({"dot"}))->capture_default_str();
  emit->add_option("--gens", diagram_gens, "generator names (default: the scenario's diagram generators)");
  emit->add_option("--n-max", n_max);
  emit->add_option("--m-min", m_min);
  emit->add_option("--m-max", m_max);
  emit->add_option("--action", diagram_action, "action used for node weights (default: the first)");
  scenario_opt(emit);
  emit->callback([&] {
    const Scenario sc = resolve_scenario(scenario_name);
    DiagramBounds b{0, n_max.value_or(sc.diagram.n_max), m_min.value_or(sc.diagram.m_min), m_max.value_or(sc.diagram.m_max)};
    NamedOperators named;
    for (const auto& x : emit->count("--gens") ? diagram_gens : sc.diagram.generators) named.emplace_back(x, sc.op(x));
    const TorusAction& act = diagram_action.empty() ? sc.actions.front().action : sc.action(diagram_action);
    std::cout << emit_diagram(*sc.semigroup(), act, named, b, sc.notation, sc.name);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
