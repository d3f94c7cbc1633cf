#pragma once

#include "invdiff/derivations.hpp"
#include "invdiff/operators.hpp"
#include "invdiff/parser.hpp"
#include "invdiff/ring.hpp"
#include "invdiff/torus.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace invdiff {

struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NamedAction {
  std::string name;
  TorusAction action;
};

struct NamedOperator {
  std::string name;
  std::string expr;
};

/// One requested analysis. Which fields matter depends on `kind`:
///   normal_form   operators are expressions; observed: expression -> normal form
///   membership    operators; observed: name -> preserved
///   invariance    operators, action; observed: name -> invariant
///   derivations   window; operators are checked for membership in the solved basis
///   classification window, families (cone | ruled-stated | ruled-corrected)
///   gaps          bound; observed: gap list
///   frobenius     action, weights
///   module        action, operators (generators), witness, weights
///   equivalence   action, operators, witness, weights (all pairs)
///   commutativity operators, order_bound
///   center        action, operators, window, order_bound
///   separation    action, operators (center from their commutant), window, order_bound, weights
///   density       action, operators, weights, word_length
///   annihilator   action, operators, window, order_bound, weights
struct AnalysisRequest {
  std::string id;
  std::string kind;
  std::string claim;
  std::string action;
  std::vector<std::string> operators;
  std::vector<std::string> witness;
  std::vector<Weight> weights;
  Window window = Window::box(2, 2);
  unsigned order_bound = 2;
  unsigned word_length = 4;
  Int bound = 4;
  std::string families;
  /// Asserted claim: a (partial) pattern the observed value must match.
  std::optional<nlohmann::json> expect;
};

struct DiagramSpec {
  std::vector<std::string> generators;
  Int n_max = 3;
  Int m_min = -3;
  Int m_max = 3;
};

struct Scenario {
  std::string name;
  std::vector<Lattice> generators;
  Notation notation;
  std::vector<NamedAction> actions;
  std::vector<NamedOperator> operators;
  std::vector<AnalysisRequest> analyses;
  Int truncation = 10;
  DiagramSpec diagram;

  SemigroupPtr semigroup() const;
  const TorusAction& action(const std::string& name) const;
  /// All definitions, each parsed with the earlier ones in scope.
  SymbolTable symbols() const;
  /// A defined name or an expression over the definitions.
  OreOperator op(const std::string& name_or_expr) const;
};

Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::ordered_json scenario_to_json(const Scenario& sc);

/// Names unique, references defined, operators parse; throws ScenarioError.
void validate(const Scenario& sc);

std::vector<std::string> builtin_scenario_names();
Scenario builtin_scenario(const std::string& name);
/// A built-in name or a path to a JSON scenario file.
Scenario resolve_scenario(const std::string& name_or_path);

/// "2" or "1,-3" (parentheses optional).
Weight parse_weight(const std::string& text);

}  // namespace invdiff
