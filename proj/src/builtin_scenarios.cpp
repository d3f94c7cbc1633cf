#include "invdiff/scenario.hpp"

#include <map>

namespace invdiff {
namespace {

// Built-ins use the same JSON schema as scenario files, so loading them exercises the parser.

const char* const kCone = R"json({
  "name": "cone",
  "semigroup": [[1, 0], [1, 1], [1, -1]],
  "coordinates": {"mode": "angular", "first": "u", "second": "e", "d1": "Du", "d2": "Dt"},
  "truncation": 10,
  "actions": [
    {"name": "scaling", "weights": [[1, 0]]},
    {"name": "rotation", "weights": [[0, 1]]},
    {"name": "trivial", "weights": [[0, 0]]}
  ],
  "operators": [
    {"name": "R", "expr": "u*e(1)*Du + i*e(1)*Dt"},
    {"name": "S", "expr": "u*e(-1)*Du - i*e(-1)*Dt"},
    {"name": "E", "expr": "u*Du"},
    {"name": "U", "expr": "u"},
    {"name": "D", "expr": "u^-1*(u*Du + i*Dt)*(u*Du - i*Dt)"}
  ],
  "diagram": {"generators": ["R", "S", "U", "D"], "n_max": 3, "m_min": -3, "m_max": 3},
  "analyses": [
    {"id": "identities", "kind": "normal_form",
     "claim": "normal forms of RS, SR, [R,S], D and a Leibniz reordering",
     "operators": ["R*S", "S*R", "R*S - S*R", "D", "Du*u"],
     "expect": {"R*S": "u^2*Du^2 + 2*u*Du + Dt^2 - i*Dt", "S*R": "u^2*Du^2 + 2*u*Du + Dt^2 + i*Dt",
                "R*S - S*R": "-2*i*Dt", "D": "u*Du^2 + Du + u^-1*Dt^2", "Du*u": "u*Du + 1"}},
    {"id": "membership", "kind": "membership",
     "claim": "R, S, u*Du, Dt and D preserve the ring; Du does not",
     "operators": ["R", "S", "E", "Dt", "D", "Du"],
     "expect": {"preserved": {"R": true, "S": true, "E": true, "Dt": true, "D": true, "Du": false}}},
    {"id": "invariance-scaling", "kind": "invariance", "action": "scaling",
     "claim": "R, S, u*Du, Dt are scaling-invariant",
     "operators": ["R", "S", "E", "Dt"],
     "expect": {"R": true, "S": true, "E": true, "Dt": true}},
    {"id": "invariance-rotation", "kind": "invariance", "action": "rotation",
     "claim": "u, u*Du, Dt, D are rotation-invariant; R is not",
     "operators": ["U", "E", "Dt", "D", "R"],
     "expect": {"U": true, "E": true, "Dt": true, "D": true, "R": false}},
    {"id": "derivations", "kind": "derivations", "window": [2, 2],
     "claim": "u*Du, Dt, R, S and their ring multiples are derivations; Du and e(1)*Dt are not; nothing lowers the u-degree",
     "operators": ["E", "Dt", "R", "S", "U*R", "e(-1)*U*E", "Du", "e(1)*Dt"],
     "expect": {"contains": {"E": true, "Dt": true, "R": true, "S": true, "U*R": true, "e(-1)*U*E": true,
                             "Du": false, "e(1)*Dt": false},
                "lowers_first_degree": false}},
    {"id": "classification", "kind": "classification", "families": "cone", "window": [4, 4],
     "claim": "the three derivation families describe every derivation in the window",
     "expect": {"holds": true}},
    {"id": "columns", "kind": "frobenius", "action": "scaling", "weight_range": [0, 8],
     "claim": "scaling weight spaces are the columns, of dimension 2n+1",
     "expect": {"finite": true, "rank": 1,
                "weights": {"0": {"dimension": 1, "complete": true}, "1": {"dimension": 3, "complete": true},
                            "2": {"dimension": 5, "complete": true}, "3": {"dimension": 7, "complete": true},
                            "4": {"dimension": 9, "complete": true}, "5": {"dimension": 11, "complete": true},
                            "6": {"dimension": 13, "complete": true}, "7": {"dimension": 15, "complete": true},
                            "8": {"dimension": 17, "complete": true}}}},
    {"id": "rows", "kind": "frobenius", "action": "rotation", "weight_range": [-3, 3],
     "claim": "rotation weight spaces are the rows, infinite-dimensional",
     "expect": {"finite": false, "rank": 1}},
    {"id": "scaling-irreducible", "kind": "module", "action": "scaling", "operators": ["R", "S"],
     "witness": ["Dt"], "weight_range": [0, 6],
     "claim": "columns are irreducible under the scaling-invariant operators",
     "expect": {"0": {"status": "irreducible", "stable": true}, "1": {"status": "irreducible", "stable": true},
                "2": {"status": "irreducible", "stable": true}, "3": {"status": "irreducible", "stable": true},
                "4": {"status": "irreducible", "stable": true}, "5": {"status": "irreducible", "stable": true},
                "6": {"status": "irreducible", "stable": true}}},
    {"id": "scaling-noncommutative", "kind": "commutativity", "operators": ["R", "S", "E", "Dt"],
     "claim": "the scaling-invariant operators do not commute",
     "expect": {"commutative": false, "commutator": "-2*i*Dt"}},
    {"id": "scaling-inequivalent", "kind": "equivalence", "action": "scaling", "operators": ["R", "S", "E", "Dt"],
     "witness": ["E"], "weight_range": [0, 6],
     "claim": "distinct columns are inequivalent",
     "expect": {"all_inequivalent": true}},
    {"id": "rotation-indecomposable", "kind": "module", "action": "rotation", "operators": ["U", "E", "Dt"],
     "witness": ["E"], "weight_range": [-3, 3],
     "claim": "rows are reducible but indecomposable under u, u*Du, Dt",
     "expect": {"-3": {"status": "reducible, indecomposable"}, "-2": {"status": "reducible, indecomposable"},
                "-1": {"status": "reducible, indecomposable"}, "0": {"status": "reducible, indecomposable"},
                "1": {"status": "reducible, indecomposable"}, "2": {"status": "reducible, indecomposable"},
                "3": {"status": "reducible, indecomposable"}}},
    {"id": "rotation-inequivalent", "kind": "equivalence", "action": "rotation", "operators": ["U", "E", "Dt"],
     "witness": ["Dt"], "weight_range": [-3, 3],
     "claim": "distinct rows are inequivalent (Dt eigenvalues differ)",
     "expect": {"all_inequivalent": true}},
    {"id": "rotation-noncommutative", "kind": "commutativity", "operators": ["U", "E", "Dt"],
     "claim": "u, u*Du, Dt do not commute",
     "expect": {"commutative": false}},
    {"id": "rotation-irreducible-with-D", "kind": "module", "action": "rotation", "operators": ["U", "E", "Dt", "D"],
     "witness": ["E"], "weight_range": [-3, 3],
     "claim": "rows become irreducible once D is added",
     "expect": {"-3": {"status": "irreducible"}, "-2": {"status": "irreducible"}, "-1": {"status": "irreducible"},
                "0": {"status": "irreducible"}, "1": {"status": "irreducible"}, "2": {"status": "irreducible"},
                "3": {"status": "irreducible"}}},
    {"id": "rotation-with-D-noncommutative", "kind": "commutativity", "operators": ["U", "E", "Dt", "D"],
     "claim": "u, u*Du, Dt, D do not commute",
     "expect": {"commutative": false}},
    {"id": "center-scaling", "kind": "center", "action": "scaling", "operators": ["R", "S", "E", "Dt"],
     "window": [2, 2], "order_bound": 2,
     "claim": "the truncated center is generated by one element, matching the rank",
     "expect": {"generators": 1, "rank": 1}},
    {"id": "center-rotation", "kind": "center", "action": "rotation", "operators": ["U", "E", "Dt"],
     "window": [2, 2], "order_bound": 2,
     "claim": "the truncated center is generated by one element, matching the rank",
     "expect": {"generators": 1, "rank": 1}},
    {"id": "characters-scaling", "kind": "separation", "action": "scaling", "operators": ["R", "S", "E", "Dt"],
     "window": [2, 2], "order_bound": 2, "weight_range": [0, 6],
     "claim": "central characters separate the columns",
     "expect": {"separated": true}},
    {"id": "characters-rotation", "kind": "separation", "action": "rotation", "operators": ["U", "E", "Dt"],
     "window": [2, 2], "order_bound": 2, "weight_range": [-4, 4],
     "claim": "central characters separate the rows",
     "expect": {"separated": true}},
    {"id": "density-scaling", "kind": "density", "action": "scaling", "operators": ["R", "S", "E", "Dt"],
     "weight_range": [0, 3], "word_length": 8,
     "claim": "the invariant operators act densely on each column",
     "expect": {"0": {"dense": true}, "1": {"dense": true}, "2": {"dense": true}, "3": {"dense": true}}},
    {"id": "annihilator-scaling", "kind": "annihilator", "action": "scaling", "operators": ["R", "S", "E", "Dt"],
     "window": [2, 2], "order_bound": 2, "weight_range": [1, 3],
     "claim": "a central operator annihilates each nonzero column",
     "expect": {"1": "u*Du - 1", "2": "u*Du - 2", "3": "u*Du - 3"}},
    {"id": "annihilator-rotation", "kind": "annihilator", "action": "rotation", "operators": ["U", "E", "Dt"],
     "window": [2, 2], "order_bound": 2, "weights": [-2, -1, 1, 2],
     "claim": "a central operator annihilates each nonzero row",
     "expect": {"-2": "Dt + 2*i", "-1": "Dt + i", "1": "Dt - i", "2": "Dt - 2*i"}},
    {"id": "annihilator-trivial", "kind": "annihilator", "action": "trivial", "operators": ["R", "S", "E", "Dt"],
     "window": [1, 1], "order_bound": 1, "weights": [0],
     "claim": "the trivial action has no annihilating central operator",
     "expect": {"0": "none"}}
  ]
})json";

const char* const kRuled = R"json({
  "name": "ruled",
  "semigroup": [[1, 0], [1, -1], [1, 2]],
  "coordinates": {"mode": "multiplicative", "first": "r", "second": "s", "d1": "Dr", "d2": "Ds"},
  "truncation": 12,
  "actions": [
    {"name": "scaling", "weights": [[1, 0]]},
    {"name": "s", "weights": [[0, 1]]},
    {"name": "torus", "weights": [[1, 0], [0, 1]]}
  ],
  "operators": [
    {"name": "Er", "expr": "r*Dr"},
    {"name": "Es", "expr": "s*Ds"},
    {"name": "D", "expr": "r^2*s^-2*Dr + r*s^-1*Ds"},
    {"name": "T", "expr": "s^-1*(2*r*Dr - s*Ds)*(r*Dr + s*Ds)"},
    {"name": "M", "expr": "r"},
    {"name": "X", "expr": "r*s^2"},
    {"name": "Y", "expr": "r*s^-1"}
  ],
  "diagram": {"generators": ["D", "M", "X", "Y"], "n_max": 4, "m_min": -5, "m_max": 6},
  "analyses": [
    {"id": "identities", "kind": "normal_form", "operators": ["D"],
     "claim": "normal form of the ruled derivation D",
     "expect": {"D": "r^2*s^-2*Dr + r*s^-1*Ds"}},
    {"id": "membership", "kind": "membership",
     "claim": "D, T, r*Dr, s*Ds preserve the ring; Dr and Ds do not",
     "operators": ["D", "T", "Er", "Es", "Dr", "Ds"],
     "expect": {"preserved": {"D": true, "T": true, "Er": true, "Es": true, "Dr": false, "Ds": false}}},
    {"id": "invariance-scaling", "kind": "invariance", "action": "scaling",
     "claim": "r*Dr, s*Ds and T are scaling-invariant; D is not",
     "operators": ["Er", "Es", "T", "D"],
     "expect": {"Er": true, "Es": true, "T": true, "D": false}},
    {"id": "derivations", "kind": "derivations", "window": [3, 3], "action": "scaling",
     "claim": "r*Dr, s*Ds, D are derivations; only r*Dr, s*Ds keep the degree; nothing lowers the r-degree",
     "operators": ["Er", "Es", "D", "Dr"],
     "expect": {"contains": {"Er": true, "Es": true, "D": true, "Dr": false}, "lowers_first_degree": false,
                "degree_preserving": 2, "invariant_dimension": 2}},
    {"id": "classification-stated", "kind": "classification", "families": "ruled-stated", "window": [4, 4],
     "claim": "derivation families in their stated form (reported, not asserted)"},
    {"id": "classification-corrected", "kind": "classification", "families": "ruled-corrected", "window": [4, 4],
     "claim": "corrected derivation families describe every derivation in the window",
     "expect": {"holds": true}},
    {"id": "gaps", "kind": "gaps", "bound": 6,
     "claim": "the gaps of the semigroup are the points (k, 2k-1)",
     "expect": {"gaps": ["(1,1)", "(2,3)", "(3,5)", "(4,7)", "(5,9)", "(6,11)"]}},
    {"id": "columns", "kind": "frobenius", "action": "scaling", "weight_range": [1, 6],
     "claim": "scaling weight spaces have dimension 3n",
     "expect": {"finite": true, "rank": 1,
                "weights": {"1": {"dimension": 3, "complete": true}, "2": {"dimension": 6, "complete": true},
                            "3": {"dimension": 9, "complete": true}, "4": {"dimension": 12, "complete": true},
                            "5": {"dimension": 15, "complete": true}, "6": {"dimension": 18, "complete": true}}}},
    {"id": "scaling-commutative", "kind": "commutativity", "operators": ["Er", "Es"], "order_bound": 6,
     "claim": "the scaling-invariant algebra generated by r*Dr, s*Ds is commutative",
     "expect": {"commutative": true}},
    {"id": "scaling-one-dimensional", "kind": "module", "action": "scaling", "operators": ["Er", "Es"],
     "witness": ["Es"], "weight_range": [1, 4],
     "claim": "columns split into one-dimensional summands under r*Dr, s*Ds",
     "expect": {"1": {"status": "decomposable", "summands": 3}, "2": {"status": "decomposable", "summands": 6},
                "3": {"status": "decomposable", "summands": 9}, "4": {"status": "decomposable", "summands": 12}}},
    {"id": "s-indecomposable", "kind": "module", "action": "s", "operators": ["M", "Er", "Es"],
     "witness": ["Er"], "weight_range": [-2, 3],
     "claim": "rows are neither irreducible nor decomposable under r, r*Dr, s*Ds",
     "expect": {"-2": {"status": "reducible, indecomposable"}, "-1": {"status": "reducible, indecomposable"},
                "0": {"status": "reducible, indecomposable"}, "1": {"status": "reducible, indecomposable"},
                "2": {"status": "reducible, indecomposable"}, "3": {"status": "reducible, indecomposable"}}},
    {"id": "s-inequivalent", "kind": "equivalence", "action": "s", "operators": ["M", "Er", "Es"],
     "witness": ["Es"], "weight_range": [-2, 3],
     "claim": "distinct rows are inequivalent (s*Ds eigenvalues differ)",
     "expect": {"all_inequivalent": true}},
    {"id": "T-noncommuting", "kind": "commutativity", "operators": ["Es", "T"],
     "claim": "the invariant operator T does not commute with s*Ds",
     "expect": {"commutative": false}}
  ]
})json";

const char* const kCylinder = R"json({
  "name": "cylinder",
  "semigroup": [[1, 0], [0, 1], [0, -1]],
  "coordinates": {"mode": "angular", "first": "u", "second": "e", "d1": "Du", "d2": "Dt"},
  "truncation": 10,
  "actions": [
    {"name": "rotation", "weights": [[0, 1]]},
    {"name": "torus", "weights": [[1, 0], [0, 1]]}
  ],
  "operators": [
    {"name": "U", "expr": "u"},
    {"name": "E", "expr": "u*Du"}
  ],
  "diagram": {"generators": ["U"], "n_max": 3, "m_min": -3, "m_max": 3},
  "analyses": [
    {"id": "membership", "kind": "membership",
     "claim": "Du preserves the ring of the cylinder",
     "operators": ["Du", "E", "Dt"],
     "expect": {"preserved": {"Du": true, "E": true, "Dt": true}}},
    {"id": "invariance", "kind": "invariance", "action": "rotation",
     "claim": "Du is rotation-invariant",
     "operators": ["Du", "U", "Dt"],
     "expect": {"Du": true, "U": true, "Dt": true}},
    {"id": "derivations", "kind": "derivations", "window": [2, 2],
     "claim": "Du is a derivation of the cylinder",
     "operators": ["Du", "E", "Dt", "e(1)*Du"],
     "expect": {"contains": {"Du": true, "E": true, "Dt": true, "e(1)*Du": true}, "lowers_first_degree": true}},
    {"id": "rows-irreducible", "kind": "module", "action": "rotation", "operators": ["U", "Du", "Dt"],
     "witness": ["E"], "weight_range": [-3, 3],
     "claim": "rows are irreducible once Du is available",
     "expect": {"-3": {"status": "irreducible"}, "-2": {"status": "irreducible"}, "-1": {"status": "irreducible"},
                "0": {"status": "irreducible"}, "1": {"status": "irreducible"}, "2": {"status": "irreducible"},
                "3": {"status": "irreducible"}}},
    {"id": "rows-without-Du", "kind": "module", "action": "rotation", "operators": ["U", "E", "Dt"],
     "witness": ["E"], "weight_range": [-1, 1],
     "claim": "without Du the rows are reducible, as on the cone",
     "expect": {"-1": {"status": "reducible, indecomposable"}, "0": {"status": "reducible, indecomposable"},
                "1": {"status": "reducible, indecomposable"}}},
    {"id": "torus-weights", "kind": "frobenius", "action": "torus", "weights": [[0, 0], [1, -1], [2, 3]],
     "claim": "the torus weight spaces are one-dimensional",
     "expect": {"weights": {"(0,0)": {"dimension": 1}, "(1,-1)": {"dimension": 1}, "(2,3)": {"dimension": 1}}}},
    {"id": "torus-invariants-commutative", "kind": "commutativity", "operators": ["E", "Dt"], "order_bound": 4,
     "claim": "the torus-invariant operators commute",
     "expect": {"commutative": true}}
  ]
})json";

const std::map<std::string, const char*>& builtins() {
  static const std::map<std::string, const char*> m{{"cone", kCone}, {"ruled", kRuled}, {"cylinder", kCylinder}};
  return m;
}

}  // namespace

std::vector<std::string> builtin_scenario_names() { return {"cone", "ruled", "cylinder"}; }

Scenario builtin_scenario(const std::string& name) {
  const auto it = builtins().find(name);
  if (it == builtins().end()) throw ScenarioError("unknown built-in scenario '" + name + "'");
  return scenario_from_json(nlohmann::json::parse(it->second));
}

}  // namespace invdiff
