#include "doctest.h"
#include "invdiff/diagram.hpp"
#include "invdiff/report.hpp"
#include "invdiff/scenario.hpp"

#include <set>

using namespace invdiff;
using nlohmann::json;

namespace {

std::set<Lattice> as_set(const std::vector<Lattice>& v) { return {v.begin(), v.end()}; }

NamedOperators named(const Scenario& sc, const std::vector<std::string>& names) {
  NamedOperators out;
  for (const auto& n : names) out.emplace_back(n, sc.op(n));
  return out;
}

const AnalysisResult& result(const Report& r, const std::string& id) {
  for (const auto& x : r.results) {
    if (x.id == id) return x;
  }
  throw std::runtime_error("no result " + id);
}

json minimal() {
  return json::parse(R"({
    "name": "mini",
    "semigroup": [[1, 0], [1, 1], [1, -1]],
    "coordinates": {"mode": "angular"},
    "actions": [{"name": "scaling", "weights": [[1, 0]]}, {"name": "rotation", "weights": [[0, 1]]}],
    "operators": [{"name": "R", "expr": "u*e(1)*Du + i*e(1)*Dt"}],
    "analyses": [{"id": "m", "kind": "membership", "operators": ["R", "Du"],
                  "expect": {"preserved": {"R": true, "Du": false}}}]
  })");
}

}  // namespace

TEST_CASE("parser examples in scenario notation") {
  const Scenario cone = builtin_scenario("cone");
  CHECK(cone.op("u*e(1)*Du + i*e(1)*Dt") == cone.op("R"));
  const OreOperator d = cone.op("u^-1*(u*Du + i*Dt)*(u*Du - i*Dt)");
  const auto dec = d.shift_decomposition();
  REQUIRE(dec.size() == 1);
  CHECK(dec.begin()->first == Lattice{-1, 0});
  CHECK(cone.op("Du*u").str() == "u*Du + 1");
  CHECK(cone.op("D1*D2") == cone.op("Du*Dt"));
  CHECK_THROWS_AS(cone.op("R*Q"), UnknownSymbol);
}

TEST_CASE("built-in scenarios load and round-trip their operators") {
  for (const auto& name : builtin_scenario_names()) {
    const Scenario sc = builtin_scenario(name);
    CHECK(sc.name == name);
    CHECK_NOTHROW(validate(sc));
    for (const auto& [n, op] : sc.symbols()) CHECK(parse_operator(op.str(sc.notation), sc.notation) == op);
    // the file format reproduces the scenario
    const Scenario again = scenario_from_json(json::parse(scenario_to_json(sc).dump()));
    CHECK(scenario_to_json(again).dump() == scenario_to_json(sc).dump());
  }
  CHECK_THROWS_AS(builtin_scenario("torus"), ScenarioError);
  CHECK_THROWS_AS(resolve_scenario("/nonexistent/scenario.json"), ScenarioError);
}

TEST_CASE("built-in runs assert their claims") {
  for (const auto& name : builtin_scenario_names()) {
    const Report r = run_scenario(builtin_scenario(name));
    CHECK_MESSAGE(r.ok(), r.to_text());
    CHECK(r.round_trip);
    for (const auto& x : r.results) {
      CHECK_MESSAGE(!x.error, x.id);
      CHECK(x.failed_checks.empty());
    }
  }
  const Report cone = run_scenario(builtin_scenario("cone"));
  CHECK(result(cone, "identities").observed["R*S - S*R"] == "-2*i*Dt");
  CHECK(result(cone, "membership").observed["witnesses"]["Du"]["confirmed"] == true);

  const Report ruled = run_scenario(builtin_scenario("ruled"));
  const auto& stated = result(ruled, "classification-stated");
  CHECK_FALSE(stated.asserted);
  CHECK(stated.observed["holds"] == false);
  CHECK(stated.observed["first_mismatch"]["shift"] == "(1,1)");
  CHECK(result(ruled, "classification-corrected").passed);
}

TEST_CASE("reports are deterministic") {
  const Scenario sc = builtin_scenario("cone");
  const std::string a = run_scenario(sc).to_json().dump();
  const std::string b = run_scenario(sc).to_json().dump();
  CHECK(a == b);
  CHECK(run_scenario(sc).to_text() == run_scenario(sc).to_text());
  // key order follows the request, not alphabetical order
  const auto j = run_scenario(sc).to_json();
  CHECK(j.begin().key() == "scenario");
  CHECK(j["analyses"][0]["id"] == "identities");
}

TEST_CASE("violated claims and errors are reported per analysis") {
  json j = minimal();
  j["analyses"].push_back({{"id", "wrong"},
                           {"kind", "membership"},
                           {"operators", {"Du"}},
                           {"expect", {{"preserved", {{"Du", true}}}}}});
  j["analyses"].push_back(
      {{"id", "broken"}, {"kind", "density"}, {"action", "rotation"}, {"operators", {"u"}}, {"weights", {1}},
       {"expect", {{"1", {{"dense", true}}}}}});
  j["analyses"].push_back({{"id", "info"}, {"kind", "invariance"}, {"action", "scaling"}, {"operators", {"R"}}});
  const Report r = run_scenario(scenario_from_json(j));
  CHECK_FALSE(r.ok());
  CHECK(result(r, "m").passed);
  CHECK_FALSE(result(r, "wrong").passed);
  CHECK_FALSE(result(r, "wrong").error);
  CHECK(result(r, "broken").error);
  CHECK_FALSE(result(r, "info").asserted);
  CHECK(result(r, "info").observed["R"] == true);
  CHECK(r.to_text().find("[FAIL] wrong") != std::string::npos);
  CHECK(r.to_text().find("[ERROR] broken") != std::string::npos);
  CHECK(r.to_text().find("[INFO] info") != std::string::npos);

  // an unasserted error does not flip the verdict on its own... but is never a pass
  json k = minimal();
  k["analyses"].push_back({{"id", "broken"}, {"kind", "density"}, {"action", "rotation"}, {"operators", {"u"}},
                           {"weights", {1}}});
  const Report r2 = run_scenario(scenario_from_json(k));
  CHECK_FALSE(result(r2, "broken").passed);
  CHECK_FALSE(r2.ok());
}

TEST_CASE("scenario validation") {
  CHECK_NOTHROW(scenario_from_json(minimal()));
  auto bad = [](auto edit) {
    json j = minimal();
    edit(j);
    return j;
  };
  CHECK_THROWS_AS(scenario_from_json(bad([](json& j) { j["operators"].push_back({{"name", "R"}, {"expr", "u"}}); })),
                  ScenarioError);
  CHECK_THROWS_AS(scenario_from_json(bad([](json& j) { j["operators"].push_back({{"name", "u"}, {"expr", "u"}}); })),
                  ScenarioError);
  CHECK_THROWS_AS(scenario_from_json(bad([](json& j) { j["operators"].push_back({{"name", "Q"}, {"expr", "u*"}}); })),
                  ScenarioError);
  CHECK_THROWS_AS(scenario_from_json(bad([](json& j) { j["analyses"][0]["operators"].push_back("Nope"); })),
                  ScenarioError);
  CHECK_THROWS_AS(scenario_from_json(bad([](json& j) { j["analyses"][0]["kind"] = "magic"; })), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json(bad([](json& j) { j["analyses"].push_back(j["analyses"][0]); })), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json(bad([](json& j) {
                    j["analyses"].push_back({{"id", "f"}, {"kind", "frobenius"}, {"action", "none"}});
                  })),
                  ScenarioError);
  CHECK_THROWS_AS(scenario_from_json(bad([](json& j) {
                    j["analyses"].push_back({{"id", "f"}, {"kind", "frobenius"}, {"action", "scaling"},
                                             {"weights", {{1, 2}}}});
                  })),
                  ScenarioError);
  CHECK_THROWS_AS(scenario_from_json(bad([](json& j) { j["actions"].push_back(j["actions"][0]); })), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json(bad([](json& j) { j["semigroup"] = {{1, 0}, {-1, 0}}; })), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json(bad([](json& j) { j["coordinates"]["mode"] = "polar"; })), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json(bad([](json& j) { j.erase("semigroup"); })), ScenarioError);
  CHECK_THROWS_AS(scenario_from_json(bad([](json& j) { j["diagram"] = {{"generators", {"Z"}}}; })), ScenarioError);
}

TEST_CASE("expectation matching") {
  const nlohmann::ordered_json obs = {{"a", 1}, {"b", {{"c", true}, {"d", "x"}}}, {"e", {1, 2}}};
  CHECK(matches(json::object(), obs));
  CHECK(matches(json{{"a", 1}}, obs));
  CHECK(matches(json{{"b", {{"c", true}}}}, obs));
  CHECK_FALSE(matches(json{{"b", {{"c", false}}}}, obs));
  CHECK_FALSE(matches(json{{"z", 1}}, obs));
  CHECK(matches(json{{"e", {1, 2}}}, obs));
  CHECK_FALSE(matches(json{{"e", {1}}}, obs));
  CHECK_FALSE(matches(json{{"a", {{"x", 1}}}}, obs));
}

TEST_CASE("weights from text") {
  CHECK(parse_weight("2") == Weight{2});
  CHECK(parse_weight("-3") == Weight{-3});
  CHECK(parse_weight("1,-3") == Weight{1, -3});
  CHECK(parse_weight("(1,-3)") == Weight{1, -3});
  CHECK_THROWS_AS(parse_weight(""), ScenarioError);
  CHECK_THROWS_AS(parse_weight("1,2,3"), ScenarioError);
  CHECK_THROWS_AS(parse_weight("x"), ScenarioError);
  CHECK_THROWS_AS(parse_weight("1,"), ScenarioError);
}

TEST_CASE("diagram node sets") {
  SUBCASE("cone up to n = 3") {
    const Scenario sc = builtin_scenario("cone");
    const auto nodes = diagram_nodes(*sc.semigroup(), named(sc, {"R", "S", "U", "D"}), {0, 3, -3, 3});
    CHECK(nodes.monomials.size() == 16);
    CHECK(nodes.gaps.empty());
    CHECK(as_set(nodes.zeros) == std::set<Lattice>{{-1, 0}, {0, 1}, {0, -1}, {1, 2}, {1, -2}, {2, 3}, {2, -3}});
    // R and S alone produce the boundary zeros but not the one left of 1
    const auto rs = diagram_nodes(*sc.semigroup(), named(sc, {"R", "S"}), {0, 3, -3, 3});
    CHECK(as_set(rs.zeros) == std::set<Lattice>{{0, 1}, {0, -1}, {1, 2}, {1, -2}, {2, 3}, {2, -3}});
  }
  SUBCASE("ruled surface up to n = 4") {
    const Scenario sc = builtin_scenario("ruled");
    const auto nodes = diagram_nodes(*sc.semigroup(), named(sc, {"D", "M", "X", "Y"}), {0, 4, -5, 6});
    CHECK(nodes.monomials.size() == 30);
    CHECK(as_set(nodes.gaps) == std::set<Lattice>{{1, 1}, {2, 3}, {3, 5}});
    CHECK(as_set(nodes.zeros) == std::set<Lattice>{{1, -2}, {2, -3}, {3, -4}, {4, -5}});
  }
  SUBCASE("no generators: nodes only") {
    const Scenario sc = builtin_scenario("ruled");
    const std::string dot = emit_diagram(*sc.semigroup(), sc.action("scaling"), {}, {0, 4, -5, 6}, sc.notation, "r");
    CHECK(dot.find("->") == std::string::npos);
    CHECK(dot.find("class=\"zero\"") == std::string::npos);
    CHECK(dot.find("class=\"gap\"") != std::string::npos);
  }
  SUBCASE("edges follow nonzero actions") {
    const Scenario sc = builtin_scenario("cone");
    const std::string dot = emit_diagram(*sc.semigroup(), sc.action("scaling"), named(sc, {"R", "S"}), {0, 3, -3, 3},
                                         sc.notation, "cone");
    CHECK(dot.rfind("digraph \"cone\" {", 0) == 0);
    CHECK(dot.find("\"(2,-1)\" -> \"(2,0)\" [label=\"R\"]") != std::string::npos);
    CHECK(dot.find("\"(2,2)\" -> \"(2,3)\" [label=\"R\", style=dashed]") != std::string::npos);
    CHECK(dot.find("\"(3,3)\" -> \"(3,4)\"") == std::string::npos);
    CHECK(dot.find("[label=\"u^2*e(-1)\", pos=\"4,-1!\"") != std::string::npos);
  }
}
