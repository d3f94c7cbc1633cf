#pragma once

#include "invdiff/scenario.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace invdiff {

struct AnalysisResult {
  std::string id;
  std::string kind;
  std::string claim;
  /// The request carried an expectation.
  bool asserted = false;
  /// Expectation matched and every internal re-check held (true for unasserted, error-free analyses).
  bool passed = true;
  nlohmann::ordered_json observed;
  nlohmann::ordered_json expected;
  /// Internal re-checks (witness confirmations, verdict verification) that failed.
  std::vector<std::string> failed_checks;
  std::optional<std::string> error;
};

struct Report {
  std::string scenario;
  Int truncation = 0;
  /// Operator name -> normal form.
  nlohmann::ordered_json operators;
  bool round_trip = true;
  std::vector<AnalysisResult> results;

  /// Every asserted claim passed and every definition round-trips.
  bool ok() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// `pattern` matches `observed` when every key of an object pattern matches recursively and
/// everything else compares equal.
bool matches(const nlohmann::json& pattern, const nlohmann::ordered_json& observed);

/// Runs the analyses (concurrently; the report keeps request order). Per-analysis errors are recorded
/// and the remaining analyses still run.
Report run_scenario(const Scenario& sc, std::optional<Int> truncation = std::nullopt);

/// One analysis on its own.
AnalysisResult run_analysis(const Scenario& sc, const AnalysisRequest& req, Int truncation);

}  // namespace invdiff
