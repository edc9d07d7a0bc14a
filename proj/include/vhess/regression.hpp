#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace vhess {

/// Outcome of one numbered acceptance criterion.
struct CriterionResult {
  int id = 0;
  std::string name;
  std::vector<std::string> tags;
  std::string expected;
  std::string actual;
  bool passed = false;
  bool skipped = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::vector<std::string> failures;  // one line per failed check
};

struct SuiteOptions {
  std::string filter;         // substring of a criterion name or tag; empty selects all
  bool include_slow = false;  // criterion 7 is skipped without it
  std::uint64_t seed = 0;
};

std::vector<CriterionResult> run_acceptance(const SuiteOptions& opts);

/// Skipped criteria do not count as failures.
bool all_passed(const std::vector<CriterionResult>& results);

std::string to_table(const std::vector<CriterionResult>& results);
nlohmann::json to_json(const std::vector<CriterionResult>& results);

}  // namespace vhess
