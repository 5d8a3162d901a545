#pragma once

#include <functional>
#include <string>
#include <vector>

namespace xilab::tools {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct SuiteOptions {
  // Criteria to run (1..13); empty runs all of them.
  std::vector<int> only;
  // Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

int criterion_count();
std::string criterion_name(int id);
double criterion_budget_seconds(int id);

// Runs one criterion. Exceptions from the numerics become a FAIL with the message as detail.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_suite(const SuiteOptions& opts);

// "PASS  C3  uniform-bound dominance  (12.3 s / 600 s)  detail"
std::string format_result(const CriterionResult& r);

}  // namespace xilab::tools
