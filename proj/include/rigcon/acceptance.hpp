#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace rigcon {

struct CriterionOutcome {
  bool passed = true;
  std::vector<std::string> failures;  // one line per failed check
  std::vector<std::string> notes;     // context shown on success too
};

struct Criterion {
  int index;
  std::string title;
  bool fast;   // a few seconds at most
  bool paper;  // checks fixed reference values rather than derived properties
  std::function<CriterionOutcome()> run;
};

struct CriterionResult {
  int index;
  std::string title;
  bool passed;
  double seconds;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

/// The thirteen acceptance criteria in index order.
const std::vector<Criterion>& acceptance_criteria();

/// Criteria of suite "all", "paper" or "fast". Throws InvalidInput otherwise.
std::vector<const Criterion*> acceptance_suite(std::string_view suite);

/// Runs one criterion; an escaping exception counts as a failure.
CriterionResult run_criterion(const Criterion& c);

/// "criterion  3 PASS  12.3s  title" followed by indented failure and note lines.
std::string format_result(const CriterionResult& r);

}  // namespace rigcon
