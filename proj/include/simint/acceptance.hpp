#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "simint/params.hpp"

namespace simint {

enum class Status { Pass, Fail, Skip };

struct CriterionResult {
  int id = 0;
  std::string name;
  Status status = Status::Fail;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240607;
  std::vector<int> only;  // empty: every criterion
  ParamCaps layout;       // caps for the layout searches in criteria 1 and 3
};

// Runs the criteria in order, printing one result line per criterion to out
// as it finishes. Progress notes for failures go to log.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream& out,
                                            std::ostream& log);

// "PASS 3 inequality-suite 142 graphs, 0 violations (12.3s / 1800s)"
std::string format_result(const CriterionResult& r);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace simint
