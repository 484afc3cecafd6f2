#pragma once

#include <string>
#include <vector>

#include "finloc/common.hpp"

namespace finloc {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool skipped = false;  // the candidate budget ran out before any verdict
  std::string detail;
  long long micros = 0;
};

// Runs one named criterion, a group alias (spectrum, duality, functor,
// nuclei, patch, aft, scott, points, sierpinski, collapse) or "all".
// A criterion whose enumerations blow the cap is reported as skipped, never
// as passed. Unknown names throw ValidationError.
std::vector<CriterionResult> run_suite(const std::string& name,
                                       long long cap = kDefaultCap);

std::vector<std::string> suite_names();

}  // namespace finloc
