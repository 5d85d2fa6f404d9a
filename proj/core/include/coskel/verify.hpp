#pragma once

#include <string>
#include <vector>

namespace coskel {

// Self-check suite.  Scopes name a subsystem (simplicial_core,
// polytope_types, kneser_coloring, obstruction_engine, cli_reports) or
// "all".  Each check is deterministic; randomized checks use fixed seeds.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail; // counterexample or summary
};

std::vector<CheckResult> verify_suite(const std::string& scope);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace coskel
