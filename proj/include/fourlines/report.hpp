#pragma once

// Aggregation of the verification checks into a single report with
// deterministic JSON and Markdown renderings.  The JSON output is
// byte-identical across runs: checks are ordered by id, object keys keep
// insertion order, and no timestamps or environment data are included.

#include <string>
#include <vector>

#include "fourlines/checks.hpp"

namespace fourlines {

inline constexpr const char* kToolName = "fourlines";
inline constexpr const char* kToolVersion = "1.0.0";

struct VerificationReport {
  std::string version;  // "<tool> <semver>"
  std::vector<CheckResult> checks;  // sorted by id
  int passed = 0;
  int failed = 0;
  int errors = 0;

  int total() const { return int(checks.size()); }
  bool all_passed() const { return failed == 0 && errors == 0; }
};

// Runs the selected checks (all of them when `only` is empty) in id order.
// Unknown ids throw std::out_of_range before anything runs.
VerificationReport run_verification_suite(const std::vector<std::string>& only = {});

std::string report_json(const VerificationReport& r);
std::string report_markdown(const VerificationReport& r);

}  // namespace fourlines
