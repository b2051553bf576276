// The verification check registry: every reproducible claim the library
// covers, addressable by a stable id, producing machine-readable results.
#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace fourlines {

struct CheckResult {
  std::string id;
  std::string description;  // what is being computed
  std::string claim;        // the expected outcome in plain language
  std::string status;       // "pass" | "fail" | "error"
  // computed values; failing checks include the first counterexample
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

// All registered check ids, ascending.
std::vector<std::string> all_check_ids();

// Runs one check; unknown ids throw std::out_of_range.  Exceptions inside a
// check are captured as status "error" with the message in details.
CheckResult run_check(const std::string& id);

}  // namespace fourlines
