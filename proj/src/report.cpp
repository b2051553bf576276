#include "fourlines/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fourlines {

namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

VerificationReport run_verification_suite(const std::vector<std::string>& only) {
  std::vector<std::string> ids;
  if (only.empty()) {
    ids = all_check_ids();
  } else {
    auto known = all_check_ids();
    std::set<std::string> seen;
    for (const auto& id : only) {
      if (std::find(known.begin(), known.end(), id) == known.end())
        throw std::out_of_range("unknown check id: " + id);
      if (seen.insert(id).second) ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
  }
  VerificationReport r;
  r.version = std::string(kToolName) + " " + kToolVersion;
  for (const auto& id : ids) {
    CheckResult c = run_check(id);
    if (c.status == "pass") ++r.passed;
    else if (c.status == "fail") ++r.failed;
    else ++r.errors;
    r.checks.push_back(std::move(c));
  }
  return r;
}

std::string report_json(const VerificationReport& r) {
  ordered_json j = ordered_json::object();
  j["version"] = r.version;
  j["summary"] = {{"total", r.total()},
                  {"passed", r.passed},
                  {"failed", r.failed},
                  {"errors", r.errors}};
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json e = ordered_json::object();
    e["id"] = c.id;
    e["description"] = c.description;
    e["claim"] = c.claim;
    e["status"] = c.status;
    e["details"] = c.details;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

std::string report_markdown(const VerificationReport& r) {
  std::ostringstream out;
  out << "# Verification report\n\n";
  out << r.version << " — " << r.total() << " checks: " << r.passed << " passed, "
      << r.failed << " failed, " << r.errors << " errors\n\n";
  out << "| check | status | claim |\n|---|---|---|\n";
  for (const auto& c : r.checks)
    out << "| `" << c.id << "` | " << c.status << " | " << c.claim << " |\n";
  bool any_bad = r.failed > 0 || r.errors > 0;
  if (any_bad) {
    out << "\n## Failing checks\n";
    for (const auto& c : r.checks) {
      if (c.status == "pass") continue;
      out << "\n### `" << c.id << "` — " << c.status << "\n\n";
      out << c.description << ".\n\nClaim: " << c.claim << ".\n\n";
      if (c.details.contains("counterexample"))
        out << "Counterexample: " << c.details["counterexample"].get<std::string>()
            << "\n\n";
      if (c.details.contains("error"))
        out << "Error: " << c.details["error"].get<std::string>() << "\n\n";
      out << "Details:\n\n```json\n" << c.details.dump(2) << "\n```\n";
    }
  }
  return out.str();
}

}  // namespace fourlines
