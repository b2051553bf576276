#include <algorithm>
#include <set>

#include "doctest.h"
#include "fourlines/group_spec.hpp"
#include "fourlines/report.hpp"

using namespace fourlines;

namespace {

const std::vector<std::string> kQuickGreen = {
    "c01-group-orders", "c04-quadric-rank", "c09-chow-degrees", "c09-euler",
    "c12-surface-invariants"};

const char* kHalfTurnSpec = R"({
  "schema": 1,
  "name": "coordinatewise half-turn",
  "generators": [
    {
      "matrices": [["1","0","0","-1"], ["1","0","0","-1"],
                   ["1","0","0","-1"], ["1","0","0","-1"]],
      "permutation": []
    }
  ]
})";

}  // namespace

TEST_CASE("check registry is sorted and collision free") {
  auto ids = all_check_ids();
  CHECK(ids.size() == 34);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  CHECK_THROWS_AS(run_check("no-such-check"), std::out_of_range);
}

TEST_CASE("individual checks carry their claims and details") {
  CheckResult r = run_check("c09-euler");
  CHECK(r.id == "c09-euler");
  CHECK(r.status == "pass");
  CHECK(!r.description.empty());
  CHECK(!r.claim.empty());
  CHECK(r.details["euler_number"] == -128);
}

TEST_CASE("failing checks name their first counterexample") {
  CheckResult r = run_check("c05-q4-avoids-fixed-locus");
  CHECK(r.status == "fail");
  REQUIRE(r.details.contains("counterexample"));
  std::string cx = r.details["counterexample"].get<std::string>();
  CHECK(cx.find("(") != std::string::npos);  // a concrete point
  CheckResult r2 = run_check("c08-f1-gradient-pattern");
  CHECK(r2.status == "fail");
  CHECK(r2.details.contains("counterexample"));
  CHECK(r2.details["computed_zero_points"] == 4);
  CHECK(r2.details["expected_zero_points"] == 8);
}

TEST_CASE("suite selection, ordering, and summary math") {
  std::vector<std::string> shuffled = {"c09-euler", "c01-group-orders",
                                       "c09-euler", "c04-quadric-rank"};
  VerificationReport r = run_verification_suite(shuffled);
  REQUIRE(r.checks.size() == 3);  // duplicates collapse
  CHECK(r.checks[0].id == "c01-group-orders");
  CHECK(r.checks[1].id == "c04-quadric-rank");
  CHECK(r.checks[2].id == "c09-euler");
  CHECK(r.passed == 3);
  CHECK(r.failed == 0);
  CHECK(r.all_passed());
  CHECK(r.version == std::string(kToolName) + " " + kToolVersion);
  CHECK_THROWS_AS(run_verification_suite({"bogus"}), std::out_of_range);
}

TEST_CASE("reports are deterministic byte for byte") {
  VerificationReport a = run_verification_suite(kQuickGreen);
  VerificationReport b = run_verification_suite(kQuickGreen);
  CHECK(report_json(a) == report_json(b));
  CHECK(report_markdown(a) == report_markdown(b));
  // and the JSON parses back with the same summary
  auto parsed = nlohmann::json::parse(report_json(a));
  CHECK(parsed["summary"]["total"] == 5);
  CHECK(parsed["summary"]["passed"] == 5);
  CHECK(parsed["checks"].size() == 5);
  CHECK(parsed["checks"][0]["id"] == "c01-group-orders");
}

TEST_CASE("failing suites render failure sections") {
  VerificationReport r = run_verification_suite({"c05-q4-avoids-fixed-locus"});
  CHECK(r.failed == 1);
  CHECK(!r.all_passed());
  std::string md = report_markdown(r);
  CHECK(md.find("## Failing checks") != std::string::npos);
  CHECK(md.find("Counterexample:") != std::string::npos);
  std::string js = report_json(r);
  CHECK(js.find("counterexample") != std::string::npos);
}

TEST_CASE("group specs round trip") {
  GroupSpec spec = parse_group_spec(kHalfTurnSpec);
  CHECK(spec.name == "coordinatewise half-turn");
  REQUIRE(spec.generators.size() == 1);
  CHECK(spec.generators[0] ==
        ProductAuto({half_turn_matrix(), half_turn_matrix(), half_turn_matrix(),
                     half_turn_matrix()},
                    Perm4()));
  GroupSpec back = parse_group_spec(serialize_group_spec(spec));
  CHECK(back.name == spec.name);
  CHECK(back.generators == spec.generators);
  // serialization is canonical: a second round trip is byte-identical
  CHECK(serialize_group_spec(back) == serialize_group_spec(spec));
}

TEST_CASE("group spec errors carry JSON paths") {
  try {
    parse_group_spec(R"({"schema": 2, "generators": []})");
    CHECK(false);
  } catch (const GroupSpecError& e) {
    CHECK(e.path == "$.schema");
  }
  // overlapping cycles are not a bijection
  std::string bad_perm = R"({
    "schema": 1,
    "generators": [{
      "matrices": [["1","0","0","1"], ["1","0","0","1"], ["1","0","0","1"], ["1","0","0","1"]],
      "permutation": [[1,2],[2,3]]
    }]
  })";
  CHECK_THROWS_AS(parse_group_spec(bad_perm), GroupSpecError);
  try {
    parse_group_spec(bad_perm);
  } catch (const GroupSpecError& e) {
    CHECK(std::string(e.what()).find("bijection") != std::string::npos);
  }
  // singular matrix
  std::string singular = R"({
    "schema": 1,
    "generators": [{
      "matrices": [["0","0","0","0"], ["1","0","0","1"], ["1","0","0","1"], ["1","0","0","1"]],
      "permutation": []
    }]
  })";
  CHECK_THROWS_AS(parse_group_spec(singular), GroupSpecError);
  // unparseable matrix entry
  std::string bad_entry = R"({
    "schema": 1,
    "generators": [{
      "matrices": [["1","0","0","oops"], ["1","0","0","1"], ["1","0","0","1"], ["1","0","0","1"]],
      "permutation": []
    }]
  })";
  try {
    parse_group_spec(bad_entry);
    CHECK(false);
  } catch (const GroupSpecError& e) {
    CHECK(std::string(e.what()).find("bad entry") != std::string::npos);
    CHECK(e.path.find("matrices") != std::string::npos);
  }
}

TEST_CASE("builtin closures survive a spec round trip") {
  GroupSpec spec;
  spec.name = "case three";
  spec.generators = builtin_group("z4sz4");
  GroupSpec back = parse_group_spec(serialize_group_spec(spec));
  CHECK(back.generators == spec.generators);
  CHECK(closure(back.generators).order() == 16);
}
