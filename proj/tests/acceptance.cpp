// Acceptance gate: fourteen criteria, one pass/fail line each, all exact
// arithmetic with zero tolerance.  Each criterion aggregates the registry
// checks that carry its computations; the binary exits nonzero when any
// criterion fails, printing the first counterexample it has.

#include <cstdio>
#include <string>
#include <vector>

#include "fourlines/checks.hpp"

using namespace fourlines;

namespace {

struct Criterion {
  const char* title;
  std::vector<const char*> check_ids;
};

const Criterion kCriteria[] = {
    {"four order-16 closures identify as Z8xZ2, Z4xZ4, Z4sZ4, Q8xZ2",
     {"c01-group-orders", "c01-group-types"}},
    {"48 fixed points split 16+16+16 by the three involutions; all loci isolated",
     {"c02-fixed-locus-count", "c02-fixed-locus-dim"}},
    {"holomorphic fixed-point sums equal 1; half-turn case is 16 x 1/16",
     {"c03-lefschetz-all", "c03-lefschetz-z2-decomposition"}},
    {"quadric system: rank 6, all 64 base points annihilate it, smooth there",
     {"c04-quadric-rank", "c04-base-points-annihilate", "c04-base-points-q4-smooth"}},
    {"freeness: the quadric avoids all 48 fixed points; eigenvalue pair (1,1)",
     {"c05-q4-avoids-fixed-locus", "c05-quadrics-eigenvectors"}},
    {"abelian cases: lifted generators anticommute; no simultaneous eigensections",
     {"c06-anticommutation", "c06-eigenspace-scan-empty"}},
    {"regular character (16,0,...,0); eigenspace dimensions 1 and 6",
     {"c07-regular-character", "c07-f1-eigenspace-dim1", "c07-q-eigenspace-dim6"}},
    {"gradient vanishes at 8 sign points; joint rank 2 at the 32 shared base points",
     {"c08-f1-gradient-pattern", "c08-q4f1-rank2-on-v"}},
    {"Euler number -128; intersection degrees 24 and 48",
     {"c09-euler", "c09-chow-degrees"}},
    {"quotient Hodge table matches for all ten builtins",
     {"c10-hodge-table"}},
    {"product cohomology rows and the sequence chase reproduce every value",
     {"c11-kunneth-rows", "c11-chase-values"}},
    {"quotient surface: K^2 = 3, chi = 1, p_g(cover) = 15, moduli 4",
     {"c12-surface-invariants"}},
    {"lift obstruction: 16 + 4 blocked lift families, surviving double transposition",
     {"c13-obstruction-id-family", "c13-obstruction-transposition-family",
      "c13-obstruction-double-transposition"}},
    {"property suites: group axioms, conjugation invariance, field axioms, pullback",
     {"c14-group-axioms", "c14-conjugation-invariance", "c14-field-axioms",
      "c14-pullback-multiplicative", "c14-rank-invariance"}},
};

}  // namespace

int main() {
  int failures = 0;
  int number = 0;
  for (const auto& crit : kCriteria) {
    ++number;
    std::string verdict = "PASS";
    std::string detail;
    for (const char* id : crit.check_ids) {
      CheckResult r = run_check(id);
      if (r.status == "pass") continue;
      verdict = "FAIL";
      detail = std::string(" [") + id;
      if (r.details.contains("counterexample"))
        detail += ": " + r.details["counterexample"].get<std::string>();
      else if (r.details.contains("error"))
        detail += ": " + r.details["error"].get<std::string>();
      detail += "]";
      break;
    }
    if (verdict == "FAIL") ++failures;
    std::printf("criterion %02d: %s  %s%s\n", number, verdict.c_str(), crit.title,
                detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n",
              int(sizeof kCriteria / sizeof kCriteria[0]) - failures,
              sizeof kCriteria / sizeof kCriteria[0]);
  return failures == 0 ? 0 : 1;
}
