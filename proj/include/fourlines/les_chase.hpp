// Dimension chasing through long exact cohomology sequences.
//
// A chase specification (JSON) declares spaces with their dimensions, named
// cohomology terms (terms carrying line-bundle summand degree lists are
// computed outright by the product formula; the rest are unknowns), a few
// known single values, and short exact sequences 0 -> A -> B -> C -> 0.
// Each sequence induces a long exact sequence
//   0 -> A^0 -> B^0 -> C^0 -> A^1 -> ... -> C^4 -> 0
// and every run of entries delimited by zero entries has vanishing
// alternating sum.  The solver turns those sums into linear equations,
// reduces globally over the rationals, and iterates as newly determined
// zeros refine the runs, until a fixpoint.  Targets (single values or
// integer combinations) are then read off the reduced system.
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fourlines {

struct ChaseInconsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ChaseSpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChaseTargetResult {
  std::string name;
  bool determined = false;
  mpq_class value;  // valid when determined
};

struct ChaseResult {
  // every (term, q) pair whose value the system pins down
  std::map<std::string, std::map<int, mpq_class>> determined;
  std::vector<ChaseTargetResult> targets;

  bool has(const std::string& term, int q) const;
  // throws std::out_of_range when not determined
  const mpq_class& value(const std::string& term, int q) const;
  // target lookup by name; throws std::out_of_range when absent
  const ChaseTargetResult& target(const std::string& name) const;
};

// Parse and solve a chase specification.  Throws ChaseSpecError on malformed
// input and ChaseInconsistencyError when the equations are contradictory.
ChaseResult run_chase(const std::string& json_text);

// The built-in specification: cohomology of the anticanonical 3-fold
// Y in |O_X(2H)|, the surface T in |O_Y(H)|, and their tangent-sheaf
// restrictions, chased from the product formula plus two vanishing facts.
const std::string& default_chase_spec();

}  // namespace fourlines
