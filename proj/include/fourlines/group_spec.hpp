// JSON interchange for generator sets of product automorphisms.
//
// Document layout (schema 1):
//   {
//     "schema": 1,
//     "name": "my group",
//     "generators": [
//       {
//         "matrices": [["1","0","0","1"], ..., ["0","1","1","0"]],
//         "permutation": [[1,2],[3,4]]
//       }
//     ]
//   }
// Each generator carries four 2x2 matrices as row-major 4-tuples of exact
// cyclotomic number strings, and a permutation of {1,2,3,4} in disjoint
// cycle notation (empty list = identity).
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fourlines/product_autos.hpp"

namespace fourlines {

// Carries the JSON path of the offending node, also baked into what().
struct GroupSpecError : std::runtime_error {
  std::string path;
  GroupSpecError(const std::string& msg, const std::string& path_)
      : std::runtime_error(msg + " (at " + path_ + ")"), path(path_) {}
};

struct GroupSpec {
  std::string name;
  std::vector<ProductAuto> generators;
};

// Throws GroupSpecError on malformed documents, non-bijective permutations,
// and singular matrices.
GroupSpec parse_group_spec(const std::string& json_text);

// Canonical serialization; parse(serialize(s)) reproduces the generators.
std::string serialize_group_spec(const GroupSpec& spec);

}  // namespace fourlines
