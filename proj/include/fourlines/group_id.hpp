// Identification of the isomorphism type of a finite group of order <= 16.
//
// Reference multiplication tables exist for every isomorphism class of
// order <= 16 (42 classes).  Identification first filters candidates by the
// element-order histogram, then searches for an explicit isomorphism by
// assigning generator images and checking multiplicativity; the histogram
// alone does not separate e.g. Z4xZ4, Z4sZ4 and Q8xZ2.
//
// Dn denotes the symmetry group of the regular n-gon (order 2n); Dic_n the
// dicyclic group of order 4n (Q8 = Dic2, Q16 = Dic4); M16 and SD16 the
// modular and semidihedral groups of order 16; Z4sZ4 the semidirect product
// of Z4 acting on Z4 by inversion; SG16_3 the group (Z4 x Z2) : Z2 in which
// conjugation adds the Z4 part mod 2; CPD8Z4 the central product of D4 and
// Z4 over their common central involution.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace fourlines {

// table[a][b] = index of the product of elements a and b
using MultTable = std::vector<std::vector<int>>;

struct ReferenceGroup {
  std::string label;
  MultTable table;
};

// All isomorphism classes of groups of order <= 16, identity at index 0.
const std::vector<ReferenceGroup>& reference_groups();

// order of element -> count
std::map<int, int> table_order_histogram(const MultTable& table);

// Label of the reference class isomorphic to the given group.
// Throws std::invalid_argument if the table is not a group table of
// order <= 16 covered by the reference list.
std::string identify_isomorphism_type(const MultTable& table);

}  // namespace fourlines
