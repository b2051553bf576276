// Fixed loci of product automorphisms, the holomorphic Lefschetz sum,
// pointwise smoothness via chart Jacobians, and the 64 base points of the
// quadric linear system.
//
// Fixed points are found cycle by cycle: for a permutation cycle
// (i1 i2 ... iL) of sigma, a fixed point must satisfy x_{i1} = W x_{i1}
// with W = A_{i1} A_{i2} ... A_{iL}, and the remaining coordinates
// propagate as x_{i_{k+1}} = A_{i_k}^{-1} x_{i_k}.  A cycle whose composite
// is projectively the identity contributes one dimension of freedom.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fourlines/multihomog.hpp"
#include "fourlines/product_autos.hpp"

namespace fourlines {

struct PositiveDimensionalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateFixedPointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FixedComponent {
  bool positive_dim = false;
  // number of permutation cycles whose composite is projectively the identity
  int dimension = 0;
  // valid when !positive_dim
  PointX point{};
  // some cycle composite had a double eigenvalue (unipotent), so the isolated
  // point is a multiple fixed point: Lefschetz terms are undefined there
  bool degenerate = false;
  // free-cycle record for positive-dimensional components
  std::string description;
};

// All components of Fix(g).  Isolated points are enumerated in a
// deterministic order (cycles by smallest member, per-cycle fixed points in
// discovery order, earlier cycles varying slowest).  If any cycle is free,
// a single positive-dimensional component summarizing the freedom is
// returned instead.
std::vector<FixedComponent> fixed_locus(const ProductAuto& g);

struct GroupFixedPoint {
  FixedComponent component;
  // indices into G.elements of the nontrivial elements fixing this component
  std::vector<int> stabilizer_indices;
};

// Union of Fix(g) over nontrivial g in G, isolated points deduplicated and
// sorted by printed form; positive-dimensional components appended per
// element afterwards.
std::vector<GroupFixedPoint> group_fixed_locus(const FiniteSubgroup& G);

// 1/det(I - J) at each isolated fixed point, in fixed_locus order.
// Throws PositiveDimensionalError or DegenerateFixedPointError when the
// hypotheses of the fixed point formula fail.
std::vector<CycloNum> lefschetz_terms(const ProductAuto& g);
// Sum of the terms; equals 1 for every automorphism with finite
// nondegenerate fixed locus.
CycloNum lefschetz_sum(const ProductAuto& g);

// True iff the common zero locus of `polys` is smooth of the expected
// codimension at `pt`: the Jacobian with respect to the four affine chart
// coordinates has rank expected_codim.  Charts normalize the
// larger-indexed nonzero coordinate of each factor.  Throws
// std::invalid_argument unless every polynomial vanishes at pt.
bool is_smooth_at(const std::vector<MultiPoly>& polys, const PointX& pt, int expected_codim);

// The 64 base points of the span of quadric_q(0..5): four blocks of 16,
// each block constraining two factors to coordinate points {(1:0),(0:1)}
// and the other two to {(1:i),(1:-i)} and {(1:1),(1:-1)}.
std::vector<PointX> base_points_64();

}  // namespace fourlines
