#include <set>

#include "doctest.h"
#include "fourlines/geometry.hpp"
#include "fourlines/multihomog.hpp"

using namespace fourlines;

namespace {

const CycloNum one = CycloNum::one();
const CycloNum zero = CycloNum::zero();
const CycloNum I = CycloNum::i();

// Evaluate a polynomial at explicit (non-normalized) coordinates, bypassing
// the canonical projective representative.  Used to pin derivative values at
// a chosen affine representative.
CycloNum eval_raw(const MultiPoly& p, const std::array<std::array<CycloNum, 2>, 4>& x) {
  CycloNum total = zero;
  for (int idx = 0; idx < p.dimension(); ++idx) {
    const CycloNum& c = p.coeff_at(idx);
    if (c.is_zero()) continue;
    ExponentTuple b = p.exponent_at(idx);
    CycloNum term = c;
    for (int k = 0; k < 4; ++k) {
      term *= x[k][0].pow(p.degree()[k] - b[k]);
      term *= x[k][1].pow(b[k]);
    }
    total += term;
  }
  return total;
}

ProductAuto all_slots(const ProjMatrix& m) { return ProductAuto({m, m, m, m}, Perm4()); }

}  // namespace

TEST_CASE("fixed locus of a coordinatewise half-turn") {
  auto comps = fixed_locus(all_slots(half_turn_matrix()));
  REQUIRE(comps.size() == 16);
  std::set<std::string> pts;
  for (const auto& c : comps) {
    CHECK(!c.positive_dim);
    CHECK(!c.degenerate);
    pts.insert(point_str(c.point));
  }
  CHECK(pts.size() == 16);
  // every coordinate is (0:1) or (1:0)
  for (const auto& c : comps)
    for (const auto& coord : c.point)
      CHECK((coord == P1Point(one, zero) || coord == P1Point(zero, one)));
}

TEST_CASE("identity slots produce positive-dimensional components") {
  ProductAuto partial({half_turn_matrix(), ProjMatrix(), ProjMatrix(), ProjMatrix()},
                      Perm4());
  auto comps = fixed_locus(partial);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].positive_dim);
  CHECK(comps[0].dimension == 3);
  CHECK_THROWS_AS(lefschetz_terms(partial), PositiveDimensionalError);
}

TEST_CASE("degenerate fixed points are flagged and rejected") {
  ProductAuto shear({ProjMatrix(one, one, zero, one), half_turn_matrix(),
                     half_turn_matrix(), half_turn_matrix()},
                    Perm4());
  auto comps = fixed_locus(shear);
  REQUIRE(comps.size() == 8);  // 1 x 2 x 2 x 2 choices
  for (const auto& c : comps) CHECK(c.degenerate);
  CHECK_THROWS_AS(lefschetz_terms(shear), DegenerateFixedPointError);
}

TEST_CASE("half-turn fixed point sum decomposes as sixteen sixteenths") {
  auto terms = lefschetz_terms(all_slots(half_turn_matrix()));
  REQUIRE(terms.size() == 16);
  CycloNum sixteenth = one / CycloNum(16);
  for (const auto& t : terms) CHECK(t == sixteenth);
  CHECK(lefschetz_sum(all_slots(half_turn_matrix())).is_one());
}

TEST_CASE("fixed point sums are 1 for cyclic-8 elements") {
  FiniteSubgroup G = closure(builtin_group("z8"));
  for (int k = 1; k < G.order(); ++k) CHECK(lefschetz_sum(G.elements[k]).is_one());
}

TEST_CASE("permutation elements contribute through cycle composites") {
  // order-4 double transposition: two 2-cycles, each with two fixed choices
  ProductAuto rot4 = builtin_group("z4")[0];
  auto terms = lefschetz_terms(rot4);
  CHECK(terms.size() == 4);
  CycloNum sum = zero;
  for (const auto& t : terms) sum += t;
  CHECK(sum.is_one());
}

TEST_CASE("base point inventory") {
  auto bps = base_points_64();
  REQUIRE(bps.size() == 64);
  std::set<std::string> uniq;
  for (const auto& p : bps) uniq.insert(point_str(p));
  CHECK(uniq.size() == 64);
  // all six quadrics vanish at every base point, including the variant
  for (const auto& p : bps) {
    for (int k = 0; k < 6; ++k) CHECK(quadric_q(k).eval(p).is_zero());
    CHECK(quadric_q_prime(2).eval(p).is_zero());
  }
}

TEST_CASE("smoothness of the quadric at base points") {
  std::vector<MultiPoly> sys{quadric_q(4)};
  for (const auto& p : base_points_64()) CHECK(is_smooth_at(sys, p, 1));
}

TEST_CASE("the distinguished section cuts half the base points") {
  MultiPoly f1 = fano_section();
  int zeros = 0;
  for (const auto& p : base_points_64())
    if (f1.eval(p).is_zero()) ++zeros;
  CHECK(zeros == 32);
}

TEST_CASE("group fixed locus of the order-16 semidirect product") {
  FiniteSubgroup G = closure(builtin_group("z4sz4"));
  auto locus = group_fixed_locus(G);
  REQUIRE(locus.size() == 48);
  int small = 0, large = 0;
  for (const auto& e : locus) {
    CHECK(!e.component.positive_dim);
    // every point is stabilized by exactly one involution; half the points
    // are additionally fixed by an order-4 pair, giving stabilizers Z2 or Z4
    int involutions = 0;
    for (int idx : e.stabilizer_indices)
      if (auto_order(G.elements[idx]) == 2) ++involutions;
    CHECK(involutions == 1);
    if (e.stabilizer_indices.size() == 1) ++small;
    else if (e.stabilizer_indices.size() == 3) ++large;
  }
  CHECK(small == 24);
  CHECK(large == 24);
  // each of the twelve order-4 elements fixes exactly four points
  for (int k = 1; k < G.order(); ++k)
    if (auto_order(G.elements[k]) == 4) CHECK(fixed_locus(G.elements[k]).size() == 4);
}

TEST_CASE("distinguished section singularities sit at four sign points") {
  MultiPoly f1 = fano_section();
  FiniteSubgroup G = closure(builtin_group("z4sz4"));
  std::set<std::string> zeros;
  for (const auto& e : group_fixed_locus(G)) {
    auto grad = f1.gradient(e.component.point);
    bool allz = true;
    for (const auto& c : grad) allz = allz && c.is_zero();
    if (allz) zeros.insert(point_str(e.component.point));
  }
  std::set<std::string> expected;
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) {
      CycloNum s1 = e1 > 0 ? one : -one, s2 = e2 > 0 ? one : -one;
      expected.insert(point_str(
          PointX{P1Point(one, s1), P1Point(one, s2), P1Point(one, s2), P1Point(one, -s1)}));
    }
  CHECK(zeros == expected);
  // the gradient zeros all lie on the section's zero set
  for (const auto& e : group_fixed_locus(G))
    if (zeros.count(point_str(e.component.point)))
      CHECK(f1.eval(e.component.point).is_zero());
}

TEST_CASE("joint rank of quadric and section at shared base points") {
  MultiPoly f1 = fano_section();
  std::vector<MultiPoly> sys{quadric_q(4), f1};
  int on_section = 0;
  for (const auto& p : base_points_64()) {
    if (!f1.eval(p).is_zero()) continue;
    ++on_section;
    CHECK(is_smooth_at(sys, p, 2));
  }
  CHECK(on_section == 32);
}

TEST_CASE("is_smooth_at rejects points off the zero set and sees rank drops") {
  std::vector<MultiPoly> sys{quadric_q(4)};
  PointX off{P1Point(one, one), P1Point(one, one), P1Point(one, one), P1Point(one, one)};
  CHECK(!quadric_q(4).eval(off).is_zero());
  CHECK_THROWS_AS(is_smooth_at(sys, off, 1), std::invalid_argument);
  // a gradient zero of the distinguished section: rank drops below 1
  MultiPoly f1 = fano_section();
  PointX sing{P1Point(one, one), P1Point(one, one), P1Point(one, one), P1Point(one, -one)};
  CHECK(f1.eval(sing).is_zero());
  CHECK(!is_smooth_at({f1}, sing, 1));
}

TEST_CASE("pinned derivative values at an explicit representative") {
  // representative ((0,1), (0,1), (1,1), (i,1)); all values exact
  std::array<std::array<CycloNum, 2>, 4> x{{{zero, one}, {zero, one}, {one, one}, {I, one}}};
  MultiPoly q4 = quadric_q(4);
  MultiPoly f1 = fano_section();
  CHECK(eval_raw(q4, x).is_zero());
  CHECK(eval_raw(f1, x).is_zero());
  CHECK(eval_raw(q4.partial(3, 0), x).is_zero());
  CHECK(eval_raw(q4.partial(4, 0), x) == CycloNum(4) * I);
  CHECK(eval_raw(f1.partial(4, 0), x) == -one);
}
