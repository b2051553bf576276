#include "doctest.h"
#include "fourlines/moebius.hpp"
#include "fourlines/product_autos.hpp"  // half_turn_matrix, swap_matrix

using namespace fourlines;

namespace {

const CycloNum I = CycloNum::i();
const CycloNum one = CycloNum::one();
const CycloNum zero = CycloNum::zero();

ProjMatrix diag(const CycloNum& a, const CycloNum& d) { return ProjMatrix(a, zero, zero, d); }

}  // namespace

TEST_CASE("projective points canonicalize") {
  P1Point p(CycloNum(2), CycloNum(4));
  CHECK(p == P1Point(one, CycloNum(2)));
  CHECK(p.x0().is_one());
  CHECK(p.str() == "(1 : 2)");
  P1Point q(zero, CycloNum(-7));
  CHECK(q.str() == "(0 : 1)");
  CHECK(P1Point(I, one).str() == "(1 : -z^4)");
  CHECK_THROWS_AS(P1Point(zero, zero), std::invalid_argument);
}

TEST_CASE("singular matrices are rejected") {
  CHECK_THROWS_AS(ProjMatrix(one, one, one, one), std::invalid_argument);
  CHECK_THROWS_AS(ProjMatrix(zero, zero, zero, zero), std::invalid_argument);
  CHECK_THROWS_WITH(ProjMatrix(one, CycloNum(2), CycloNum(2), CycloNum(4)),
                    "singular 2x2 matrix is not in PGL_2");
}

TEST_CASE("projective equality ignores scalars") {
  ProjMatrix a = half_turn_matrix();
  ProjMatrix b = diag(CycloNum(3), CycloNum(-3));
  CHECK(a == b);
  CHECK(a.canonical() == b.canonical());
  CHECK(a != swap_matrix());
}

TEST_CASE("orders of standard elements") {
  CHECK(proj_order(ProjMatrix()) == 1);
  CHECK(proj_order(half_turn_matrix()) == 2);
  CHECK(proj_order(swap_matrix()) == 2);
  CHECK(proj_order(diag(one, I)) == 4);
  CHECK(proj_order(diag(one, CycloNum::zeta())) == 16);
  CHECK(proj_order(diag(one, CycloNum::zeta().pow(2))) == 8);
  // a unipotent element has infinite order: the cap reports no order
  CHECK(!proj_order(ProjMatrix(one, one, zero, one)).has_value());
}

TEST_CASE("inverses and composition") {
  ProjMatrix m(one, CycloNum(2), CycloNum(3), CycloNum(4));
  CHECK(m * m.proj_inverse() == ProjMatrix());
  ProjMatrix t = m.true_inverse();
  CHECK((m * t).is_scalar());
  CHECK((m * t).entry(0, 0).is_one());
  CHECK(m.apply(P1Point(one, one)) == P1Point(one + CycloNum(2), CycloNum(3) + CycloNum(4)));
}

TEST_CASE("fixed points on the line") {
  auto f1 = fixed_points_p1(half_turn_matrix());
  REQUIRE(!f1.all_of_p1);
  REQUIRE(f1.points.size() == 2);
  CHECK(!f1.degenerate);
  CHECK(((f1.points[0] == P1Point(one, zero) && f1.points[1] == P1Point(zero, one)) ||
         (f1.points[1] == P1Point(one, zero) && f1.points[0] == P1Point(zero, one))));

  auto f2 = fixed_points_p1(swap_matrix());
  REQUIRE(f2.points.size() == 2);
  for (const auto& p : f2.points)
    CHECK((p == P1Point(one, one) || p == P1Point(one, -one)));

  auto f3 = fixed_points_p1(ProjMatrix());
  CHECK(f3.all_of_p1);

  // unipotent: one fixed point of multiplicity two
  auto f4 = fixed_points_p1(ProjMatrix(one, one, zero, one));
  REQUIRE(f4.points.size() == 1);
  CHECK(f4.degenerate);
  CHECK(f4.points[0] == P1Point(one, zero));

  // trace^2 - 4 det outside the field's squares
  CHECK_THROWS_AS(fixed_points_p1(ProjMatrix(one, one, one, zero)),
                  IrrationalSpectrumError);
}

TEST_CASE("antidiagonal and diagonal predicates") {
  CHECK(half_turn_matrix().is_diagonal());
  CHECK(!half_turn_matrix().is_antidiagonal());
  CHECK(swap_matrix().is_antidiagonal());
  CHECK(ProjMatrix().is_scalar());
  CHECK(!diag(one, I).is_scalar());
}

TEST_CASE("string round trips") {
  ProjMatrix m(one, -I, zero, CycloNum::zeta());
  auto cells = m.to_strings();
  ProjMatrix back = ProjMatrix::from_strings(cells);
  CHECK(back == m);
  CHECK(ProjMatrix::from_strings({"1", "0", "0", "-1"}) == half_turn_matrix());
  CHECK_THROWS_AS(ProjMatrix::from_strings({"1", "0", "0", "bad"}), CycloParseError);
}

TEST_CASE("conjugation between order-2 elements") {
  auto k = conjugating_element(half_turn_matrix(), swap_matrix());
  REQUIRE(k.has_value());
  CHECK(k->proj_inverse() * half_turn_matrix() * *k == swap_matrix());
  // scalar matrices are conjugate only to themselves
  CHECK(!conjugating_element(ProjMatrix(), half_turn_matrix()).has_value());
}
