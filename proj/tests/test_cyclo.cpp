#include "doctest.h"
#include "fourlines/cyclo.hpp"

using namespace fourlines;

namespace {
const CycloNum z = CycloNum::zeta();
const CycloNum I = CycloNum::i();
}  // namespace

TEST_CASE("primitive root relations") {
  CHECK(z.pow(8) == CycloNum(-1));
  CHECK(z.pow(16) == CycloNum::one());
  CHECK(z.pow(4) == I);
  CHECK(I * I == CycloNum(-1));
  CHECK((z.pow(2) * z.pow(2)) == I);
  // the eight basis monomials are linearly independent: distinct powers differ
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) CHECK(z.pow(a) != z.pow(b));
}

TEST_CASE("ring arithmetic and normal form") {
  CycloNum a = CycloNum(3) + mpq_class(2, 3) * z.pow(5);
  CycloNum b = CycloNum(-1) + z;
  CHECK(a + b == b + a);
  CHECK(a * b == b * a);
  CHECK((a - a).is_zero());
  CHECK((a * CycloNum::one()) == a);
  CHECK((a * CycloNum::zero()).is_zero());
  // reduction past degree 7 wraps with a sign
  CHECK(z.pow(9) == -z);
  CHECK(z.pow(12) == -I);
}

TEST_CASE("printing is canonical and parse round-trips") {
  CycloNum half = CycloNum(mpq_class(1, 2));
  CycloNum v = -half + half * I;
  CHECK(v.str() == "-1/2 + 1/2*z^4");
  CHECK(CycloNum::parse(v.str()) == v);
  CHECK(CycloNum::zero().str() == "0");
  CHECK(CycloNum::one().str() == "1");
  CHECK((-CycloNum::one()).str() == "-1");
  CHECK(z.str() == "z");
  CHECK((-z.pow(4)).str() == "-z^4");
  for (const CycloNum& s : {z + CycloNum(7), mpq_class(-3, 5) * z.pow(7), I - z})
    CHECK(CycloNum::parse(s.str()) == s);
}

TEST_CASE("parse rejects malformed input with a position") {
  CHECK_THROWS_AS(CycloNum::parse(""), CycloParseError);
  CHECK_THROWS_AS(CycloNum::parse("1 +"), CycloParseError);
  CHECK_THROWS_AS(CycloNum::parse("z^"), CycloParseError);
  CHECK_THROWS_AS(CycloNum::parse("q"), CycloParseError);
  try {
    CycloNum::parse("1 + q");
    CHECK(false);
  } catch (const CycloParseError& e) {
    CHECK(e.pos == 4);
  }
}

TEST_CASE("field inverses") {
  for (const CycloNum& v : {z, CycloNum(2) + z.pow(3), I - CycloNum(1), z.pow(7) + z}) {
    CHECK(v * v.inverse() == CycloNum::one());
    CHECK((CycloNum::one() / v) * v == CycloNum::one());
  }
  CHECK_THROWS_AS(CycloNum::zero().inverse(), std::domain_error);
}

TEST_CASE("square roots inside the field") {
  // i has the explicit root z^2, and -1 has root z^4
  auto r1 = I.sqrt_in_field();
  REQUIRE(r1.has_value());
  CHECK(*r1 * *r1 == I);
  auto r2 = CycloNum(-1).sqrt_in_field();
  REQUIRE(r2.has_value());
  CHECK(*r2 * *r2 == CycloNum(-1));
  // 2 is a square here (the field contains sqrt 2), 3 is not
  auto r3 = CycloNum(2).sqrt_in_field();
  REQUIRE(r3.has_value());
  CHECK(*r3 * *r3 == CycloNum(2));
  CHECK(!CycloNum(3).sqrt_in_field().has_value());
  // the generator itself has no square root (it would need a 32nd root of unity)
  CHECK(!z.sqrt_in_field().has_value());
  // perfect squares of generic elements come back exactly
  CycloNum w = mpq_class(2, 7) * z.pow(3) - CycloNum(1) + mpq_class(1, 3) * I;
  auto rw = (w * w).sqrt_in_field();
  REQUIRE(rw.has_value());
  CHECK(*rw * *rw == w * w);
}

TEST_CASE("rationality predicates") {
  CHECK(CycloNum(5).is_rational());
  CHECK(!z.is_rational());
  CHECK(CycloNum::zero().is_zero());
  CHECK(CycloNum::one().is_one());
  CHECK(!I.is_rational());
  CHECK((I * I).is_rational());
}

TEST_CASE("total order is consistent") {
  const CycloNum vals[] = {CycloNum::zero(), CycloNum::one(), z, I, -z, z + I};
  for (const auto& a : vals)
    for (const auto& b : vals) {
      int rels = int(a < b) + int(b < a) + int(a == b);
      CHECK(rels == 1);
    }
}

TEST_CASE("integer powers") {
  CHECK(z.pow(0) == CycloNum::one());
  CHECK((CycloNum(2) + z).pow(1) == CycloNum(2) + z);
  CycloNum v = CycloNum(1) + z;
  CHECK(v.pow(3) == v * v * v);
}
