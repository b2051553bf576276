#include "doctest.h"
#include "fourlines/matrix.hpp"

using namespace fourlines;

namespace {

const CycloNum I = CycloNum::i();

ExactMatrix from_longs(int rows, int cols, std::initializer_list<long> vals) {
  ExactMatrix m(rows, cols);
  auto it = vals.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = CycloNum(*it++);
  return m;
}

}  // namespace

TEST_CASE("echelon form on a rank-2 integer matrix") {
  ExactMatrix m = from_longs(3, 4, {1, 2, 3, 4,
                                    2, 4, 6, 8,
                                    0, 1, 1, 0});
  EchelonForm ef = echelon_form(m);
  CHECK(ef.rank == 2);
  CHECK(ef.pivot_cols == std::vector<int>{0, 1});
  CHECK(mat_rank(m) == 2);
  // reduced rows start with a normalized pivot
  CHECK(ef.reduced.at(0, 0).is_one());
  CHECK(ef.reduced.at(1, 1).is_one());
  CHECK(ef.reduced.at(2, 0).is_zero());
  CHECK(ef.reduced.at(2, 3).is_zero());
}

TEST_CASE("kernel basis convention") {
  // single row (1, z^4): free column 1, kernel vector (-z^4, 1)
  ExactMatrix m(1, 2);
  m.at(0, 0) = CycloNum::one();
  m.at(0, 1) = I;
  ExactMatrix k = kernel_basis(m);
  REQUIRE(k.cols() == 1);
  REQUIRE(k.rows() == 2);
  CHECK(k.at(0, 0) == -I);
  CHECK(k.at(1, 0).is_one());
  CHECK((m * k).is_zero());
}

TEST_CASE("rank-nullity and kernel annihilation") {
  ExactMatrix m = from_longs(3, 5, {1, 0, 2, 0, 1,
                                    0, 1, 1, 1, 0,
                                    1, 1, 3, 1, 1});
  ExactMatrix k = kernel_basis(m);
  CHECK(mat_rank(m) + k.cols() == 5);
  CHECK((m * k).is_zero());
  // kernel columns carry a unit at their free coordinate
  for (int c = 0; c < k.cols(); ++c) {
    int units = 0;
    for (int r = 0; r < k.rows(); ++r)
      if (k.at(r, c).is_one()) ++units;
    CHECK(units >= 1);
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(ExactMatrix::identity(3)).is_one());
  ExactMatrix m = from_longs(2, 2, {1, 2, 3, 4});
  CHECK(determinant(m) == CycloNum(-2));
  ExactMatrix s(2, 2);
  s.at(0, 0) = I;
  s.at(0, 1) = CycloNum::one();
  s.at(1, 0) = CycloNum::zero();
  s.at(1, 1) = -I;
  CHECK(determinant(s) == CycloNum::one());
  // row swap flips the sign
  ExactMatrix sw(2, 2);
  sw.at(0, 0) = s.at(1, 0);
  sw.at(0, 1) = s.at(1, 1);
  sw.at(1, 0) = s.at(0, 0);
  sw.at(1, 1) = s.at(0, 1);
  CHECK(determinant(sw) == -CycloNum::one());
}

TEST_CASE("eigenspaces of a diagonal matrix") {
  ExactMatrix m(2, 2);
  m.at(0, 0) = I;
  m.at(1, 1) = CycloNum(-1);
  ExactMatrix ei = eigenspace(m, I);
  REQUIRE(ei.cols() == 1);
  CHECK(ei.at(0, 0).is_one());
  CHECK(ei.at(1, 0).is_zero());
  CHECK(eigenspace(m, CycloNum(5)).cols() == 0);
  CHECK(eigenspace(ExactMatrix::identity(4), CycloNum::one()).cols() == 4);
}

TEST_CASE("column span membership") {
  ExactMatrix basis = from_longs(3, 2, {1, 0,
                                        0, 1,
                                        1, 1});
  ExactMatrix in = from_longs(3, 1, {2, 3, 5});
  ExactMatrix out = from_longs(3, 1, {1, 0, 0});
  CHECK(in_column_span(basis, in));
  CHECK(!in_column_span(basis, out));
}

TEST_CASE("structural operations") {
  ExactMatrix a = from_longs(2, 3, {1, 2, 3, 4, 5, 6});
  ExactMatrix t = a.transpose();
  CHECK(t.rows() == 3);
  CHECK(t.at(2, 1) == CycloNum(6));
  ExactMatrix b = from_longs(1, 3, {7, 8, 9});
  ExactMatrix st = a.stacked(b);
  CHECK(st.rows() == 3);
  CHECK(st.at(2, 0) == CycloNum(7));
  CHECK(a.scaled(CycloNum(2)).at(1, 2) == CycloNum(12));
  CHECK((a - a).is_zero());
  CHECK(from_longs(2, 2, {1, 0, 0, 2}).trace() == CycloNum(3));
  CHECK(ExactMatrix::identity(2) * a == a);
}

TEST_CASE("echelon pivot product tracks the determinant") {
  ExactMatrix m = from_longs(3, 3, {0, 1, 2,
                                    1, 0, 1,
                                    2, 1, 0});
  EchelonForm ef = echelon_form(m);
  CHECK(ef.rank == 3);
  CycloNum det = ef.pivot_product;
  if (ef.row_swaps % 2 == 1) det = -det;
  CHECK(det == determinant(m));
}
