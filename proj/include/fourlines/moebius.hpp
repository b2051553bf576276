// Elements of PGL_2 over Q(zeta_16) and points of P^1.
//
// A ProjMatrix is an invertible 2x2 matrix considered up to scalars; the
// canonical representative rescales so the first nonzero entry in row-major
// order is 1, which makes equality, hashing and printed forms exact and
// deterministic.  Fixed points on P^1 are computed by factoring the
// characteristic polynomial; the discriminant's square root is decided
// exactly inside Q(zeta_16), and a spectrum outside the field is reported
// as a structured error rather than approximated.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourlines/cyclo.hpp"

namespace fourlines {

// Eigenvalues of a Moebius map do not lie in Q(zeta_16).
struct IrrationalSpectrumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A point of P^1, stored by its canonical representative (first nonzero
// homogeneous coordinate scaled to 1).
class P1Point {
 public:
  P1Point() : x_{CycloNum::one(), CycloNum::zero()} {}
  P1Point(const CycloNum& x0, const CycloNum& x1);

  const CycloNum& x0() const { return x_[0]; }
  const CycloNum& x1() const { return x_[1]; }

  friend bool operator==(const P1Point& a, const P1Point& b) { return a.x_ == b.x_; }
  friend bool operator!=(const P1Point& a, const P1Point& b) { return !(a == b); }
  friend bool operator<(const P1Point& a, const P1Point& b) {
    if (a.x_[0] != b.x_[0]) return a.x_[0] < b.x_[0];
    return a.x_[1] < b.x_[1];
  }

  std::string str() const { return "(" + x_[0].str() + " : " + x_[1].str() + ")"; }

 private:
  std::array<CycloNum, 2> x_;
};

class ProjMatrix {
 public:
  // identity
  ProjMatrix() : m_{CycloNum::one(), CycloNum::zero(), CycloNum::zero(), CycloNum::one()} {}
  // row-major entries (a b; c d); must be invertible
  ProjMatrix(const CycloNum& a, const CycloNum& b, const CycloNum& c, const CycloNum& d);

  static ProjMatrix from_strings(const std::array<std::string, 4>& rowmajor);

  const CycloNum& entry(int r, int c) const { return m_[2 * r + c]; }

  ProjMatrix canonical() const;
  // equality as elements of PGL_2 (i.e. up to scalar)
  friend bool operator==(const ProjMatrix& a, const ProjMatrix& b) {
    return a.canonical().m_ == b.canonical().m_;
  }
  friend bool operator!=(const ProjMatrix& a, const ProjMatrix& b) { return !(a == b); }

  friend ProjMatrix operator*(const ProjMatrix& a, const ProjMatrix& b);
  // inverse in PGL_2 (adjugate; no division needed)
  ProjMatrix proj_inverse() const;
  // exact matrix inverse of this representative (used for section lifts,
  // where the scalar matters)
  ProjMatrix true_inverse() const;

  CycloNum det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  CycloNum trace_raw() const { return m_[0] + m_[3]; }
  bool is_scalar() const { return m_[1].is_zero() && m_[2].is_zero() && m_[0] == m_[3]; }
  bool is_diagonal() const { return m_[1].is_zero() && m_[2].is_zero(); }
  bool is_antidiagonal() const { return m_[0].is_zero() && m_[3].is_zero(); }

  P1Point apply(const P1Point& p) const;

  std::array<std::string, 4> to_strings() const;
  std::string str() const;

 private:
  std::array<CycloNum, 4> m_;  // row-major
};

// Multiplicative order in PGL_2, or nullopt if it exceeds `cap`.
std::optional<int> proj_order(const ProjMatrix& m, int cap = 64);

struct P1FixedPoints {
  bool all_of_p1 = false;        // the map is the identity on P^1
  std::vector<P1Point> points;   // 1 or 2 points otherwise
  bool degenerate = false;       // double eigenvalue, a single fixed point
};

// Fixed points of a Moebius map on P^1.  Throws IrrationalSpectrumError if
// the eigenvalues do not lie in Q(zeta_16).
P1FixedPoints fixed_points_p1(const ProjMatrix& m);

// Some invertible C with C^{-1} M C = N, or nullopt if M and N are not
// conjugate over the field (including an order mismatch).  The kernel of
// X -> MX - XN is searched on the grid {0,1,2}^dim, which is exhaustive for
// the degree-2 determinant form, so "nullopt" is a proof of non-conjugacy
// over Q(zeta_16) whenever the orders match.
std::optional<ProjMatrix> conjugating_element(const ProjMatrix& m, const ProjMatrix& n);

}  // namespace fourlines
