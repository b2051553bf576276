// Multihomogeneous polynomials on X = (P^1)^4 and the lifted linear action
// of product automorphisms on the section spaces H^0(O_X(d1,d2,d3,d4)).
//
// A polynomial of multidegree (d1..d4) is stored densely on the monomial
// basis indexed lexicographically by the exponents (b1..b4) of x_{i1}
// (so each monomial is prod_i x_{i0}^{d_i-b_i} x_{i1}^{b_i}).  A LiftedAuto
// carries honest 2x2 matrices, not projective classes; its pullback
// ρ(g)p = p ∘ g^{-1} uses exact matrix inverses, so ρ(h∘g) = ρ(h)·ρ(g)
// holds on the nose and ρ is a left action.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fourlines/matrix.hpp"
#include "fourlines/product_autos.hpp"

namespace fourlines {

using MultiDegree = std::array<int, 4>;
// b_i = exponent of x_{i1}; the exponent of x_{i0} is d_i - b_i.
using ExponentTuple = std::array<int, 4>;

class MultiPoly {
 public:
  MultiPoly() : MultiPoly(MultiDegree{0, 0, 0, 0}) {}
  explicit MultiPoly(const MultiDegree& deg);

  static MultiPoly monomial_term(const MultiDegree& deg, const ExponentTuple& b,
                                 const CycloNum& c);
  // the single variable x_{factor,which} (factor 1..4, which 0 or 1)
  static MultiPoly variable(int factor, int which);

  const MultiDegree& degree() const { return deg_; }
  // dim H^0(O_X(d)) = prod (d_i + 1)
  int dimension() const { return int(coeff_.size()); }

  int index_of(const ExponentTuple& b) const;
  ExponentTuple exponent_at(int index) const;
  const CycloNum& coeff(const ExponentTuple& b) const { return coeff_[index_of(b)]; }
  const CycloNum& coeff_at(int index) const { return coeff_[index]; }
  void set_coeff(const ExponentTuple& b, const CycloNum& c) { coeff_[index_of(b)] = c; }

  bool is_zero() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);  // degrees add
  MultiPoly scaled(const CycloNum& f) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.deg_ == b.deg_ && a.coeff_ == b.coeff_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // value at the canonical coordinate representatives of pt; only the
  // zero/nonzero verdict is representative-independent
  CycloNum eval(const PointX& pt) const;

  // partial derivative with respect to x_{factor,which} (factor 1..4)
  MultiPoly partial(int factor, int which) const;
  // all eight partials at pt, ordered (1,0),(1,1),(2,0),...,(4,1)
  std::array<CycloNum, 8> gradient(const PointX& pt) const;

  // coefficients as a column vector in basis order
  ExactMatrix coefficient_column() const;
  static MultiPoly from_coefficient_column(const MultiDegree& deg, const ExactMatrix& col,
                                           int column = 0);

  std::string str() const;

  // JSON text: {"degree":[d1..d4],"terms":{"a1b1|a2b2|a3b3|a4b4": coeff}}
  // with a_i b_i the exponents of x_{i0}, x_{i1}
  std::string to_interchange() const;
  static MultiPoly from_interchange(const std::string& json_text);

 private:
  MultiDegree deg_;
  std::vector<CycloNum> coeff_;  // dense, lex in (b1..b4)
};

// A product automorphism together with chosen matrix representatives.
class LiftedAuto {
 public:
  LiftedAuto() = default;  // identity
  LiftedAuto(const std::array<ProjMatrix, 4>& reps, const Perm4& perm)
      : reps_(reps), perm_(perm) {}
  // slot-wise canonical representatives of g's matrices
  static LiftedAuto canonical_lift(const ProductAuto& g);

  const ProjMatrix& rep(int k) const { return reps_[k]; }
  const Perm4& perm() const { return perm_; }
  ProductAuto as_product_auto() const { return ProductAuto({reps_[0], reps_[1], reps_[2], reps_[3]}, perm_); }

  LiftedAuto inverse() const;  // exact matrix inverses
  friend LiftedAuto compose(const LiftedAuto& h, const LiftedAuto& g);

 private:
  std::array<ProjMatrix, 4> reps_{};
  Perm4 perm_{};
};

// (ρ(g)p)(x) = p(g^{-1} x), exactly.
MultiPoly pullback(const LiftedAuto& g, const MultiPoly& p);

// Matrix of ρ(g) on the monomial basis of the given multidegree: column c
// holds the coefficients of ρ(g) applied to basis monomial c.
ExactMatrix action_matrix(const LiftedAuto& g, const MultiDegree& deg);
// Same result, assembled with one task per basis monomial.
ExactMatrix action_matrix_parallel(const LiftedAuto& g, const MultiDegree& deg);
CycloNum action_trace(const LiftedAuto& g, const MultiDegree& deg);

// Basis (as matrix columns) of {p : ρ(g_k)p = λ_k p for all k}; may have
// zero columns. One eigenvalue per generator.
ExactMatrix eigensection_space(const std::vector<LiftedAuto>& gens,
                               const std::vector<CycloNum>& eigenvalues,
                               const MultiDegree& deg);

// Decision data for eigenvectors of a signed monomial permutation that are
// supported on all 16 extremal monomials of degree (2,2,2,2).
struct ObstructionResult {
  bool exists = false;
  // on failure: the first (lex) pair of extremal monomials that no single
  // eigensection can support simultaneously
  std::optional<std::pair<ExponentTuple, ExponentTuple>> witness;
};

// Precondition: every matrix slot of g is diagonal or antidiagonal (so g
// permutes the 16 extremal monomials x_{1i}^2 x_{2j}^2 x_{3k}^2 x_{4l}^2 up
// to scalars); throws std::invalid_argument otherwise.  Decides over C
// whether some eigenvector of the induced signed permutation has all 16
// extremal coordinates nonzero.
ObstructionResult full_support_eigenvector_exists(const LiftedAuto& g);

// The explicit section families: quadric_q(k) and quadric_q_prime(k) for
// k = 0..5 span two 6-dimensional spaces of multidegree (2,2,2,2);
// fano_section() is the multidegree-(1,1,1,1) section cutting the Fano
// 3-fold V.
MultiPoly quadric_q(int k);
MultiPoly quadric_q_prime(int k);
MultiPoly fano_section();

}  // namespace fourlines
