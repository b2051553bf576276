// Intersection theory on (P^1)^4 and the numerical invariants derived from
// it: the Chow ring Z[h1..h4]/(h_i^2), Euler characteristics of anticanonical
// hypersurfaces, Kunneth cohomology of line bundles, Hodge numbers of free
// quotients, and the surface invariants of quotient surfaces of general type.
#pragma once

#include <array>
#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

#include "fourlines/product_autos.hpp"

namespace fourlines {

struct DivisibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of Z[h1..h4]/(h1^2,...,h4^2): coefficients indexed by the subset
// of factors appearing, encoded as a 4-bit mask (bit k = factor k+1).
class ChowClass {
 public:
  ChowClass() = default;
  static ChowClass one();
  // the hyperplane class of the k-th factor, k = 1..4
  static ChowClass h(int k);
  // h1 + h2 + h3 + h4
  static ChowClass big_h();

  const mpq_class& coeff(unsigned mask) const;
  void set_coeff(unsigned mask, const mpq_class& c);

  ChowClass scaled(const mpq_class& f) const;
  friend ChowClass operator+(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator-(const ChowClass& a, const ChowClass& b);
  // products with repeated factors die (h_i^2 = 0)
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend bool operator==(const ChowClass& a, const ChowClass& b);
  friend bool operator!=(const ChowClass& a, const ChowClass& b) { return !(a == b); }

  std::string str() const;

 private:
  std::map<unsigned, mpq_class> c_;  // zero coefficients dropped
};

// coefficient of h1 h2 h3 h4, the degree of a 0-cycle
mpq_class chow_degree(const ChowClass& c);

// k-th elementary symmetric polynomial in h1..h4
ChowClass sigma(int k);

// c(T_X) = prod (1 + 2 h_i)
ChowClass total_chern_x();
// degree-3 part of c(T_X)(1 + Y)^{-1} for Y = 2H; equals -16 sigma(3)
ChowClass c3_anticanonical_hypersurface();
// chi_top of a smooth member of |2H|: deg(c3 . 2H) = -128
long euler_anticanonical();

// h^q(O_X(d1,..,d4)) for q = 0..4 via the product formula:
// per factor h^0(O(d)) = d+1 for d >= 0, h^1(O(d)) = -d-1 for d <= -2.
std::array<long, 5> kunneth_cohomology(const std::array<int, 4>& d);

struct HodgeNumbers {
  long h11 = 0;
  long h12 = 0;
  long height() const { return h11 + h12; }
  long euler() const { return 2 * (h11 - h12); }
};

// Hodge numbers of the free quotient of a smooth anticanonical 3-fold by G:
// h11 = number of orbits of the factor permutation image of G,
// topological Euler number = -128 / |G| (DivisibilityError otherwise),
// h12 = h11 - euler/2.
HodgeNumbers quotient_hodge(const FiniteSubgroup& G);

struct SurfaceInvariants {
  long k2 = 0;       // K^2 of the quotient surface
  long chi = 0;      // chi(O) of the quotient surface
  long pg_cover = 0; // p_g of the covering surface, = 15
  long moduli_dim = 0;  // expected dimension 10 chi - 2 K^2
};

// Invariants of the quotient by a freely acting group of order n of a smooth
// surface T with K_T^2 = 48 and chi(O_T) = 16 (a (2H, H) complete
// intersection in X).  DivisibilityError unless n divides both.
SurfaceInvariants surface_invariants(long n);

}  // namespace fourlines
