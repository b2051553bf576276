// Exact arithmetic in the cyclotomic field Q(zeta_16).
//
// Elements are stored on the power basis 1, z, ..., z^7 with z^8 = -1
// (z a primitive 16th root of unity, so i = z^4).  Coefficients are exact
// GMP rationals; every operation is exact, no floating point anywhere.
//
// Text syntax: polynomial expressions in z with rational coefficients,
// e.g. "-1/2 + 1/2*z^4", "(1 + z^4) * (1/2 - 1/2*z^4)".  Printing is
// canonical (lowest degree first, normalized signs), and parse(print(x))
// == x for all x.
#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fourlines {

using Rational = mpq_class;

// Thrown on malformed CycloNum text; `pos` is a 0-based offset into the input.
struct CycloParseError : std::runtime_error {
  std::size_t pos;
  CycloParseError(const std::string& what, std::size_t pos_)
      : std::runtime_error(what + " (at position " + std::to_string(pos_) + ")"), pos(pos_) {}
};

class CycloNum {
 public:
  CycloNum() = default;
  CycloNum(long n) { c_[0] = n; }
  explicit CycloNum(const Rational& r) { c_[0] = r; }

  static CycloNum zero() { return CycloNum(); }
  static CycloNum one() { return CycloNum(1); }
  // z, the chosen primitive 16th root of unity.
  static CycloNum zeta() { return monomial(1, 1); }
  // i = z^4.
  static CycloNum i() { return monomial(1, 4); }
  // r * z^k (k is reduced mod 16 with z^8 = -1).
  static CycloNum monomial(const Rational& r, int k);

  const Rational& coeff(int k) const { return c_[k]; }
  Rational& coeff(int k) { return c_[k]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_one() const { return is_rational() && c_[0] == 1; }
  bool is_rational() const {
    for (int k = 1; k < 8; ++k)
      if (c_[k] != 0) return false;
    return true;
  }
  // Valid only when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  CycloNum operator-() const {
    CycloNum r;
    for (int k = 0; k < 8; ++k) r.c_[k] = -c_[k];
    return r;
  }
  CycloNum& operator+=(const CycloNum& o) {
    for (int k = 0; k < 8; ++k) c_[k] += o.c_[k];
    return *this;
  }
  CycloNum& operator-=(const CycloNum& o) {
    for (int k = 0; k < 8; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }

  // Convolution with the reduction z^(8+k) = -z^k.  Zero coefficients are
  // skipped; in this project most factors are sparse (roots of unity), which
  // keeps eliminations on signed-permutation matrices cheap.
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    CycloNum r;
    for (int j = 0; j < 8; ++j) {
      if (a.c_[j] == 0) continue;
      for (int k = 0; k < 8; ++k) {
        if (b.c_[k] == 0) continue;
        int d = j + k;
        if (d < 8)
          r.c_[d] += a.c_[j] * b.c_[k];
        else
          r.c_[d - 8] -= a.c_[j] * b.c_[k];
      }
    }
    return r;
  }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

  // Multiplicative inverse; throws std::domain_error on zero.
  CycloNum inverse() const;
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }
  CycloNum& operator/=(const CycloNum& o) { return *this = *this * o.inverse(); }

  // Integer power; negative exponents go through the inverse.
  CycloNum pow(long e) const;

  // Exact square root in Q(zeta_16) if one exists (decided over the tower
  // Q < Q(i) < Q(zeta_8) < Q(zeta_16)); nullopt when no square root lies in
  // the field.
  std::optional<CycloNum> sqrt_in_field() const;

  friend bool operator==(const CycloNum& a, const CycloNum& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }
  // Deterministic total order (coefficient-wise); used for canonical sorting,
  // not meaningful as a numeric order.
  friend bool operator<(const CycloNum& a, const CycloNum& b) {
    for (int k = 0; k < 8; ++k) {
      int c = cmp(a.c_[k], b.c_[k]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  // Canonical text form, lowest degree first, e.g. "-1/2 + 1/2*z^4".
  std::string str() const;
  // Parse the expression grammar described above.
  static CycloNum parse(const std::string& text);

 private:
  std::array<Rational, 8> c_{};  // value = sum c_[k] * z^k
};

inline CycloNum operator*(const Rational& r, const CycloNum& x) { return CycloNum(r) * x; }

// Exact square root of a rational, if it is one (sign and both of
// numerator/denominator perfect squares).
std::optional<Rational> rational_sqrt(const Rational& r);

}  // namespace fourlines
