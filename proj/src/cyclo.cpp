#include "fourlines/cyclo.hpp"

#include <cctype>
#include <vector>

namespace fourlines {

CycloNum CycloNum::monomial(const Rational& r, int k) {
  k %= 16;
  if (k < 0) k += 16;
  CycloNum x;
  if (k < 8)
    x.c_[k] = r;
  else
    x.c_[k - 8] = -r;
  return x;
}

CycloNum CycloNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum r = one(), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Inversion.  Extended Euclid in Q[t] against the (irreducible) modulus
// t^8 + 1: for a != 0, gcd(a, t^8+1) is a nonzero constant g with
// u*a + v*(t^8+1) = g, so a^{-1} = u/g.
// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<Rational>;  // coefficient k = coefficient of t^k

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// quotient of a by b (b nonzero); a becomes the remainder
Poly poly_divmod(Poly& a, const Poly& b) {
  Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    poly_trim(a);
    if (a.empty()) break;
  }
  return q;
}

}  // namespace

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_16)");
  // r0 = modulus, r1 = this; keep Bezout coefficients for r1 only.
  Poly r0(9, Rational(0));
  r0[0] = 1;
  r0[8] = 1;
  Poly r1;
  for (int k = 0; k < 8; ++k) r1.push_back(c_[k]);
  poly_trim(r1);
  Poly u0, u1{Rational(1)};  // u0 = 0, u1 = 1, invariant u_k * this = r_k (mod t^8+1)
  while (r1.size() > 1) {
    Poly q = poly_divmod(r0, r1);  // r0 -> remainder
    std::swap(r0, r1);             // (r0, r1) = (r1, r0 mod r1)
    // u_next = u0 - q*u1
    Poly un = u0;
    if (un.size() < q.size() + u1.size()) un.resize(q.size() + u1.size(), Rational(0));
    for (std::size_t a = 0; a < q.size(); ++a) {
      if (q[a] == 0) continue;
      for (std::size_t b = 0; b < u1.size(); ++b) un[a + b] -= q[a] * u1[b];
    }
    poly_trim(un);
    u0 = u1;
    u1 = un;
  }
  // r1 is the constant gcd; u1 * this = r1 (mod t^8+1)
  Rational g = r1[0];
  CycloNum inv;
  for (std::size_t k = 0; k < u1.size(); ++k) {
    // u1 has degree < 8 here (Bezout coefficient against a degree-8 modulus)
    inv.c_[k] = u1[k] / g;
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Square roots.  The field sits at the top of a tower of quadratic
// extensions K_0 = Q, K_k = K_{k-1}(g_k) with g_k^2 = g_{k-1} and g_1^2 = -1;
// K_3 = Q(zeta_16).  An element of K_k is a coefficient vector of length 2^k
// over Q with the reduction g_k^(2^k) = -1.  sqrt is decided recursively:
// write x = u + g_k v with u, v in K_{k-1}; x^2 = D splits into
// u^2 + g_{k-1} v^2 = D_even and 2uv = D_odd, which reduces to square roots
// one level down (via the resolvent quadratic when D_odd != 0).
// ---------------------------------------------------------------------------

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  if (r == 0) return Rational(0);
  const mpz_class &num = r.get_num(), &den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(sn, sd);
}

namespace {

using Vec = std::vector<Rational>;  // element of K_k, size 2^k

bool vec_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec vec_mul(const Vec& a, const Vec& b) {
  std::size_t n = a.size();
  Vec r(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j] == 0) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (b[k] == 0) continue;
      std::size_t d = j + k;
      if (d < n)
        r[d] += a[j] * b[k];
      else
        r[d - n] -= a[j] * b[k];
    }
  }
  return r;
}

Vec vec_sub(Vec a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

Vec vec_scale(Vec a, const Rational& f) {
  for (auto& x : a) x *= f;
  return a;
}

// inverse modulo t^n + 1, n a power of two; same Euclid as CycloNum::inverse
Vec vec_inverse(const Vec& a) {
  std::size_t n = a.size();
  Poly r0(n + 1, Rational(0));
  r0[0] = 1;
  r0[n] = 1;
  Poly r1(a);
  poly_trim(r1);
  Poly u0, u1{Rational(1)};
  while (r1.size() > 1) {
    Poly q = poly_divmod(r0, r1);
    std::swap(r0, r1);
    Poly un = u0;
    if (un.size() < q.size() + u1.size()) un.resize(q.size() + u1.size(), Rational(0));
    for (std::size_t x = 0; x < q.size(); ++x) {
      if (q[x] == 0) continue;
      for (std::size_t y = 0; y < u1.size(); ++y) un[x + y] -= q[x] * u1[y];
    }
    poly_trim(un);
    u0 = u1;
    u1 = un;
  }
  Rational g = r1[0];
  Vec inv(n, Rational(0));
  for (std::size_t k = 0; k < u1.size(); ++k) inv[k] = u1[k] / g;
  return inv;
}

// x with x*x == d, if one exists at this level
std::optional<Vec> vec_sqrt(const Vec& d) {
  std::size_t n = d.size();
  if (n == 1) {
    auto r = rational_sqrt(d[0]);
    if (!r) return std::nullopt;
    return Vec{*r};
  }
  std::size_t h = n / 2;
  Vec d0(h), d1(h);
  for (std::size_t k = 0; k < h; ++k) {
    d0[k] = d[2 * k];
    d1[k] = d[2 * k + 1];
  }
  Vec gen(h, Rational(0));  // g_{k-1} as an element of K_{k-1}
  if (h == 1)
    gen[0] = -1;  // level-1 squares to -1
  else
    gen[1] = 1;
  auto lift = [h, n](const Vec& low, bool odd) {
    Vec out(n, Rational(0));
    for (std::size_t k = 0; k < h; ++k) out[2 * k + (odd ? 1 : 0)] = low[k];
    return out;
  };
  if (vec_zero(d1)) {
    // x = u with u^2 = d0, or x = g*v with v^2 = d0 / g^2 = d0 * gen^{-1}
    if (auto u = vec_sqrt(d0)) return lift(*u, false);
    if (auto v = vec_sqrt(vec_mul(d0, vec_inverse(gen)))) return lift(*v, true);
    return std::nullopt;
  }
  // u != 0 here; u^2 is a root of s^2 - d0 s + gen*d1^2/4 = 0
  Vec disc = vec_sub(vec_mul(d0, d0), vec_mul(gen, vec_mul(d1, d1)));
  auto rdisc = vec_sqrt(disc);
  if (!rdisc) return std::nullopt;
  for (int sign = 0; sign < 2; ++sign) {
    Vec s = vec_scale(sign == 0 ? vec_sub(d0, vec_scale(*rdisc, Rational(-1)))
                                : vec_sub(d0, *rdisc),
                      Rational(1, 2));
    if (vec_zero(s)) continue;
    auto u = vec_sqrt(s);
    if (!u || vec_zero(*u)) continue;
    Vec v = vec_mul(d1, vec_inverse(vec_scale(*u, Rational(2))));
    Vec x = lift(*u, false);
    Vec gv = lift(v, true);
    for (std::size_t k = 0; k < n; ++k) x[k] += gv[k];
    if (vec_mul(x, x) == d) return x;
  }
  return std::nullopt;
}

}  // namespace

std::optional<CycloNum> CycloNum::sqrt_in_field() const {
  Vec d(8);
  for (int k = 0; k < 8; ++k) d[k] = c_[k];
  auto r = vec_sqrt(d);
  if (!r) return std::nullopt;
  CycloNum out;
  for (int k = 0; k < 8; ++k) out.c_[k] = (*r)[k];
  return out;
}

// ---------------------------------------------------------------------------
// Printing and parsing.
// ---------------------------------------------------------------------------

std::string CycloNum::str() const {
  std::string out;
  for (int k = 0; k < 8; ++k) {
    if (c_[k] == 0) continue;
    Rational a = c_[k];
    bool neg = a < 0;
    if (neg) a = -a;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string coeff = a.get_str();
    if (k == 0) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += (k == 1) ? "z" : "z^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) { throw CycloParseError(msg, pos); }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return mpz_class(s.substr(start, pos - start));
  }

  // primary := integer | 'z' | '(' expr ')'
  CycloNum primary() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) return CycloNum(Rational(integer()));
    if (c == 'z') {
      ++pos;
      return CycloNum::zeta();
    }
    if (c == '(') {
      ++pos;
      CycloNum e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    fail("expected number, 'z' or '('");
  }

  // factor := ('+'|'-')* primary ('^' integer)?
  CycloNum factor() {
    skip_ws();
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    CycloNum base = primary();
    skip_ws();
    if (eat('^')) {
      mpz_class e = integer();
      if (!e.fits_slong_p()) fail("exponent out of range");
      return base.pow(e.get_si());
    }
    return base;
  }

  CycloNum term() {
    CycloNum acc = factor();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        CycloNum d = factor();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  CycloNum expr() {
    CycloNum acc = term();
    for (;;) {
      skip_ws();
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }
};

}  // namespace

CycloNum CycloNum::parse(const std::string& text) {
  Parser p(text);
  CycloNum v = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters");
  return v;
}

}  // namespace fourlines
