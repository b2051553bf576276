#include "fourlines/chow.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace fourlines {

namespace {
int popcount4(unsigned m) { return __builtin_popcount(m & 0xFu); }
}  // namespace

ChowClass ChowClass::one() {
  ChowClass c;
  c.c_[0u] = 1;
  return c;
}

ChowClass ChowClass::h(int k) {
  if (k < 1 || k > 4) throw std::out_of_range("ChowClass::h: factor index out of range");
  ChowClass c;
  c.c_[1u << (k - 1)] = 1;
  return c;
}

ChowClass ChowClass::big_h() {
  ChowClass c;
  for (int k = 1; k <= 4; ++k) c.c_[1u << (k - 1)] = 1;
  return c;
}

const mpq_class& ChowClass::coeff(unsigned mask) const {
  static const mpq_class zero(0);
  auto it = c_.find(mask & 0xFu);
  return it == c_.end() ? zero : it->second;
}

void ChowClass::set_coeff(unsigned mask, const mpq_class& c) {
  if (c == 0)
    c_.erase(mask & 0xFu);
  else
    c_[mask & 0xFu] = c;
}

ChowClass ChowClass::scaled(const mpq_class& f) const {
  ChowClass out;
  if (f == 0) return out;
  for (const auto& [m, v] : c_) out.c_[m] = v * f;
  return out;
}

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
  ChowClass out = a;
  for (const auto& [m, v] : b.c_) {
    mpq_class s = out.coeff(m) + v;
    out.set_coeff(m, s);
  }
  return out;
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) {
  return a + b.scaled(mpq_class(-1));
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  ChowClass out;
  for (const auto& [ma, va] : a.c_)
    for (const auto& [mb, vb] : b.c_) {
      if (ma & mb) continue;  // a repeated h_i squares to zero
      unsigned m = ma | mb;
      mpq_class s = out.coeff(m) + va * vb;
      out.set_coeff(m, s);
    }
  return out;
}

bool operator==(const ChowClass& a, const ChowClass& b) { return a.c_ == b.c_; }

std::string ChowClass::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, v] : c_) {
    if (!first) os << " + ";
    first = false;
    os << v;
    for (int k = 0; k < 4; ++k)
      if (m & (1u << k)) os << "*h" << k + 1;
  }
  return os.str();
}

mpq_class chow_degree(const ChowClass& c) { return c.coeff(0xFu); }

ChowClass sigma(int k) {
  if (k < 0 || k > 4) throw std::out_of_range("sigma: index out of range");
  ChowClass out;
  for (unsigned m = 0; m < 16; ++m)
    if (popcount4(m) == k) out.set_coeff(m, 1);
  return out;
}

ChowClass total_chern_x() {
  ChowClass c = ChowClass::one();
  for (int k = 1; k <= 4; ++k) c = c * (ChowClass::one() + ChowClass::h(k).scaled(2));
  return c;
}

namespace {
ChowClass degree_part(const ChowClass& c, int k) {
  ChowClass out;
  for (unsigned m = 0; m < 16; ++m)
    if (popcount4(m) == k) out.set_coeff(m, c.coeff(m));
  return out;
}
}  // namespace

ChowClass c3_anticanonical_hypersurface() {
  ChowClass y = ChowClass::big_h().scaled(2);
  // (1 + Y)^{-1} modulo degree 5 terms
  ChowClass inv = ChowClass::one();
  ChowClass pw = ChowClass::one();
  for (int k = 1; k <= 4; ++k) {
    pw = pw * y;
    inv = inv + pw.scaled((k % 2) ? -1 : 1);
  }
  return degree_part(total_chern_x() * inv, 3);
}

long euler_anticanonical() {
  ChowClass y = ChowClass::big_h().scaled(2);
  mpq_class d = chow_degree(c3_anticanonical_hypersurface() * y);
  if (d.get_den() != 1) throw std::logic_error("euler_anticanonical: non-integral degree");
  return d.get_num().get_si();
}

std::array<long, 5> kunneth_cohomology(const std::array<int, 4>& d) {
  std::array<std::array<long, 2>, 4> hq{};  // hq[k] = {h^0, h^1} of O_{P^1}(d_k)
  for (int k = 0; k < 4; ++k) {
    hq[k][0] = d[k] >= 0 ? d[k] + 1 : 0;
    hq[k][1] = d[k] <= -2 ? -d[k] - 1 : 0;
  }
  std::array<long, 5> out{};
  for (unsigned m = 0; m < 16; ++m) {
    long prod = 1;
    for (int k = 0; k < 4; ++k) prod *= hq[k][(m >> k) & 1u];
    out[popcount4(m)] += prod;
  }
  return out;
}

HodgeNumbers quotient_hodge(const FiniteSubgroup& G) {
  // orbits of the factor permutation image on {0,1,2,3} via union-find
  std::array<int, 4> parent{0, 1, 2, 3};
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : G.elements)
    for (int k = 0; k < 4; ++k) {
      int a = find(k), b = find(g.perm()(k));
      if (a != b) parent[a] = b;
    }
  std::set<int> roots;
  for (int k = 0; k < 4; ++k) roots.insert(find(k));

  long chi_top = euler_anticanonical();
  if (chi_top % G.order() != 0)
    throw DivisibilityError("quotient_hodge: group order does not divide the Euler number");
  long e = chi_top / G.order();
  HodgeNumbers h;
  h.h11 = long(roots.size());
  h.h12 = h.h11 - e / 2;
  return h;
}

SurfaceInvariants surface_invariants(long n) {
  if (n <= 0) throw std::invalid_argument("surface_invariants: order must be positive");
  if (48 % n != 0)
    throw DivisibilityError("surface_invariants: order does not divide K^2 = 48");
  if (16 % n != 0)
    throw DivisibilityError("surface_invariants: order does not divide chi(O) = 16");
  SurfaceInvariants s;
  s.k2 = 48 / n;
  s.chi = 16 / n;
  s.pg_cover = 15;
  s.moduli_dim = 10 * s.chi - 2 * s.k2;
  return s;
}

}  // namespace fourlines
