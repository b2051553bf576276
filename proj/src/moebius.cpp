#include "fourlines/moebius.hpp"

#include "fourlines/matrix.hpp"

namespace fourlines {

P1Point::P1Point(const CycloNum& x0, const CycloNum& x1) : x_{x0, x1} {
  if (x_[0].is_zero() && x_[1].is_zero())
    throw std::invalid_argument("(0:0) is not a point of P^1");
  const CycloNum inv = (x_[0].is_zero() ? x_[1] : x_[0]).inverse();
  x_[0] *= inv;
  x_[1] *= inv;
}

ProjMatrix::ProjMatrix(const CycloNum& a, const CycloNum& b, const CycloNum& c, const CycloNum& d)
    : m_{a, b, c, d} {
  if (det().is_zero()) throw std::invalid_argument("singular 2x2 matrix is not in PGL_2");
}

ProjMatrix ProjMatrix::from_strings(const std::array<std::string, 4>& rowmajor) {
  return ProjMatrix(CycloNum::parse(rowmajor[0]), CycloNum::parse(rowmajor[1]),
                    CycloNum::parse(rowmajor[2]), CycloNum::parse(rowmajor[3]));
}

ProjMatrix ProjMatrix::canonical() const {
  for (const auto& e : m_) {
    if (!e.is_zero()) {
      const CycloNum inv = e.inverse();
      ProjMatrix r = *this;
      for (auto& x : r.m_) x *= inv;
      return r;
    }
  }
  return *this;  // unreachable for invertible matrices
}

ProjMatrix operator*(const ProjMatrix& a, const ProjMatrix& b) {
  ProjMatrix r;
  r.m_[0] = a.m_[0] * b.m_[0] + a.m_[1] * b.m_[2];
  r.m_[1] = a.m_[0] * b.m_[1] + a.m_[1] * b.m_[3];
  r.m_[2] = a.m_[2] * b.m_[0] + a.m_[3] * b.m_[2];
  r.m_[3] = a.m_[2] * b.m_[1] + a.m_[3] * b.m_[3];
  return r;
}

ProjMatrix ProjMatrix::proj_inverse() const {
  ProjMatrix r;
  r.m_[0] = m_[3];
  r.m_[1] = -m_[1];
  r.m_[2] = -m_[2];
  r.m_[3] = m_[0];
  return r;
}

ProjMatrix ProjMatrix::true_inverse() const {
  const CycloNum dinv = det().inverse();
  ProjMatrix r = proj_inverse();
  for (auto& x : r.m_) x *= dinv;
  return r;
}

P1Point ProjMatrix::apply(const P1Point& p) const {
  return P1Point(m_[0] * p.x0() + m_[1] * p.x1(), m_[2] * p.x0() + m_[3] * p.x1());
}

std::array<std::string, 4> ProjMatrix::to_strings() const {
  ProjMatrix c = canonical();
  return {c.m_[0].str(), c.m_[1].str(), c.m_[2].str(), c.m_[3].str()};
}

std::string ProjMatrix::str() const {
  auto s = to_strings();
  return "[" + s[0] + ", " + s[1] + "; " + s[2] + ", " + s[3] + "]";
}

std::optional<int> proj_order(const ProjMatrix& m, int cap) {
  ProjMatrix p = m;
  for (int n = 1; n <= cap; ++n) {
    if (p.is_scalar()) return n;
    p = (p * m).canonical();  // canonicalize to keep entries small
  }
  return std::nullopt;
}

P1FixedPoints fixed_points_p1(const ProjMatrix& m) {
  P1FixedPoints out;
  if (m.is_scalar()) {
    out.all_of_p1 = true;
    return out;
  }
  const CycloNum a = m.entry(0, 0), b = m.entry(0, 1), c = m.entry(1, 0), d = m.entry(1, 1);
  const CycloNum tr = a + d;
  const CycloNum disc = tr * tr - CycloNum(4) * m.det();
  const CycloNum half(Rational(1, 2));

  auto eigvec = [&](const CycloNum& lambda) {
    // (b, lambda - a) solves (M - lambda)v = 0 unless both entries vanish,
    // in which case the second row gives (lambda - d, c).
    if (!b.is_zero() || lambda != a) return P1Point(b, lambda - a);
    return P1Point(lambda - d, c);
  };

  if (disc.is_zero()) {
    out.points.push_back(eigvec(tr * half));
    out.degenerate = true;
    return out;
  }
  auto root = disc.sqrt_in_field();
  if (!root)
    throw IrrationalSpectrumError("fixed points of " + m.str() +
                                  " have eigenvalues outside Q(zeta_16)");
  const CycloNum l1 = (tr + *root) * half, l2 = (tr - *root) * half;
  out.points.push_back(eigvec(l1));
  out.points.push_back(eigvec(l2));
  return out;
}

std::optional<ProjMatrix> conjugating_element(const ProjMatrix& m, const ProjMatrix& n) {
  auto om = proj_order(m), on = proj_order(n);
  if (!om || !on || *om != *on) return std::nullopt;

  // Linear condition M X - X N = 0 on the four entries of X, row-major.
  ExactMatrix t(4, 4);
  auto idx = [](int r, int c) { return 2 * r + c; };
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      for (int k = 0; k < 2; ++k) {
        t.at(idx(r, c), idx(k, c)) += m.entry(r, k);   // (MX)_{rc}
        t.at(idx(r, c), idx(r, k)) -= n.entry(k, c);   // (XN)_{rc}
      }
    }
  ExactMatrix ker = kernel_basis(t);
  const int dim = ker.cols();
  if (dim == 0) return std::nullopt;

  // det restricted to the kernel span is a quadratic form, so if it is not
  // identically zero it is nonzero somewhere on the grid {0,1,2}^dim.
  std::vector<int> coeff(dim, 0);
  for (;;) {
    // next tuple (count in base 3, lexicographic from (0,...,0))
    int p = dim - 1;
    while (p >= 0 && coeff[p] == 2) coeff[p--] = 0;
    if (p < 0) break;
    ++coeff[p];
    std::array<CycloNum, 4> x{};
    for (int j = 0; j < dim; ++j) {
      if (coeff[j] == 0) continue;
      for (int e = 0; e < 4; ++e) x[e] += CycloNum(coeff[j]) * ker.at(e, j);
    }
    const CycloNum det = x[0] * x[3] - x[1] * x[2];
    if (det.is_zero()) continue;
    ProjMatrix cnd(x[0], x[1], x[2], x[3]);
    return cnd.canonical();
  }
  return std::nullopt;
}

}  // namespace fourlines
