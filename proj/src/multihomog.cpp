#include "fourlines/multihomog.hpp"

#include <numeric>
#include <sstream>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fourlines {

namespace {

int degree_dimension(const MultiDegree& d) {
  int n = 1;
  for (int k = 0; k < 4; ++k) {
    if (d[k] < 0) throw std::invalid_argument("MultiPoly: negative degree");
    n *= d[k] + 1;
  }
  return n;
}

}  // namespace

MultiPoly::MultiPoly(const MultiDegree& deg) : deg_(deg), coeff_(degree_dimension(deg)) {}

MultiPoly MultiPoly::monomial_term(const MultiDegree& deg, const ExponentTuple& b,
                                   const CycloNum& c) {
  MultiPoly p(deg);
  p.set_coeff(b, c);
  return p;
}

MultiPoly MultiPoly::variable(int factor, int which) {
  if (factor < 1 || factor > 4 || which < 0 || which > 1)
    throw std::invalid_argument("MultiPoly::variable: factor 1..4, which 0..1");
  MultiDegree d{0, 0, 0, 0};
  d[factor - 1] = 1;
  ExponentTuple b{0, 0, 0, 0};
  b[factor - 1] = which;
  return monomial_term(d, b, CycloNum::one());
}

int MultiPoly::index_of(const ExponentTuple& b) const {
  int idx = 0;
  for (int k = 0; k < 4; ++k) {
    if (b[k] < 0 || b[k] > deg_[k])
      throw std::out_of_range("MultiPoly: exponent outside multidegree");
    idx = idx * (deg_[k] + 1) + b[k];
  }
  return idx;
}

ExponentTuple MultiPoly::exponent_at(int index) const {
  ExponentTuple b{};
  for (int k = 3; k >= 0; --k) {
    b[k] = index % (deg_[k] + 1);
    index /= deg_[k] + 1;
  }
  return b;
}

bool MultiPoly::is_zero() const {
  for (const auto& c : coeff_)
    if (!c.is_zero()) return false;
  return true;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.deg_ != b.deg_) throw std::invalid_argument("MultiPoly +: multidegrees differ");
  MultiPoly r = a;
  for (size_t k = 0; k < r.coeff_.size(); ++k) r.coeff_[k] += b.coeff_[k];
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  if (a.deg_ != b.deg_) throw std::invalid_argument("MultiPoly -: multidegrees differ");
  MultiPoly r = a;
  for (size_t k = 0; k < r.coeff_.size(); ++k) r.coeff_[k] -= b.coeff_[k];
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiDegree d{};
  for (int k = 0; k < 4; ++k) d[k] = a.deg_[k] + b.deg_[k];
  MultiPoly r(d);
  for (int ia = 0; ia < a.dimension(); ++ia) {
    if (a.coeff_[ia].is_zero()) continue;
    ExponentTuple ea = a.exponent_at(ia);
    for (int ib = 0; ib < b.dimension(); ++ib) {
      if (b.coeff_[ib].is_zero()) continue;
      ExponentTuple eb = b.exponent_at(ib);
      ExponentTuple e{};
      for (int k = 0; k < 4; ++k) e[k] = ea[k] + eb[k];
      r.coeff_[r.index_of(e)] += a.coeff_[ia] * b.coeff_[ib];
    }
  }
  return r;
}

MultiPoly MultiPoly::scaled(const CycloNum& f) const {
  MultiPoly r = *this;
  for (auto& c : r.coeff_) c *= f;
  return r;
}

CycloNum MultiPoly::eval(const PointX& pt) const {
  // per-factor power tables of the canonical coordinates
  std::array<std::vector<CycloNum>, 4> p0, p1;
  for (int k = 0; k < 4; ++k) {
    p0[k].resize(deg_[k] + 1);
    p1[k].resize(deg_[k] + 1);
    p0[k][0] = CycloNum::one();
    p1[k][0] = CycloNum::one();
    for (int e = 1; e <= deg_[k]; ++e) {
      p0[k][e] = p0[k][e - 1] * pt[k].x0();
      p1[k][e] = p1[k][e - 1] * pt[k].x1();
    }
  }
  CycloNum sum;
  for (int idx = 0; idx < dimension(); ++idx) {
    if (coeff_[idx].is_zero()) continue;
    ExponentTuple b = exponent_at(idx);
    CycloNum term = coeff_[idx];
    for (int k = 0; k < 4; ++k) term *= p0[k][deg_[k] - b[k]] * p1[k][b[k]];
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::partial(int factor, int which) const {
  if (factor < 1 || factor > 4 || which < 0 || which > 1)
    throw std::invalid_argument("MultiPoly::partial: factor 1..4, which 0..1");
  const int f = factor - 1;
  if (deg_[f] == 0) return MultiPoly(deg_);  // no dependence on this factor
  MultiDegree d = deg_;
  d[f] -= 1;
  MultiPoly r(d);
  for (int idx = 0; idx < dimension(); ++idx) {
    if (coeff_[idx].is_zero()) continue;
    ExponentTuple b = exponent_at(idx);
    int e = (which == 1) ? b[f] : deg_[f] - b[f];
    if (e == 0) continue;
    ExponentTuple nb = b;
    if (which == 1) nb[f] -= 1;
    // with which == 0 the x_{f0} exponent drops by one, which in the smaller
    // multidegree means the x_{f1} exponent b[f] is unchanged
    r.coeff_[r.index_of(nb)] += coeff_[idx] * CycloNum(e);
  }
  return r;
}

std::array<CycloNum, 8> MultiPoly::gradient(const PointX& pt) const {
  std::array<CycloNum, 8> g;
  for (int f = 1; f <= 4; ++f)
    for (int w = 0; w <= 1; ++w) g[2 * (f - 1) + w] = partial(f, w).eval(pt);
  return g;
}

ExactMatrix MultiPoly::coefficient_column() const {
  ExactMatrix col(dimension(), 1);
  for (int k = 0; k < dimension(); ++k) col.at(k, 0) = coeff_[k];
  return col;
}

MultiPoly MultiPoly::from_coefficient_column(const MultiDegree& deg, const ExactMatrix& col,
                                             int column) {
  MultiPoly p(deg);
  if (col.rows() != p.dimension() || column < 0 || column >= col.cols())
    throw std::invalid_argument("MultiPoly::from_coefficient_column: shape mismatch");
  for (int k = 0; k < p.dimension(); ++k) p.coeff_[k] = col.at(k, column);
  return p;
}

std::string MultiPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (int idx = 0; idx < dimension(); ++idx) {
    if (coeff_[idx].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    ExponentTuple b = exponent_at(idx);
    os << '(' << coeff_[idx].str() << ')';
    for (int k = 0; k < 4; ++k) {
      int a = deg_[k] - b[k];
      if (a > 0) {
        os << "*x" << (k + 1) << '0';
        if (a > 1) os << '^' << a;
      }
      if (b[k] > 0) {
        os << "*x" << (k + 1) << '1';
        if (b[k] > 1) os << '^' << b[k];
      }
    }
  }
  return first ? "0" : os.str();
}

std::string MultiPoly::to_interchange() const {
  for (int k = 0; k < 4; ++k)
    if (deg_[k] > 9)
      throw std::invalid_argument("to_interchange: single-digit exponents only");
  nlohmann::ordered_json terms = nlohmann::ordered_json::object();
  for (int idx = 0; idx < dimension(); ++idx) {
    if (coeff_[idx].is_zero()) continue;
    ExponentTuple b = exponent_at(idx);
    std::string key;
    for (int k = 0; k < 4; ++k) {
      if (k) key += '|';
      key += std::to_string(deg_[k] - b[k]);
      key += std::to_string(b[k]);
    }
    terms[key] = coeff_[idx].str();
  }
  nlohmann::ordered_json j;
  j["degree"] = deg_;
  j["terms"] = std::move(terms);
  return j.dump(2);
}

MultiPoly MultiPoly::from_interchange(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (!j.contains("degree") || !j["degree"].is_array() || j["degree"].size() != 4)
    throw std::invalid_argument("polynomial interchange: missing degree array of length 4");
  MultiDegree d{};
  for (int k = 0; k < 4; ++k) d[k] = j["degree"][k].get<int>();
  MultiPoly p(d);
  if (!j.contains("terms") || !j["terms"].is_object())
    throw std::invalid_argument("polynomial interchange: missing terms object");
  for (auto it = j["terms"].begin(); it != j["terms"].end(); ++it) {
    const std::string& key = it.key();
    ExponentTuple b{};
    size_t pos = 0;
    for (int k = 0; k < 4; ++k) {
      if (pos + 2 > key.size() || !isdigit(key[pos]) || !isdigit(key[pos + 1]))
        throw std::invalid_argument("polynomial interchange: bad exponent key '" + key + "'");
      int a = key[pos] - '0';
      int bb = key[pos + 1] - '0';
      if (a + bb != d[k])
        throw std::invalid_argument("polynomial interchange: exponents of factor " +
                                    std::to_string(k + 1) + " do not sum to the degree in '" +
                                    key + "'");
      b[k] = bb;
      pos += 2;
      if (k < 3) {
        if (pos >= key.size() || key[pos] != '|')
          throw std::invalid_argument("polynomial interchange: bad exponent key '" + key + "'");
        ++pos;
      }
    }
    if (pos != key.size())
      throw std::invalid_argument("polynomial interchange: bad exponent key '" + key + "'");
    p.set_coeff(b, CycloNum::parse(it.value().get<std::string>()));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Lifted action.
// ---------------------------------------------------------------------------

LiftedAuto LiftedAuto::canonical_lift(const ProductAuto& g) {
  return LiftedAuto({g.mat(0).canonical(), g.mat(1).canonical(), g.mat(2).canonical(),
                     g.mat(3).canonical()},
                    g.perm());
}

LiftedAuto LiftedAuto::inverse() const {
  Perm4 tau = perm_.inverse();
  return LiftedAuto({reps_[tau(0)].true_inverse(), reps_[tau(1)].true_inverse(),
                     reps_[tau(2)].true_inverse(), reps_[tau(3)].true_inverse()},
                    tau);
}

LiftedAuto compose(const LiftedAuto& h, const LiftedAuto& g) {
  std::array<ProjMatrix, 4> reps{
      h.rep(0) * g.rep(h.perm()(0)), h.rep(1) * g.rep(h.perm()(1)),
      h.rep(2) * g.rep(h.perm()(2)), h.rep(3) * g.rep(h.perm()(3))};
  std::array<int, 4> img{};
  for (int k = 0; k < 4; ++k) img[k] = g.perm()(h.perm()(k));
  return LiftedAuto(reps, Perm4(img));
}

MultiPoly pullback(const LiftedAuto& g, const MultiPoly& p) {
  const LiftedAuto inv = g.inverse();
  const Perm4& tau = inv.perm();
  const MultiDegree& d = p.degree();
  MultiDegree dout{};
  for (int j = 0; j < 4; ++j) dout[tau(j)] = d[j];
  MultiPoly out(dout);

  // coefficient vector of (c0 u + c1 v)^e as a polynomial in v
  auto linear_power = [](const CycloNum& c0, const CycloNum& c1, int e) {
    std::vector<CycloNum> v{CycloNum::one()};
    for (int t = 0; t < e; ++t) {
      std::vector<CycloNum> nv(v.size() + 1);
      for (size_t k = 0; k < v.size(); ++k) {
        nv[k] += v[k] * c0;
        nv[k + 1] += v[k] * c1;
      }
      v = std::move(nv);
    }
    return v;
  };
  auto convolve = [](const std::vector<CycloNum>& a, const std::vector<CycloNum>& b) {
    std::vector<CycloNum> r(a.size() + b.size() - 1);
    for (size_t x = 0; x < a.size(); ++x) {
      if (a[x].is_zero()) continue;
      for (size_t y = 0; y < b.size(); ++y) r[x + y] += a[x] * b[y];
    }
    return r;
  };

  for (int idx = 0; idx < p.dimension(); ++idx) {
    const CycloNum& c = p.coeff_at(idx);
    if (c.is_zero()) continue;
    ExponentTuple b = p.exponent_at(idx);
    // slot j of the substituted point is N_j applied to the variables of
    // factor tau(j): y_{j0} = n00 u + n01 v, y_{j1} = n10 u + n11 v
    std::array<std::vector<CycloNum>, 4> expansion;
    for (int j = 0; j < 4; ++j) {
      const ProjMatrix& n = inv.rep(j);
      expansion[j] = convolve(linear_power(n.entry(0, 0), n.entry(0, 1), d[j] - b[j]),
                              linear_power(n.entry(1, 0), n.entry(1, 1), b[j]));
    }
    ExponentTuple nb{};
    for (int k0 = 0; k0 <= d[0]; ++k0) {
      if (expansion[0][k0].is_zero()) continue;
      nb[tau(0)] = k0;
      for (int k1 = 0; k1 <= d[1]; ++k1) {
        if (expansion[1][k1].is_zero()) continue;
        nb[tau(1)] = k1;
        CycloNum c01 = expansion[0][k0] * expansion[1][k1];
        for (int k2 = 0; k2 <= d[2]; ++k2) {
          if (expansion[2][k2].is_zero()) continue;
          nb[tau(2)] = k2;
          CycloNum c012 = c01 * expansion[2][k2];
          for (int k3 = 0; k3 <= d[3]; ++k3) {
            if (expansion[3][k3].is_zero()) continue;
            nb[tau(3)] = k3;
            out.set_coeff(nb, out.coeff(nb) + c * c012 * expansion[3][k3]);
          }
        }
      }
    }
  }
  return out;
}

namespace {

void fill_action_column(const LiftedAuto& g, const MultiDegree& deg, int col, ExactMatrix& m) {
  MultiPoly basis = MultiPoly::monomial_term(
      deg, MultiPoly(deg).exponent_at(col), CycloNum::one());
  MultiPoly image = pullback(g, basis);
  for (int r = 0; r < m.rows(); ++r) m.at(r, col) = image.coeff_at(r);
}

}  // namespace

ExactMatrix action_matrix(const LiftedAuto& g, const MultiDegree& deg) {
  const int n = degree_dimension(deg);
  ExactMatrix m(n, n);
  for (int col = 0; col < n; ++col) fill_action_column(g, deg, col, m);
  return m;
}

ExactMatrix action_matrix_parallel(const LiftedAuto& g, const MultiDegree& deg) {
  const int n = degree_dimension(deg);
  ExactMatrix m(n, n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int col = 0; col < n; ++col) fill_action_column(g, deg, col, m);
  return m;
}

CycloNum action_trace(const LiftedAuto& g, const MultiDegree& deg) {
  return action_matrix(g, deg).trace();
}

ExactMatrix eigensection_space(const std::vector<LiftedAuto>& gens,
                               const std::vector<CycloNum>& eigenvalues,
                               const MultiDegree& deg) {
  if (gens.size() != eigenvalues.size())
    throw std::invalid_argument("eigensection_space: one eigenvalue per generator");
  const int n = degree_dimension(deg);
  if (gens.empty()) return ExactMatrix::identity(n);
  ExactMatrix stacked(0, n);
  for (size_t k = 0; k < gens.size(); ++k) {
    ExactMatrix shifted =
        action_matrix(gens[k], deg) - ExactMatrix::identity(n).scaled(eigenvalues[k]);
    stacked = (k == 0) ? shifted : stacked.stacked(shifted);
  }
  return kernel_basis(stacked);
}

ObstructionResult full_support_eigenvector_exists(const LiftedAuto& g) {
  for (int k = 0; k < 4; ++k)
    if (!g.rep(k).is_diagonal() && !g.rep(k).is_antidiagonal())
      throw std::invalid_argument(
          "full_support_eigenvector_exists: matrix slots must be diagonal or antidiagonal "
          "to preserve the extremal monomial frame");

  const MultiDegree deg{2, 2, 2, 2};
  const MultiPoly shape(deg);
  // the 16 extremal exponent tuples (b_i in {0,2}), ascending mask = lex order
  std::array<ExponentTuple, 16> extremal;
  for (int m = 0; m < 16; ++m)
    for (int k = 0; k < 4; ++k) extremal[m][k] = ((m >> (3 - k)) & 1) ? 2 : 0;
  auto extremal_index = [&](const ExponentTuple& b) {
    int m = 0;
    for (int k = 0; k < 4; ++k) {
      if (b[k] != 0 && b[k] != 2) return -1;
      m = (m << 1) | (b[k] == 2 ? 1 : 0);
    }
    return m;
  };

  // induced signed permutation: monomial m -> lambda[m] * monomial target[m]
  std::array<int, 16> target{};
  std::array<CycloNum, 16> lambda;
  for (int m = 0; m < 16; ++m) {
    MultiPoly image =
        pullback(g, MultiPoly::monomial_term(deg, extremal[m], CycloNum::one()));
    int found = -1;
    for (int idx = 0; idx < image.dimension(); ++idx) {
      if (image.coeff_at(idx).is_zero()) continue;
      int t = extremal_index(shape.exponent_at(idx));
      if (t < 0 || found >= 0)
        throw std::invalid_argument(
            "full_support_eigenvector_exists: action does not permute the extremal monomials");
      found = t;
      lambda[m] = image.coeff_at(idx);
    }
    if (found < 0)
      throw std::invalid_argument(
          "full_support_eigenvector_exists: extremal monomial mapped to zero");
    target[m] = found;
  }

  // cycles of the permutation, keyed by their smallest monomial index
  std::array<bool, 16> seen{};
  std::vector<int> cycle_min, cycle_len;
  std::vector<CycloNum> cycle_prod;
  for (int start = 0; start < 16; ++start) {
    if (seen[start]) continue;
    CycloNum prod = CycloNum::one();
    int len = 0, cur = start;
    do {
      seen[cur] = true;
      prod *= lambda[cur];
      cur = target[cur];
      ++len;
    } while (cur != start);
    cycle_min.push_back(start);
    cycle_len.push_back(len);
    cycle_prod.push_back(prod);
  }

  // A full-support eigenvector exists iff some mu in C* satisfies
  // mu^{L_c} = prod_c for every cycle c.  With G = gcd(L_c) and Theta the
  // Bezout combination of the cycle products, that holds iff
  // Theta^{L_c/G} = prod_c for every c (mu can then be any G-th root of
  // Theta, which exists in C*).
  std::function<long(long, long, long&, long&)> egcd = [&](long a, long b, long& x,
                                                           long& y) -> long {
    if (b == 0) {
      x = 1;
      y = 0;
      return a;
    }
    long x1, y1;
    long d = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return d;
  };

  long G = cycle_len[0];
  CycloNum theta = cycle_prod[0];
  for (size_t c = 1; c < cycle_len.size(); ++c) {
    long x, y;
    long g2 = egcd(G, cycle_len[c], x, y);
    theta = theta.pow(x) * cycle_prod[c].pow(y);
    G = g2;
  }
  bool ok = true;
  for (size_t c = 0; c < cycle_len.size() && ok; ++c)
    ok = (theta.pow(cycle_len[c] / G) == cycle_prod[c]);

  ObstructionResult res;
  res.exists = ok;
  if (ok) return res;

  // witness: first pair of cycles (ordered by smallest monomial index) that
  // is already jointly unsolvable
  for (size_t c1 = 0; c1 < cycle_len.size(); ++c1) {
    for (size_t c2 = c1 + 1; c2 < cycle_len.size(); ++c2) {
      long x, y;
      long g2 = egcd(cycle_len[c1], cycle_len[c2], x, y);
      CycloNum th = cycle_prod[c1].pow(x) * cycle_prod[c2].pow(y);
      if (th.pow(cycle_len[c1] / g2) != cycle_prod[c1] ||
          th.pow(cycle_len[c2] / g2) != cycle_prod[c2]) {
        res.witness = std::make_pair(extremal[cycle_min[c1]], extremal[cycle_min[c2]]);
        return res;
      }
    }
  }
  // globally unsolvable but pairwise solvable: report the first cycle that
  // fails against the Bezout combination, paired with the lead cycle
  for (size_t c = 0; c < cycle_len.size(); ++c)
    if (theta.pow(cycle_len[c] / G) != cycle_prod[c]) {
      res.witness = std::make_pair(extremal[cycle_min[0]], extremal[cycle_min[c]]);
      return res;
    }
  return res;
}

// ---------------------------------------------------------------------------
// The explicit section families.
// ---------------------------------------------------------------------------

namespace {

MultiPoly X(int f, int w) { return MultiPoly::variable(f, w); }
MultiPoly sq(const MultiPoly& p) { return p * p; }

}  // namespace

MultiPoly quadric_q(int k) {
  switch (k) {
    case 0:
      return X(1, 0) * X(1, 1) * X(2, 0) * X(2, 1) * X(3, 0) * X(3, 1) * X(4, 0) * X(4, 1);
    case 1:
      return (sq(X(1, 1)) * sq(X(2, 0)) + sq(X(1, 0)) * sq(X(2, 1))) *
             (sq(X(3, 1)) * sq(X(4, 0)) + sq(X(3, 0)) * sq(X(4, 1)));
    case 2:
      return X(2, 0) * X(2, 1) * X(3, 0) * X(3, 1) * (sq(X(1, 0)) + sq(X(1, 1))) *
                 (sq(X(4, 0)) + sq(X(4, 1))) -
             X(1, 0) * X(1, 1) * X(4, 0) * X(4, 1) * (sq(X(2, 0)) + sq(X(2, 1))) *
                 (sq(X(3, 0)) + sq(X(3, 1)));
    case 3:
      return X(1, 0) * X(1, 1) * X(3, 0) * X(3, 1) * (sq(X(2, 0)) + sq(X(2, 1))) *
                 (sq(X(4, 0)) + sq(X(4, 1))) +
             X(2, 0) * X(2, 1) * X(4, 0) * X(4, 1) * (sq(X(1, 0)) + sq(X(1, 1))) *
                 (sq(X(3, 0)) + sq(X(3, 1)));
    case 4:
      return (sq(X(1, 0)) + sq(X(1, 1))) * (sq(X(2, 0)) + sq(X(2, 1))) *
             (sq(X(3, 0)) + sq(X(3, 1))) * (sq(X(4, 0)) + sq(X(4, 1)));
    case 5:
      return (sq(X(1, 0)) * sq(X(2, 0)) + sq(X(1, 1)) * sq(X(2, 1))) *
             (sq(X(3, 0)) * sq(X(4, 0)) + sq(X(3, 1)) * sq(X(4, 1)));
    default:
      throw std::invalid_argument("quadric_q: index 0..5");
  }
}

MultiPoly quadric_q_prime(int k) {
  if (k == 2)
    return X(2, 0) * X(2, 1) * X(3, 0) * X(3, 1) * (sq(X(1, 0)) - sq(X(1, 1))) *
               (sq(X(4, 0)) - sq(X(4, 1))) -
           X(1, 0) * X(1, 1) * X(4, 0) * X(4, 1) * (sq(X(2, 0)) - sq(X(2, 1))) *
               (sq(X(3, 0)) - sq(X(3, 1)));
  return quadric_q(k);  // the two families differ only in the k = 2 member
}

MultiPoly fano_section() {
  MultiPoly first = (X(2, 0) * X(3, 0) - X(2, 1) * X(3, 1)) *
                    (X(1, 1) * X(4, 0) + X(1, 0) * X(4, 1));
  MultiPoly second = (X(2, 0) * X(3, 1) - X(2, 1) * X(3, 0)) *
                     (X(1, 0) * X(4, 0) + X(1, 1) * X(4, 1));
  return first - second.scaled(CycloNum::i());
}

}  // namespace fourlines
