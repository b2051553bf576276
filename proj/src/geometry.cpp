#include "fourlines/geometry.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fourlines/matrix.hpp"

namespace fourlines {

namespace {

// chart of a point: the index (0 or 1) of the coordinate kept affine; the
// other (larger-indexed nonzero) coordinate is normalized to 1
int chart_coordinate(const P1Point& p) { return p.x1().is_zero() ? 1 : 0; }

// affine value of p in its own chart
CycloNum chart_value(const P1Point& p) {
  int num = chart_coordinate(p);
  const CycloNum& den = num == 0 ? p.x1() : p.x0();
  const CycloNum& nom = num == 0 ? p.x0() : p.x1();
  return nom / den;
}

}  // namespace

std::vector<FixedComponent> fixed_locus(const ProductAuto& g) {
  const auto cycles = g.perm().cycles();

  struct CycleData {
    std::vector<int> members;
    bool free = false;
    // fixed points of the composite at the cycle's first member, with a
    // degeneracy flag each
    std::vector<std::pair<P1Point, bool>> anchors;
  };
  std::vector<CycleData> data;
  int free_count = 0;

  for (const auto& cyc : cycles) {
    CycleData cd;
    cd.members = cyc;
    ProjMatrix w;
    for (int m : cyc) w = w * g.mat(m);
    P1FixedPoints fp = fixed_points_p1(w);
    if (fp.all_of_p1) {
      cd.free = true;
      ++free_count;
    } else {
      for (const auto& p : fp.points) cd.anchors.emplace_back(p, fp.degenerate);
    }
    data.push_back(std::move(cd));
  }

  if (free_count > 0) {
    FixedComponent comp;
    comp.positive_dim = true;
    comp.dimension = free_count;
    std::ostringstream os;
    os << "free cycles:";
    for (const auto& cd : data) {
      if (!cd.free) continue;
      os << " (";
      for (size_t k = 0; k < cd.members.size(); ++k)
        os << (k ? " " : "") << cd.members[k] + 1;
      os << ")";
    }
    comp.description = os.str();
    return {comp};
  }

  // Cartesian product of per-cycle anchor choices, earlier cycles slowest.
  std::vector<FixedComponent> out;
  std::vector<size_t> choice(data.size(), 0);
  while (true) {
    FixedComponent comp;
    for (size_t c = 0; c < data.size(); ++c) {
      const auto& [anchor, degen] = data[c].anchors[choice[c]];
      comp.degenerate = comp.degenerate || degen;
      // propagate x_{i_{k+1}} = A_{i_k}^{-1} x_{i_k} around the cycle
      P1Point cur = anchor;
      comp.point[data[c].members[0]] = cur;
      for (size_t k = 0; k + 1 < data[c].members.size(); ++k) {
        cur = g.mat(data[c].members[k]).proj_inverse().apply(cur);
        comp.point[data[c].members[k + 1]] = cur;
      }
    }
    out.push_back(std::move(comp));
    // increment the mixed-radix choice vector, last cycle fastest
    int c = int(data.size()) - 1;
    while (c >= 0 && ++choice[c] == data[c].anchors.size()) {
      choice[c] = 0;
      --c;
    }
    if (c < 0) break;
  }
  return out;
}

std::vector<GroupFixedPoint> group_fixed_locus(const FiniteSubgroup& G) {
  std::map<std::string, GroupFixedPoint> isolated;
  std::vector<GroupFixedPoint> positive;
  for (int k = 1; k < G.order(); ++k) {
    for (const auto& comp : fixed_locus(G.elements[k])) {
      if (comp.positive_dim) {
        GroupFixedPoint gp;
        gp.component = comp;
        gp.stabilizer_indices.push_back(k);
        positive.push_back(std::move(gp));
        continue;
      }
      std::string key = point_str(comp.point);
      auto it = isolated.find(key);
      if (it == isolated.end()) {
        GroupFixedPoint gp;
        gp.component = comp;
        gp.stabilizer_indices.push_back(k);
        isolated.emplace(std::move(key), std::move(gp));
      } else {
        it->second.stabilizer_indices.push_back(k);
        it->second.component.degenerate =
            it->second.component.degenerate || comp.degenerate;
      }
    }
  }
  std::vector<GroupFixedPoint> out;
  out.reserve(isolated.size() + positive.size());
  for (auto& [key, gp] : isolated) out.push_back(std::move(gp));
  for (auto& gp : positive) out.push_back(std::move(gp));
  return out;
}

std::vector<CycloNum> lefschetz_terms(const ProductAuto& g) {
  auto comps = fixed_locus(g);
  std::vector<CycloNum> terms;
  for (const auto& comp : comps) {
    if (comp.positive_dim)
      throw PositiveDimensionalError(
          "lefschetz: fixed locus has a positive-dimensional component (" +
          comp.description + ")");
    const PointX& x = comp.point;
    // J[i][sigma(i)] = local derivative of u -> chart_i(A_i(point(u))) at
    // the chart value of x_{sigma(i)}
    ExactMatrix jac(4, 4);
    for (int i = 0; i < 4; ++i) {
      int s = g.perm()(i);
      const ProjMatrix& a = g.mat(i);
      int sn = chart_coordinate(x[s]);
      int sd = 1 - sn;
      int tn = chart_coordinate(x[i]);
      int td = 1 - tn;
      // in chart coordinates the map is u -> (a' u + b')/(c' u + d')
      const CycloNum& ap = a.entry(tn, sn);
      const CycloNum& bp = a.entry(tn, sd);
      const CycloNum& cp = a.entry(td, sn);
      const CycloNum& dp = a.entry(td, sd);
      CycloNum u0 = chart_value(x[s]);
      CycloNum den = cp * u0 + dp;
      if (den.is_zero())
        throw std::logic_error("lefschetz: image left the target chart at a fixed point");
      jac.at(i, s) = (ap * dp - bp * cp) / (den * den);
    }
    CycloNum d = determinant(ExactMatrix::identity(4) - jac);
    if (d.is_zero())
      throw DegenerateFixedPointError("lefschetz: det(I - J) = 0 at fixed point " +
                                      point_str(x));
    terms.push_back(d.inverse());
  }
  return terms;
}

CycloNum lefschetz_sum(const ProductAuto& g) {
  CycloNum sum;
  for (const auto& t : lefschetz_terms(g)) sum += t;
  return sum;
}

bool is_smooth_at(const std::vector<MultiPoly>& polys, const PointX& pt, int expected_codim) {
  // chart-normalized coordinates: larger-indexed nonzero coordinate = 1
  std::array<std::array<CycloNum, 2>, 4> q;
  std::array<int, 4> chart{};
  for (int k = 0; k < 4; ++k) {
    chart[k] = chart_coordinate(pt[k]);
    const CycloNum& den = chart[k] == 0 ? pt[k].x1() : pt[k].x0();
    q[k][0] = pt[k].x0() / den;
    q[k][1] = pt[k].x1() / den;
  }
  // evaluation at the chart representative via a homogeneity-free detour:
  // rescale to a P1Point per factor is wrong (it re-normalizes), so evaluate
  // polynomials coordinate-wise
  auto eval_at = [&](const MultiPoly& p) {
    CycloNum sum;
    const MultiDegree& d = p.degree();
    std::array<std::vector<CycloNum>, 4> p0, p1;
    for (int k = 0; k < 4; ++k) {
      p0[k].resize(d[k] + 1);
      p1[k].resize(d[k] + 1);
      p0[k][0] = CycloNum::one();
      p1[k][0] = CycloNum::one();
      for (int e = 1; e <= d[k]; ++e) {
        p0[k][e] = p0[k][e - 1] * q[k][0];
        p1[k][e] = p1[k][e - 1] * q[k][1];
      }
    }
    for (int idx = 0; idx < p.dimension(); ++idx) {
      if (p.coeff_at(idx).is_zero()) continue;
      ExponentTuple b = p.exponent_at(idx);
      CycloNum term = p.coeff_at(idx);
      for (int k = 0; k < 4; ++k) term *= p0[k][d[k] - b[k]] * p1[k][b[k]];
      sum += term;
    }
    return sum;
  };

  ExactMatrix jac(int(polys.size()), 4);
  for (size_t r = 0; r < polys.size(); ++r) {
    if (!eval_at(polys[r]).is_zero())
      throw std::invalid_argument("is_smooth_at: polynomial " + std::to_string(r) +
                                  " does not vanish at " + point_str(pt));
    for (int k = 0; k < 4; ++k)
      jac.at(int(r), k) = eval_at(polys[r].partial(k + 1, chart[k]));
  }
  return mat_rank(jac) == expected_codim;
}

std::vector<PointX> base_points_64() {
  const CycloNum one = CycloNum::one();
  const CycloNum I = CycloNum::i();
  const std::vector<P1Point> coord{P1Point(one, CycloNum::zero()),
                                   P1Point(CycloNum::zero(), one)};
  const std::vector<P1Point> pm_i{P1Point(one, I), P1Point(one, -I)};
  const std::vector<P1Point> pm_1{P1Point(one, one), P1Point(one, -one)};

  // per-factor choice sets for the four blocks of the base locus
  const std::array<std::array<const std::vector<P1Point>*, 4>, 4> blocks{{
      {&coord, &coord, &pm_i, &pm_1},
      {&coord, &coord, &pm_1, &pm_i},
      {&pm_i, &pm_1, &coord, &coord},
      {&pm_1, &pm_i, &coord, &coord},
  }};

  std::vector<PointX> out;
  out.reserve(64);
  for (const auto& block : blocks)
    for (const auto& p1 : *block[0])
      for (const auto& p2 : *block[1])
        for (const auto& p3 : *block[2])
          for (const auto& p4 : *block[3]) out.push_back(PointX{p1, p2, p3, p4});
  return out;
}

}  // namespace fourlines
