#include "fourlines/checks.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

#include "fourlines/chow.hpp"
#include "fourlines/geometry.hpp"
#include "fourlines/group_id.hpp"
#include "fourlines/les_chase.hpp"
#include "fourlines/matrix.hpp"
#include "fourlines/multihomog.hpp"
#include "fourlines/product_autos.hpp"

namespace fourlines {

namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// shared helpers

const MultiDegree kDegH{1, 1, 1, 1};
const MultiDegree kDeg2H{2, 2, 2, 2};

LiftedAuto lift_of(const ProductAuto& g) { return LiftedAuto::canonical_lift(g); }

struct GeneratorLifts {
  LiftedAuto g, h;
};

GeneratorLifts builtin_lifts(const std::string& name) {
  auto gens = builtin_group(name);
  if (gens.size() != 2) throw std::logic_error("builtin_lifts: expected two generators");
  return {lift_of(gens[0]), lift_of(gens[1])};
}

// the three 16-point coordinate blocks fixed by the squares of the
// order-16 semidirect-product generators
std::vector<P1Point> block_choices(int which) {
  const CycloNum one = CycloNum::one(), I = CycloNum::i();
  switch (which) {
    case 0: return {P1Point(one, CycloNum::zero()), P1Point(CycloNum::zero(), one)};
    case 1: return {P1Point(one, one), P1Point(one, -one)};
    default: return {P1Point(one, I), P1Point(one, -I)};
  }
}

std::set<std::string> block_point_strs(int which) {
  auto ch = block_choices(which);
  std::set<std::string> out;
  for (const auto& a : ch)
    for (const auto& b : ch)
      for (const auto& c : ch)
        for (const auto& d : ch) out.insert(point_str(PointX{a, b, c, d}));
  return out;
}

std::string extremal_monomial_str(const ExponentTuple& b) {
  std::string s;
  for (int k = 0; k < 4; ++k) {
    int a = 2 - b[k];
    if (a > 0) s += (s.empty() ? "" : "*") + ("x" + std::to_string(k + 1) + "0^" + std::to_string(a));
    if (b[k] > 0) s += (s.empty() ? "" : "*") + ("x" + std::to_string(k + 1) + "1^" + std::to_string(b[k]));
  }
  return s;
}

ProjMatrix diag_matrix(const CycloNum& a, const CycloNum& d) {
  return ProjMatrix(a, CycloNum::zero(), CycloNum::zero(), d);
}

// the two obstructed lift families of order-4 actions, and the surviving one
std::vector<LiftedAuto> identity_perm_family() {
  std::vector<LiftedAuto> out;
  const CycloNum I = CycloNum::i();
  for (int mask = 0; mask < 16; ++mask) {
    std::array<ProjMatrix, 4> mats;
    for (int k = 0; k < 4; ++k)
      mats[k] = diag_matrix(CycloNum::one(), ((mask >> k) & 1) ? -I : I);
    out.emplace_back(mats, Perm4());
  }
  return out;
}

std::vector<LiftedAuto> transposition_family() {
  std::vector<LiftedAuto> out;
  const CycloNum I = CycloNum::i();
  for (int mask = 0; mask < 4; ++mask) {
    std::array<ProjMatrix, 4> mats{
        ProjMatrix(), half_turn_matrix(),
        diag_matrix(CycloNum::one(), (mask & 1) ? -I : I),
        diag_matrix(CycloNum::one(), (mask & 2) ? -I : I)};
    out.emplace_back(mats, Perm4::from_cycles({{1, 2}}));
  }
  return out;
}

ExactMatrix quadric_columns() {
  ExactMatrix cols(quadric_q(0).dimension(), 6);
  for (int k = 0; k < 6; ++k) {
    ExactMatrix c = quadric_q(k).coefficient_column();
    for (int r = 0; r < c.rows(); ++r) cols.at(r, k) = c.at(r, 0);
  }
  return cols;
}

// deterministic small random scalars for the property suites
mpq_class random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

CycloNum random_cyclo(std::mt19937& rng) {
  CycloNum v;
  for (int k = 0; k < 8; ++k) v += CycloNum::monomial(random_rational(rng), k);
  return v;
}

CycloNum random_nonzero_cyclo(std::mt19937& rng) {
  for (;;) {
    CycloNum v = random_cyclo(rng);
    if (!v.is_zero()) return v;
  }
}

ProjMatrix random_proj_matrix(std::mt19937& rng) {
  const CycloNum pool[] = {CycloNum::one(), -CycloNum::one(), CycloNum::i(),
                           CycloNum::zeta(), CycloNum(2), CycloNum::zero()};
  std::uniform_int_distribution<int> pick(0, 5);
  for (;;) {
    CycloNum a = pool[pick(rng)], b = pool[pick(rng)], c = pool[pick(rng)], d = pool[pick(rng)];
    if (!(a * d - b * c).is_zero()) return ProjMatrix(a, b, c, d);
  }
}

ProductAuto random_conjugator(std::mt19937& rng) {
  std::array<ProjMatrix, 4> mats;
  for (auto& m : mats) m = random_proj_matrix(rng);
  std::array<int, 4> img{0, 1, 2, 3};
  std::shuffle(img.begin(), img.end(), rng);
  return ProductAuto(mats, Perm4(img));
}

MultiPoly random_poly(std::mt19937& rng, const MultiDegree& deg) {
  MultiPoly p(deg);
  for (int idx = 0; idx < p.dimension(); ++idx)
    p.set_coeff(p.exponent_at(idx), CycloNum(random_rational(rng)));
  return p;
}

// per-element fixed-locus signature used by the conjugation-invariance suite
std::vector<std::string> fixed_locus_signature(const FiniteSubgroup& G) {
  std::vector<std::string> sig;
  for (int k = 1; k < G.order(); ++k) {
    auto fl = fixed_locus(G.elements[k]);
    bool pos = !fl.empty() && fl[0].positive_dim;
    sig.push_back(pos ? "dim " + std::to_string(fl[0].dimension)
                      : "isolated x" + std::to_string(fl.size()));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

// ---------------------------------------------------------------------------
// the checks

bool check_group_orders(ordered_json& d) {
  const std::map<std::string, int> expected{
      {"z2", 2},     {"z2xz2", 4},  {"z4", 4},    {"z4xz2", 8},  {"z8", 8},
      {"q8", 8},     {"z8xz2", 16}, {"z4xz4", 16}, {"z4sz4", 16}, {"q8xz2", 16}};
  ordered_json orders = ordered_json::object();
  bool ok = true;
  for (const auto& name : builtin_group_names()) {
    int n = closure(builtin_group(name)).order();
    orders[name] = n;
    if (n != expected.at(name) && ok) {
      ok = false;
      d["counterexample"] = name + ": order " + std::to_string(n) + ", expected " +
                            std::to_string(expected.at(name));
    }
  }
  d["orders"] = orders;
  return ok;
}

bool check_group_types(ordered_json& d) {
  const std::map<std::string, std::string> expected{
      {"z2", "Z2"},        {"z2xz2", "Z2xZ2"},   {"z4", "Z4"},
      {"z4xz2", "Z4xZ2"},  {"z8", "Z8"},         {"q8", "Q8"},
      {"z8xz2", "Z8xZ2"},  {"z4xz4", "Z4xZ4"},   {"z4sz4", "Z4sZ4"},
      {"q8xz2", "Q8xZ2"}};
  ordered_json types = ordered_json::object();
  bool ok = true;
  for (const auto& name : builtin_group_names()) {
    std::string t = identify_isomorphism_type(closure(builtin_group(name)).multiplication_table());
    types[name] = t;
    if (t != expected.at(name) && ok) {
      ok = false;
      d["counterexample"] = name + ": identified as " + t + ", expected " + expected.at(name);
    }
  }
  d["types"] = types;
  return ok;
}

bool check_fixed_locus_count(ordered_json& d) {
  auto gens = builtin_group("z4sz4");
  FiniteSubgroup G = closure(gens);
  ProductAuto s1 = compose(gens[0], gens[0]);
  ProductAuto s2 = compose(gens[1], gens[1]);
  ProductAuto s3 = compose(s1, s2);
  const ProductAuto invs[] = {s1, s2, s3};
  const char* names[] = {"square of first generator", "square of second generator",
                         "product of the squares"};
  bool ok = true;
  ordered_json blocks = ordered_json::object();
  std::set<std::string> all;
  for (int w = 0; w < 3; ++w) {
    if (auto_order(invs[w]) != 2) {
      d["counterexample"] = std::string(names[w]) + " does not have order 2";
      return false;
    }
    std::set<std::string> got;
    for (const auto& comp : fixed_locus(invs[w])) {
      if (comp.positive_dim) {
        d["counterexample"] = std::string(names[w]) + " has a positive-dimensional fixed set";
        return false;
      }
      got.insert(point_str(comp.point));
      all.insert(point_str(comp.point));
    }
    std::set<std::string> want = block_point_strs(w);
    blocks[names[w]] = int(got.size());
    if (got != want && ok) {
      ok = false;
      std::vector<std::string> diff;
      std::set_symmetric_difference(got.begin(), got.end(), want.begin(), want.end(),
                                    std::back_inserter(diff));
      d["counterexample"] = std::string(names[w]) + ": set mismatch at " + diff.front();
    }
  }
  // exactly three elements of order 2 in the whole group
  int involutions = 0;
  for (int k = 1; k < G.order(); ++k)
    if (auto_order(G.elements[k]) == 2) ++involutions;
  auto gfl = group_fixed_locus(G);
  d["involutions"] = involutions;
  d["blocks"] = blocks;
  d["union_size"] = int(all.size());
  d["group_fixed_points"] = int(gfl.size());
  if (involutions != 3) {
    if (ok) d["counterexample"] = "expected exactly 3 involutions, found " + std::to_string(involutions);
    ok = false;
  }
  if (all.size() != 48 || gfl.size() != 48) {
    if (ok) d["counterexample"] = "fixed point union has size " + std::to_string(all.size());
    ok = false;
  }
  return ok;
}

bool check_fixed_locus_dim(ordered_json& d) {
  int checked = 0;
  for (const auto& name : builtin_group_names()) {
    FiniteSubgroup G = closure(builtin_group(name));
    for (int k = 1; k < G.order(); ++k) {
      for (const auto& comp : fixed_locus(G.elements[k])) {
        if (comp.positive_dim) {
          d["counterexample"] = name + " element " + std::to_string(k) +
                                " has fixed locus of dimension " +
                                std::to_string(comp.dimension);
          return false;
        }
      }
      ++checked;
    }
  }
  d["elements_checked"] = checked;
  return true;
}

bool check_lefschetz_all(ordered_json& d) {
  int checked = 0;
  for (const auto& name : builtin_group_names()) {
    FiniteSubgroup G = closure(builtin_group(name));
    for (int k = 1; k < G.order(); ++k) {
      CycloNum s = lefschetz_sum(G.elements[k]);
      if (!s.is_one()) {
        d["counterexample"] = name + " element " + std::to_string(k) + ": sum = " + s.str();
        return false;
      }
      ++checked;
    }
  }
  d["elements_checked"] = checked;
  d["sum"] = "1";
  return true;
}

bool check_lefschetz_z2(ordered_json& d) {
  ProductAuto inv({half_turn_matrix(), half_turn_matrix(), half_turn_matrix(),
                   half_turn_matrix()},
                  Perm4());
  auto terms = lefschetz_terms(inv);
  d["terms"] = int(terms.size());
  CycloNum sixteenth = CycloNum::one() / CycloNum(16);
  for (size_t k = 0; k < terms.size(); ++k)
    if (terms[k] != sixteenth) {
      d["counterexample"] = "term " + std::to_string(k) + " = " + terms[k].str();
      return false;
    }
  d["term_value"] = sixteenth.str();
  return terms.size() == 16;
}

bool check_quadric_rank(ordered_json& d) {
  int r = mat_rank(quadric_columns());
  d["rank"] = r;
  if (r != 6) d["counterexample"] = "rank " + std::to_string(r);
  return r == 6;
}

bool check_base_points_annihilate(ordered_json& d) {
  auto bps = base_points_64();
  std::set<std::string> uniq;
  for (const auto& p : bps) uniq.insert(point_str(p));
  d["base_points"] = int(bps.size());
  d["distinct"] = int(uniq.size());
  if (bps.size() != 64 || uniq.size() != 64) {
    d["counterexample"] = "expected 64 distinct points";
    return false;
  }
  for (int k = 0; k < 6; ++k) {
    MultiPoly q = quadric_q(k);
    for (const auto& p : bps)
      if (!q.eval(p).is_zero()) {
        d["counterexample"] =
            "generator " + std::to_string(k) + " is nonzero at " + point_str(p);
        return false;
      }
  }
  d["sections"] = 6;
  return true;
}

bool check_base_points_q4_smooth(ordered_json& d) {
  std::vector<MultiPoly> q4{quadric_q(4)};
  int n = 0;
  for (const auto& p : base_points_64()) {
    if (!is_smooth_at(q4, p, 1)) {
      d["counterexample"] = "gradient drops rank at " + point_str(p);
      return false;
    }
    ++n;
  }
  d["points_checked"] = n;
  return true;
}

std::vector<GroupFixedPoint> z4sz4_fixed_points() {
  return group_fixed_locus(closure(builtin_group("z4sz4")));
}

bool check_q4_avoids_fixed_locus(ordered_json& d) {
  MultiPoly q4 = quadric_q(4);
  auto gfl = z4sz4_fixed_points();
  int zeros = 0;
  std::string first;
  for (const auto& e : gfl)
    if (q4.eval(e.component.point).is_zero()) {
      if (zeros == 0) first = point_str(e.component.point);
      ++zeros;
    }
  d["fixed_points"] = int(gfl.size());
  d["zeros_of_section"] = zeros;
  if (zeros > 0) d["counterexample"] = "section vanishes at " + first;
  return zeros == 0;
}

bool check_free_member_exists(ordered_json& d) {
  MultiPoly member = quadric_q(0) + quadric_q(4);
  auto gfl = z4sz4_fixed_points();
  for (const auto& e : gfl)
    if (member.eval(e.component.point).is_zero()) {
      d["counterexample"] = "member vanishes at " + point_str(e.component.point);
      return false;
    }
  d["member"] = "Q0 + Q4";
  d["fixed_points"] = int(gfl.size());
  return true;
}

bool check_quadrics_eigenvectors(ordered_json& d) {
  GeneratorLifts lifts = builtin_lifts("z4sz4");
  for (int k = 0; k < 6; ++k) {
    MultiPoly q = quadric_q(k);
    if (pullback(lifts.g, q) != q || pullback(lifts.h, q) != q) {
      d["counterexample"] = "generator family member " + std::to_string(k) +
                            " is not fixed by both lifted generators";
      return false;
    }
  }
  d["sections"] = 6;
  d["eigenvalue_pair"] = "(1, 1)";
  return true;
}

bool check_anticommutation(ordered_json& d) {
  for (const char* name : {"z8xz2", "z4xz4"}) {
    GeneratorLifts lifts = builtin_lifts(name);
    ExactMatrix mg = action_matrix(lifts.g, kDegH);
    ExactMatrix mh = action_matrix(lifts.h, kDegH);
    if (!(mg * mh + mh * mg).is_zero()) {
      d["counterexample"] = std::string(name) + ": anticommutator is nonzero";
      return false;
    }
  }
  d["cases"] = {"z8xz2", "z4xz4"};
  d["matrix_size"] = 16;
  return true;
}

bool check_eigenspace_scan(ordered_json& d) {
  int scanned = 0;
  for (const char* name : {"z8xz2", "z4xz4"}) {
    GeneratorLifts lifts = builtin_lifts(name);
    for (int a = 0; a < 16; ++a)
      for (int b = 0; b < 16; ++b) {
        ExactMatrix basis = eigensection_space(
            {lifts.g, lifts.h}, {CycloNum::monomial(1, a), CycloNum::monomial(1, b)}, kDegH);
        if (basis.cols() != 0) {
          d["counterexample"] = std::string(name) + ": eigenvalue pair (z^" +
                                std::to_string(a) + ", z^" + std::to_string(b) +
                                ") has dimension " + std::to_string(basis.cols());
          return false;
        }
        ++scanned;
      }
  }
  d["pairs_scanned"] = scanned;
  d["nonzero_dimensions"] = 0;
  return true;
}

bool check_regular_character(ordered_json& d) {
  FiniteSubgroup G = closure(builtin_group("z4sz4"));
  std::vector<std::string> character;
  bool ok = true;
  for (int k = 0; k < G.order(); ++k) {
    CycloNum tr = action_trace(lift_of(G.elements[k]), kDegH);
    character.push_back(tr.str());
    CycloNum want = k == 0 ? CycloNum(16) : CycloNum::zero();
    if (tr != want && ok) {
      ok = false;
      d["counterexample"] = "element " + std::to_string(k) + " has trace " + tr.str();
    }
  }
  d["character"] = character;
  return ok;
}

bool check_f1_eigenspace(ordered_json& d) {
  GeneratorLifts lifts = builtin_lifts("z4sz4");
  MultiPoly f1 = fano_section();
  // the section's own eigenvalues under the two lifted generators
  CycloNum lam_g = CycloNum::i(), lam_h = -CycloNum::one();
  if (pullback(lifts.g, f1) != f1.scaled(lam_g) ||
      pullback(lifts.h, f1) != f1.scaled(lam_h)) {
    d["counterexample"] = "section is not an eigenvector with the expected pair";
    return false;
  }
  ExactMatrix basis = eigensection_space({lifts.g, lifts.h}, {lam_g, lam_h}, kDegH);
  d["eigenvalues"] = {lam_g.str(), lam_h.str()};
  d["dimension"] = basis.cols();
  if (basis.cols() != 1) {
    d["counterexample"] = "eigenspace dimension " + std::to_string(basis.cols());
    return false;
  }
  if (!in_column_span(basis, f1.coefficient_column())) {
    d["counterexample"] = "section lies outside the computed eigenspace";
    return false;
  }
  return true;
}

bool check_q_eigenspace(ordered_json& d) {
  GeneratorLifts lifts = builtin_lifts("z4sz4");
  ExactMatrix basis =
      eigensection_space({lifts.g, lifts.h}, {CycloNum::one(), CycloNum::one()}, kDeg2H);
  d["dimension"] = basis.cols();
  if (basis.cols() != 6) {
    d["counterexample"] = "eigenspace dimension " + std::to_string(basis.cols());
    return false;
  }
  ExactMatrix qcols = quadric_columns();
  for (int k = 0; k < 6; ++k) {
    ExactMatrix col(qcols.rows(), 1);
    for (int r = 0; r < qcols.rows(); ++r) col.at(r, 0) = qcols.at(r, k);
    if (!in_column_span(basis, col)) {
      d["counterexample"] =
          "family member " + std::to_string(k) + " lies outside the eigenspace";
      return false;
    }
  }
  // spans agree: the 6 family members are independent (rank 6), so equality
  int joint = mat_rank(basis.transpose().stacked(qcols.transpose()));
  d["joint_rank"] = joint;
  if (joint != 6) {
    d["counterexample"] = "joint span has rank " + std::to_string(joint);
    return false;
  }
  return true;
}

bool check_f1_gradient_pattern(ordered_json& d) {
  MultiPoly f1 = fano_section();
  auto gfl = z4sz4_fixed_points();
  std::set<std::string> zero_set;
  for (const auto& e : gfl) {
    auto grad = f1.gradient(e.component.point);
    bool allz = true;
    for (const auto& c : grad) allz = allz && c.is_zero();
    if (allz) zero_set.insert(point_str(e.component.point));
  }
  // expected per the classification claim: the eight points of the
  // (1 : ±1)^4 block whose sign product is -1
  std::set<std::string> expected;
  const CycloNum one = CycloNum::one();
  for (int mask = 0; mask < 16; ++mask) {
    int parity = std::popcount(unsigned(mask)) & 1;
    if (!parity) continue;
    PointX p;
    for (int k = 0; k < 4; ++k)
      p[k] = P1Point(one, (mask >> k) & 1 ? -one : one);
    expected.insert(point_str(p));
  }
  d["expected_zero_points"] = int(expected.size());
  d["computed_zero_points"] = int(zero_set.size());
  d["zero_points"] = std::vector<std::string>(zero_set.begin(), zero_set.end());
  if (zero_set != expected) {
    std::vector<std::string> diff;
    std::set_symmetric_difference(expected.begin(), expected.end(), zero_set.begin(),
                                  zero_set.end(), std::back_inserter(diff));
    d["counterexample"] = "gradient pattern differs at " + diff.front();
    return false;
  }
  return true;
}

bool check_singular_locus(ordered_json& d) {
  MultiPoly f1 = fano_section();
  auto gfl = z4sz4_fixed_points();
  std::set<std::string> zero_set;
  for (const auto& e : gfl) {
    auto grad = f1.gradient(e.component.point);
    bool allz = true;
    for (const auto& c : grad) allz = allz && c.is_zero();
    if (allz) {
      if (!f1.eval(e.component.point).is_zero()) {
        d["counterexample"] = "gradient vanishes but section does not at " +
                              point_str(e.component.point);
        return false;
      }
      zero_set.insert(point_str(e.component.point));
    }
  }
  // the four sign vectors with equal middle signs and opposite outer signs
  std::set<std::string> expected;
  const CycloNum one = CycloNum::one();
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) {
      CycloNum s1 = e1 > 0 ? one : -one, s2 = e2 > 0 ? one : -one;
      PointX p{P1Point(one, s1), P1Point(one, s2), P1Point(one, s2), P1Point(one, -s1)};
      expected.insert(point_str(p));
    }
  d["singular_points"] = std::vector<std::string>(zero_set.begin(), zero_set.end());
  if (zero_set != expected) {
    d["counterexample"] = "singular set differs from the four expected points";
    return false;
  }
  // contained in the (1 : ±1)^4 block and disjoint from the base points
  std::set<std::string> block = block_point_strs(1);
  for (const auto& s : zero_set)
    if (!block.count(s)) {
      d["counterexample"] = "singular point outside the expected block: " + s;
      return false;
    }
  for (const auto& p : base_points_64())
    if (zero_set.count(point_str(p))) {
      d["counterexample"] = "singular point meets the base locus at " + point_str(p);
      return false;
    }
  d["contained_in_block"] = true;
  d["meets_base_locus"] = false;
  return true;
}

bool check_q4f1_rank2(ordered_json& d) {
  MultiPoly f1 = fano_section();
  std::vector<MultiPoly> sys{quadric_q(4), f1};
  int on_v = 0;
  for (const auto& p : base_points_64()) {
    if (!f1.eval(p).is_zero()) continue;
    ++on_v;
    if (!is_smooth_at(sys, p, 2)) {
      d["counterexample"] = "rank below 2 at " + point_str(p);
      return false;
    }
  }
  d["base_points_on_hypersurface"] = on_v;
  if (on_v != 32) {
    d["counterexample"] = "expected 32 base points on the hypersurface, found " +
                          std::to_string(on_v);
    return false;
  }
  return true;
}

bool check_euler(ordered_json& d) {
  long chi = euler_anticanonical();
  bool c3ok = c3_anticanonical_hypersurface() == sigma(3).scaled(-16);
  d["euler_number"] = chi;
  d["c3_is_minus16_sigma3"] = c3ok;
  if (chi != -128) d["counterexample"] = "Euler number " + std::to_string(chi);
  else if (!c3ok) d["counterexample"] = "third Chern class mismatch";
  return chi == -128 && c3ok;
}

bool check_chow_degrees(ordered_json& d) {
  ChowClass H = ChowClass::big_h();
  mpq_class h4 = chow_degree(H * H * H * H);
  mpq_class h4twice = chow_degree(H.scaled(2) * H * H * H);
  d["degree_H4"] = h4.get_str();
  d["degree_2H_H3"] = h4twice.get_str();
  if (h4 != 24) d["counterexample"] = "deg H^4 = " + h4.get_str();
  else if (h4twice != 48) d["counterexample"] = "deg 2H.H^3 = " + h4twice.get_str();
  return h4 == 24 && h4twice == 48;
}

bool check_hodge_table(ordered_json& d) {
  struct Row { const char* name; long h11, h12; };
  const Row rows[] = {{"z2", 4, 36},   {"z2xz2", 4, 20}, {"z4", 2, 18},
                      {"z4xz2", 2, 10}, {"z8", 1, 9},     {"q8", 1, 9},
                      {"z8xz2", 1, 5},  {"z4xz4", 1, 5},  {"z4sz4", 1, 5},
                      {"q8xz2", 1, 5}};
  ordered_json table = ordered_json::object();
  bool ok = true;
  for (const auto& r : rows) {
    HodgeNumbers h = quotient_hodge(closure(builtin_group(r.name)));
    table[r.name] = {h.h11, h.h12, h.height()};
    if ((h.h11 != r.h11 || h.h12 != r.h12) && ok) {
      ok = false;
      d["counterexample"] = std::string(r.name) + ": (" + std::to_string(h.h11) + ", " +
                            std::to_string(h.h12) + ")";
    }
  }
  d["rows"] = table;
  return ok;
}

bool check_kunneth_rows(ordered_json& d) {
  auto sum4 = [](std::array<long, 5> a, const std::array<long, 5>& b) {
    for (int q = 0; q < 5; ++q) a[q] += b[q];
    return a;
  };
  auto tangent_twist = [&](int twist) {
    std::array<long, 5> total{};
    for (int k = 0; k < 4; ++k) {
      std::array<int, 4> deg{twist, twist, twist, twist};
      deg[k] += 2;
      total = sum4(total, kunneth_cohomology(deg));
    }
    return total;
  };
  struct Row { std::string name; std::array<long, 5> got, want; };
  const std::vector<Row> rows = {
      {"tangent", tangent_twist(0), {12, 0, 0, 0, 0}},
      {"tangent(-H)", tangent_twist(-1), {0, 0, 0, 0, 0}},
      {"tangent(-2H)", tangent_twist(-2), {0, 0, 0, 4, 0}},
      {"tangent(-3H)", tangent_twist(-3), {0, 0, 0, 0, 0}},
      {"O", kunneth_cohomology({0, 0, 0, 0}), {1, 0, 0, 0, 0}},
      {"O(H)", kunneth_cohomology({1, 1, 1, 1}), {16, 0, 0, 0, 0}},
      {"O(2H)", kunneth_cohomology({2, 2, 2, 2}), {81, 0, 0, 0, 0}},
      {"O(-H)", kunneth_cohomology({-1, -1, -1, -1}), {0, 0, 0, 0, 0}},
      {"O(-2H)", kunneth_cohomology({-2, -2, -2, -2}), {0, 0, 0, 0, 1}},
  };
  ordered_json table = ordered_json::object();
  bool ok = true;
  for (const auto& r : rows) {
    table[r.name] = r.got;
    if (r.got != r.want && ok) {
      ok = false;
      d["counterexample"] = r.name + " row mismatch";
    }
  }
  d["rows"] = table;
  return ok;
}

bool check_chase_values(ordered_json& d) {
  ChaseResult r = run_chase(default_chase_spec());
  struct Want { const char* name; long v; };
  const Want wants[] = {
      {"h0(O_Y(2H))", 80}, {"h0(O_Y(H))", 16},     {"h0(O_Y)", 1},
      {"h3(O_Y)", 1},      {"h0(O_T(H))", 15},     {"h2(O_T(H))", 1},
      {"h0(ThetaX|Y)", 12}, {"h2(ThetaX|Y)", 4},   {"h1(ThetaY(-H))", 16},
      {"h3(ThetaY(-H))", 0}, {"h1(ThetaY)", 68},   {"h2(ThetaY)", 4},
      {"h3(ThetaY)", 0},   {"h1-h0(ThetaY|T)", 52}, {"h2(ThetaY|T)", 4},
      {"h1(ThetaT)", 67},  {"h2(ThetaT)", 3}};
  ordered_json values = ordered_json::object();
  bool ok = true;
  for (const auto& w : wants) {
    const auto& t = r.target(w.name);
    values[w.name] = t.determined ? t.value.get_str() : "undetermined";
    if ((!t.determined || t.value != w.v) && ok) {
      ok = false;
      d["counterexample"] = std::string(w.name) + " = " +
                            (t.determined ? t.value.get_str() : "undetermined") +
                            ", expected " + std::to_string(w.v);
    }
  }
  d["targets"] = values;
  return ok;
}

bool check_surface_invariants(ordered_json& d) {
  SurfaceInvariants s = surface_invariants(16);
  d["K2"] = s.k2;
  d["chi"] = s.chi;
  d["pg_cover"] = s.pg_cover;
  d["moduli_dim"] = s.moduli_dim;
  bool ok = s.k2 == 3 && s.chi == 1 && s.pg_cover == 15 && s.moduli_dim == 4;
  if (!ok) d["counterexample"] = "invariants differ from (3, 1, 15, 4)";
  return ok;
}

bool obstruction_family_all_blocked(const std::vector<LiftedAuto>& family, ordered_json& d) {
  const ExponentTuple want_a{0, 0, 0, 0}, want_b{0, 0, 0, 2};
  for (size_t k = 0; k < family.size(); ++k) {
    ObstructionResult r = full_support_eigenvector_exists(family[k]);
    if (r.exists) {
      d["counterexample"] = "lift " + std::to_string(k) + " admits a full-support eigenvector";
      return false;
    }
    if (!r.witness || r.witness->first != want_a || r.witness->second != want_b) {
      d["counterexample"] = "lift " + std::to_string(k) + " reports a different witness pair";
      return false;
    }
  }
  d["lifts_checked"] = int(family.size());
  d["witness_pair"] = {extremal_monomial_str(want_a), extremal_monomial_str(want_b)};
  return true;
}

bool check_obstruction_id_family(ordered_json& d) {
  return obstruction_family_all_blocked(identity_perm_family(), d);
}

bool check_obstruction_transposition(ordered_json& d) {
  return obstruction_family_all_blocked(transposition_family(), d);
}

bool check_obstruction_double_transposition(ordered_json& d) {
  auto gens = builtin_group("z4");
  ObstructionResult r = full_support_eigenvector_exists(lift_of(gens[0]));
  d["exists"] = r.exists;
  if (!r.exists) d["counterexample"] = "the order-4 double-transposition generator is blocked";
  return r.exists;
}

bool check_field_axioms(ordered_json& d) {
  std::mt19937 rng(987654321u);
  int trials = 200;
  for (int t = 0; t < trials; ++t) {
    CycloNum a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
    bool ok = (a + b == b + a) && ((a + b) + c == a + (b + c)) && (a * b == b * a) &&
              ((a * b) * c == a * (b * c)) && (a * (b + c) == a * b + a * c) &&
              (a + CycloNum::zero() == a) && (a * CycloNum::one() == a);
    if (ok && !a.is_zero()) ok = a * a.inverse() == CycloNum::one();
    if (ok) ok = CycloNum::parse(a.str()) == a;
    if (!ok) {
      d["counterexample"] = "axiom failure at trial " + std::to_string(t) + " with a = " + a.str();
      return false;
    }
  }
  // square roots of perfect squares stay in the field
  for (int t = 0; t < 25; ++t) {
    CycloNum a = random_cyclo(rng);
    CycloNum sq = a * a;
    auto root = sq.sqrt_in_field();
    if (!root || *root * *root != sq) {
      d["counterexample"] = "square root failure for (" + a.str() + ")^2";
      return false;
    }
  }
  d["trials"] = trials;
  return true;
}

bool check_group_axioms(ordered_json& d) {
  std::mt19937 rng(24681357u);
  for (const auto& name : builtin_group_names()) {
    FiniteSubgroup G = closure(builtin_group(name));
    auto table = G.multiplication_table();
    int n = G.order();
    // identity first, Latin square rows/columns, inverses exist
    for (int k = 0; k < n; ++k)
      if (table[0][k] != k || table[k][0] != k) {
        d["counterexample"] = name + ": identity row/column broken at " + std::to_string(k);
        return false;
      }
    for (int r = 0; r < n; ++r) {
      std::set<int> row, col;
      bool has_inverse = false;
      for (int c = 0; c < n; ++c) {
        row.insert(table[r][c]);
        col.insert(table[c][r]);
        if (table[r][c] == 0) has_inverse = true;
      }
      if (int(row.size()) != n || int(col.size()) != n || !has_inverse) {
        d["counterexample"] = name + ": multiplication table row " + std::to_string(r) +
                              " is not a permutation with inverse";
        return false;
      }
    }
    // sampled associativity on the underlying automorphisms
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 10; ++t) {
      const auto &a = G.elements[pick(rng)], &b = G.elements[pick(rng)], &c = G.elements[pick(rng)];
      if (compose(compose(a, b), c) != compose(a, compose(b, c))) {
        d["counterexample"] = name + ": associativity failure";
        return false;
      }
    }
  }
  d["groups_checked"] = int(builtin_group_names().size());
  return true;
}

bool check_conjugation_invariance(ordered_json& d) {
  std::mt19937 rng(1357924680u);
  auto names = builtin_group_names();
  int trials = 100;
  for (int t = 0; t < trials; ++t) {
    const std::string& name = names[t % names.size()];
    auto gens = builtin_group(name);
    FiniteSubgroup G = closure(gens);
    ProductAuto k = random_conjugator(rng);
    std::vector<ProductAuto> conj;
    for (const auto& g : gens) conj.push_back(conjugate(g, k));
    FiniteSubgroup H = closure(conj);
    if (H.order() != G.order()) {
      d["counterexample"] = "trial " + std::to_string(t) + " (" + name + "): order changed to " +
                            std::to_string(H.order());
      return false;
    }
    if (G.order_histogram() != H.order_histogram()) {
      d["counterexample"] = "trial " + std::to_string(t) + " (" + name + "): order histogram changed";
      return false;
    }
    if (identify_isomorphism_type(G.multiplication_table()) !=
        identify_isomorphism_type(H.multiplication_table())) {
      d["counterexample"] = "trial " + std::to_string(t) + " (" + name + "): isomorphism type changed";
      return false;
    }
    if (fixed_locus_signature(G) != fixed_locus_signature(H)) {
      d["counterexample"] = "trial " + std::to_string(t) + " (" + name + "): fixed locus profile changed";
      return false;
    }
  }
  d["trials"] = trials;
  return true;
}

bool check_pullback_multiplicative(ordered_json& d) {
  std::mt19937 rng(1122334455u);
  GeneratorLifts a = builtin_lifts("z4sz4");
  GeneratorLifts b = builtin_lifts("z8xz2");
  const LiftedAuto lifts[] = {a.g, a.h, b.g, b.h};
  std::uniform_int_distribution<int> pick(0, 3);
  for (int t = 0; t < 10; ++t) {
    const LiftedAuto &g = lifts[pick(rng)], &h = lifts[pick(rng)];
    MultiPoly p = random_poly(rng, kDegH);
    if (pullback(compose(h, g), p) != pullback(h, pullback(g, p))) {
      d["counterexample"] = "composition trial " + std::to_string(t);
      return false;
    }
    MultiPoly q = random_poly(rng, kDegH);
    if (pullback(g, p * q) != pullback(g, p) * pullback(g, q)) {
      d["counterexample"] = "product trial " + std::to_string(t);
      return false;
    }
  }
  d["trials"] = 10;
  return true;
}

bool check_rank_invariance(ordered_json& d) {
  std::mt19937 rng(556677889u);
  for (int t = 0; t < 30; ++t) {
    ExactMatrix m(4, 6);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 6; ++c) m.at(r, c) = CycloNum(random_rational(rng));
    int rank = mat_rank(m);
    // row shuffle
    std::array<int, 4> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    ExactMatrix shuffled(4, 6);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 6; ++c) shuffled.at(r, c) = m.at(perm[r], c);
    // row scaling
    ExactMatrix scaled = m;
    CycloNum f = random_nonzero_cyclo(rng);
    for (int c = 0; c < 6; ++c) scaled.at(t % 4, c) = scaled.at(t % 4, c) * f;
    if (mat_rank(shuffled) != rank || mat_rank(scaled) != rank) {
      d["counterexample"] = "rank changed under row operations at trial " + std::to_string(t);
      return false;
    }
    ExactMatrix kern = kernel_basis(m);
    if (!(m * kern).is_zero() || rank + kern.cols() != 6) {
      d["counterexample"] = "kernel defect at trial " + std::to_string(t);
      return false;
    }
  }
  d["trials"] = 30;
  return true;
}

// ---------------------------------------------------------------------------
// registry

struct CheckDef {
  const char* id;
  const char* description;
  const char* claim;
  bool (*fn)(ordered_json&);
};

const CheckDef kChecks[] = {
    {"c01-group-orders",
     "Close the ten built-in generator sets and count their elements",
     "orders are 2, 4, 4, 8, 8, 8 and 16 for the four largest sets",
     &check_group_orders},
    {"c01-group-types",
     "Identify the isomorphism type of every built-in closure",
     "the four order-16 closures are Z8xZ2, Z4xZ4, Z4sZ4 and Q8xZ2",
     &check_group_types},
    {"c02-fixed-locus-count",
     "Enumerate the fixed points of the order-16 semidirect-product group",
     "48 points, partitioned 16+16+16 by the three involutions into the "
     "coordinate, (1:±1) and (1:±i) blocks",
     &check_fixed_locus_count},
    {"c02-fixed-locus-dim",
     "Compute fixed-locus dimensions for every nontrivial element of every "
     "built-in group",
     "all fixed loci are isolated points",
     &check_fixed_locus_dim},
    {"c03-lefschetz-all",
     "Evaluate the holomorphic fixed point sum for every nontrivial element "
     "of every built-in group",
     "every sum equals 1 exactly",
     &check_lefschetz_all},
    {"c03-lefschetz-z2-decomposition",
     "Decompose the fixed point sum of the coordinatewise half-turn",
     "16 isolated points contributing 1/16 each",
     &check_lefschetz_z2},
    {"c04-base-points-annihilate",
     "Evaluate all six quadric sections at the 64 expanded base points",
     "every section vanishes at every base point",
     &check_base_points_annihilate},
    {"c04-base-points-q4-smooth",
     "Chart Jacobian of the product-of-sums-of-squares section at the base points",
     "nonzero gradient (rank 1) at all 64 points",
     &check_base_points_q4_smooth},
    {"c04-quadric-rank",
     "Rank of the coefficient matrix of the six invariant quadric sections",
     "rank 6: the sections span a 6-dimensional space",
     &check_quadric_rank},
    {"c05-free-member-exists",
     "Evaluate the pencil member Q0 + Q4 at the 48 fixed points",
     "the member is nonzero at every fixed point, so a free member exists",
     &check_free_member_exists},
    {"c05-q4-avoids-fixed-locus",
     "Evaluate the product-of-sums-of-squares section at the 48 fixed points",
     "the section is nonzero at every fixed point",
     &check_q4_avoids_fixed_locus},
    {"c05-quadrics-eigenvectors",
     "Apply both lifted order-16 generators to each quadric section",
     "each section is a simultaneous eigenvector with eigenvalue pair (1, 1)",
     &check_quadrics_eigenvectors},
    {"c06-anticommutation",
     "Anticommutator of the two lifted generators on degree (1,1,1,1) "
     "for the two abelian order-16 cases",
     "g h + h g = 0 as 16x16 matrices in both cases",
     &check_anticommutation},
    {"c06-eigenspace-scan-empty",
     "Scan all 256 sixteenth-root eigenvalue pairs for simultaneous "
     "eigensections of degree (1,1,1,1), both abelian order-16 cases",
     "every simultaneous eigenspace has dimension 0",
     &check_eigenspace_scan},
    {"c07-f1-eigenspace-dim1",
     "Simultaneous eigenspace of the lifted order-16 generators for the "
     "eigenvalue pair (i, -1) in degree (1,1,1,1)",
     "dimension exactly 1, spanned by the distinguished section",
     &check_f1_eigenspace},
    {"c07-q-eigenspace-dim6",
     "Simultaneous invariants of the lifted order-16 generators in degree "
     "(2,2,2,2)",
     "dimension exactly 6, equal to the span of the six quadric sections",
     &check_q_eigenspace},
    {"c07-regular-character",
     "Trace of the lifted action of each order-16 group element on degree "
     "(1,1,1,1)",
     "16 at the identity and 0 elsewhere: the regular character",
     &check_regular_character},
    {"c08-f1-gradient-pattern",
     "Gradient of the distinguished degree-(1,1,1,1) section at the 48 fixed "
     "points",
     "vanishes exactly at the 8 points of the (1:±1) block with sign "
     "product -1",
     &check_f1_gradient_pattern},
    {"c08-q4f1-rank2-on-v",
     "Joint chart Jacobian of the quadric section and the distinguished "
     "section at base points lying on the hypersurface",
     "rank 2 at each of the 32 such points",
     &check_q4f1_rank2},
    {"c08-singular-locus",
     "Zero set of the distinguished section's gradient among the 48 fixed "
     "points, with containment and base-locus checks",
     "exactly four points, all in the (1:±1) block with sign product -1, "
     "middle signs equal and outer signs opposite; disjoint from the base "
     "locus",
     &check_singular_locus},
    {"c09-chow-degrees",
     "Top intersection numbers in the Chow ring",
     "deg H^4 = 24 and deg 2H.H^3 = 48",
     &check_chow_degrees},
    {"c09-euler",
     "Euler number of a smooth anticanonical hypersurface via Chern classes",
     "chi = -128, with third Chern class -16 sigma_3",
     &check_euler},
    {"c10-hodge-table",
     "Hodge numbers of the free quotients for every built-in group",
     "(4,36,40), (4,20,24), (2,18,20), (2,10,12), (1,9,10) twice and "
     "(1,5,6) for the four order-16 groups",
     &check_hodge_table},
    {"c11-chase-values",
     "Solve the built-in long-exact-sequence chase from the product formula "
     "plus two vanishing facts",
     "h0(O_Y(2H))=80, h0(O_Y(H))=16, h1(ThetaY(-H))=16, h1(ThetaY)=68, "
     "h2(ThetaY)=4, h1-h0(ThetaY|T)=52, h2(ThetaY|T)=4, h1(ThetaT)=67, "
     "h2(ThetaT)=3",
     &check_chase_values},
    {"c11-kunneth-rows",
     "Product-formula cohomology of the ambient line bundles and tangent "
     "summand twists",
     "every ambient row matches its expected five dimensions",
     &check_kunneth_rows},
    {"c12-surface-invariants",
     "Numerical invariants of the free order-16 quotient of the (2H, H) "
     "complete-intersection surface",
     "K^2 = 3, chi(O) = 1, covering p_g = 15, expected moduli dimension 4",
     &check_surface_invariants},
    {"c13-obstruction-double-transposition",
     "Full-support eigenvector decision for the canonical order-4 generator "
     "with double-transposition factor permutation",
     "a full-support eigenvector exists",
     &check_obstruction_double_transposition},
    {"c13-obstruction-id-family",
     "Full-support eigenvector decision for all 16 diagonal sign lifts with "
     "identity factor permutation",
     "all 16 lifts are blocked with the same witness monomial pair",
     &check_obstruction_id_family},
    {"c13-obstruction-transposition-family",
     "Full-support eigenvector decision for the four canonical lifts with a "
     "single transposition",
     "all 4 lifts are blocked with the same witness monomial pair",
     &check_obstruction_transposition},
    {"c14-conjugation-invariance",
     "Conjugate built-in generator sets by 100 random product automorphisms",
     "orders, order histograms, isomorphism types and fixed-locus profiles "
     "are preserved",
     &check_conjugation_invariance},
    {"c14-field-axioms",
     "Field axioms, parse/print round trips and perfect-square roots on "
     "random cyclotomic numbers",
     "no violations in 200 randomized trials",
     &check_field_axioms},
    {"c14-group-axioms",
     "Identity, inverses, Latin-square property and sampled associativity "
     "for every built-in closure",
     "all group axioms hold exactly",
     &check_group_axioms},
    {"c14-pullback-multiplicative",
     "Pullback functoriality and ring-homomorphism property on random "
     "sections",
     "pullback respects composition and products in all trials",
     &check_pullback_multiplicative},
    {"c14-rank-invariance",
     "Rank under row permutation and scaling, and kernel exactness, for "
     "random matrices",
     "rank is invariant and kernels multiply to zero in all trials",
     &check_rank_invariance},
};

}  // namespace

std::vector<std::string> all_check_ids() {
  std::vector<std::string> ids;
  for (const auto& c : kChecks) ids.push_back(c.id);
  return ids;
}

CheckResult run_check(const std::string& id) {
  for (const auto& c : kChecks) {
    if (id != c.id) continue;
    CheckResult r;
    r.id = c.id;
    r.description = c.description;
    r.claim = c.claim;
    try {
      r.status = c.fn(r.details) ? "pass" : "fail";
    } catch (const std::exception& e) {
      r.status = "error";
      r.details["error"] = e.what();
    }
    return r;
  }
  throw std::out_of_range("unknown check id: " + id);
}

}  // namespace fourlines
