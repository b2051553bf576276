#include "doctest.h"
#include "fourlines/chow.hpp"
#include "fourlines/les_chase.hpp"

#include <nlohmann/json.hpp>

using namespace fourlines;

namespace {

// patch one fact into the default chase document
std::string with_fact(const std::string& term, int q, long value) {
  auto doc = nlohmann::json::parse(default_chase_spec());
  doc["facts"][term][std::to_string(q)] = value;
  return doc.dump();
}

}  // namespace

TEST_CASE("square-zero generators") {
  ChowClass h1 = ChowClass::h(1);
  CHECK(h1 * h1 == ChowClass());
  ChowClass H = ChowClass::big_h();
  // H = h1 + h2 + h3 + h4, H^2 has the 6 mixed terms with coefficient 2
  ChowClass H2 = H * H;
  CHECK(H2.coeff(0b0011) == 2);
  CHECK(H2.coeff(0b1010) == 2);
  CHECK(H2.coeff(0b0001) == 0);
}

TEST_CASE("top intersection numbers") {
  ChowClass H = ChowClass::big_h();
  CHECK(chow_degree(H * H * H * H) == 24);
  CHECK(chow_degree(H.scaled(2) * H * H * H) == 48);
  CHECK(chow_degree(sigma(4)) == 1);
  // each sigma3 term pairs with exactly one complementary factor
  CHECK(chow_degree(sigma(1) * sigma(3)) == 4);
}

TEST_CASE("chern classes of the ambient product") {
  // c(T) = prod (1 + 2 h_i): c1 = 2 sigma1, c2 = 4 sigma2, c3 = 8 sigma3
  ChowClass c = total_chern_x();
  CHECK(c.coeff(0b0001) == 2);
  CHECK(c.coeff(0b0011) == 4);
  CHECK(c.coeff(0b0111) == 8);
  CHECK(c.coeff(0b1111) == 16);
  CHECK(c3_anticanonical_hypersurface() == sigma(3).scaled(-16));
  CHECK(euler_anticanonical() == -128);
}

TEST_CASE("product cohomology of split bundles") {
  using A5 = std::array<long, 5>;
  CHECK(kunneth_cohomology({0, 0, 0, 0}) == A5{1, 0, 0, 0, 0});
  CHECK(kunneth_cohomology({1, 1, 1, 1}) == A5{16, 0, 0, 0, 0});
  CHECK(kunneth_cohomology({2, 2, 2, 2}) == A5{81, 0, 0, 0, 0});
  CHECK(kunneth_cohomology({-1, -1, -1, -1}) == A5{0, 0, 0, 0, 0});
  CHECK(kunneth_cohomology({-2, -2, -2, -2}) == A5{0, 0, 0, 0, 1});
  CHECK(kunneth_cohomology({2, 0, 0, 0}) == A5{3, 0, 0, 0, 0});
  CHECK(kunneth_cohomology({2, -2, 0, 0}) == A5{0, 3, 0, 0, 0});
  CHECK(kunneth_cohomology({-2, -2, -2, 0}) == A5{0, 0, 0, 1, 0});
  // tangent bundle rows: sums of the four twisted summands
  auto row = [](int twist) {
    A5 total{};
    for (int k = 0; k < 4; ++k) {
      std::array<int, 4> d{twist, twist, twist, twist};
      d[k] += 2;
      A5 one = kunneth_cohomology(d);
      for (int q = 0; q < 5; ++q) total[q] += one[q];
    }
    return total;
  };
  CHECK(row(0) == A5{12, 0, 0, 0, 0});
  CHECK(row(-1) == A5{0, 0, 0, 0, 0});
  CHECK(row(-2) == A5{0, 0, 0, 4, 0});
  CHECK(row(-3) == A5{0, 0, 0, 0, 0});
}

TEST_CASE("quotient Hodge numbers for every builtin") {
  struct Row { const char* name; long h11, h12; };
  const Row rows[] = {{"z2", 4, 36},   {"z2xz2", 4, 20}, {"z4", 2, 18},
                      {"z4xz2", 2, 10}, {"z8", 1, 9},     {"q8", 1, 9},
                      {"z8xz2", 1, 5},  {"z4xz4", 1, 5},  {"z4sz4", 1, 5},
                      {"q8xz2", 1, 5}};
  for (const auto& r : rows) {
    HodgeNumbers h = quotient_hodge(closure(builtin_group(r.name)));
    CHECK(h.h11 == r.h11);
    CHECK(h.h12 == r.h12);
    CHECK(h.height() == r.h11 + r.h12);
    CHECK(h.euler() == 2 * (r.h11 - r.h12));
  }
  // trivial group: the covering threefold itself
  HodgeNumbers top = quotient_hodge(closure({ProductAuto()}));
  CHECK(top.h11 == 4);
  CHECK(top.h12 == 68);
}

TEST_CASE("surface invariants divide through the group order") {
  SurfaceInvariants s16 = surface_invariants(16);
  CHECK(s16.k2 == 3);
  CHECK(s16.chi == 1);
  CHECK(s16.pg_cover == 15);
  CHECK(s16.moduli_dim == 4);
  SurfaceInvariants s2 = surface_invariants(2);
  CHECK(s2.k2 == 24);
  CHECK(s2.chi == 8);
  CHECK(s2.moduli_dim == 32);
  CHECK_THROWS_AS(surface_invariants(5), DivisibilityError);
}

TEST_CASE("the default chase determines all pinned targets") {
  ChaseResult r = run_chase(default_chase_spec());
  struct Want { const char* name; long v; };
  const Want wants[] = {
      {"h0(O_Y(2H))", 80}, {"h0(O_Y(H))", 16},     {"h0(O_Y)", 1},
      {"h3(O_Y)", 1},      {"h0(O_T(H))", 15},     {"h2(O_T(H))", 1},
      {"h0(ThetaX|Y)", 12}, {"h2(ThetaX|Y)", 4},   {"h1(ThetaY(-H))", 16},
      {"h3(ThetaY(-H))", 0}, {"h1(ThetaY)", 68},   {"h2(ThetaY)", 4},
      {"h3(ThetaY)", 0},   {"h1-h0(ThetaY|T)", 52}, {"h2(ThetaY|T)", 4},
      {"h1(ThetaT)", 67},  {"h2(ThetaT)", 3}};
  for (const auto& w : wants) {
    const auto& t = r.target(w.name);
    REQUIRE(t.determined);
    CHECK(t.value == w.v);
  }
  // a value the sequences pin down without being an explicit target
  CHECK(r.has("ThetaXYmH", 3));
  // the restricted-tangent term keeps a one-parameter ambiguity in low degree
  CHECK(!r.has("ThetaYT", 0));
  CHECK(!r.has("ThetaYT", 1));
  CHECK_THROWS_AS(r.value("ThetaYT", 0), std::out_of_range);
}

TEST_CASE("contradictory facts are detected") {
  // computed h0 of the restricted tangent bundle is 12; both a too-small and
  // a too-large claim must be rejected
  CHECK_THROWS_AS(run_chase(with_fact("ThetaXY", 0, 5)), ChaseInconsistencyError);
  CHECK_THROWS_AS(run_chase(with_fact("ThetaXY", 0, 100)), ChaseInconsistencyError);
}

TEST_CASE("spec validation failures carry context") {
  CHECK_THROWS_AS(run_chase("{"), ChaseSpecError);
  CHECK_THROWS_AS(run_chase(R"({"schema": 2})"), ChaseSpecError);
  // facts may not target terms whose values the product formula already fixes
  auto doc = nlohmann::json::parse(default_chase_spec());
  doc["facts"]["OX"] = {{"0", 1}};
  CHECK_THROWS_AS(run_chase(doc.dump()), ChaseSpecError);
  // sequences must reference declared terms
  auto doc2 = nlohmann::json::parse(default_chase_spec());
  doc2["sequences"].push_back({"OX", "nope", "OY"});
  CHECK_THROWS_AS(run_chase(doc2.dump()), ChaseSpecError);
}
