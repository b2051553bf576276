#include "doctest.h"
#include "fourlines/group_id.hpp"
#include "fourlines/product_autos.hpp"

using namespace fourlines;

namespace {

const CycloNum one = CycloNum::one();
const CycloNum zero = CycloNum::zero();

ProductAuto all_slots(const ProjMatrix& m) { return ProductAuto({m, m, m, m}, Perm4()); }

}  // namespace

TEST_CASE("permutations from cycle notation") {
  Perm4 p = Perm4::from_cycles({{1, 3, 2, 4}});
  CHECK(p(0) == 2);
  CHECK(p(2) == 1);
  CHECK(p(1) == 3);
  CHECK(p(3) == 0);
  CHECK(Perm4::from_cycles({}) == Perm4());
  CHECK(Perm4::from_cycles({{1, 2}, {3, 4}})(0) == 1);
  CHECK_THROWS_WITH(Perm4::from_cycles({{0, 1}}), "Perm4: cycle entries must lie in 1..4");
  CHECK_THROWS_WITH(Perm4::from_cycles({{1, 2}, {2, 3}}), "Perm4: cycles are not disjoint");
  // cycle decomposition round trip, nontrivial cycles only
  auto cyc = p.cycles_1based_nontrivial();
  CHECK(Perm4::from_cycles(cyc) == p);
}

TEST_CASE("builtin closure orders") {
  struct Row { const char* name; int order; };
  const Row rows[] = {{"z2", 2},     {"z2xz2", 4},  {"z4", 4},     {"z4xz2", 8},
                      {"z8", 8},     {"q8", 8},     {"z8xz2", 16}, {"z4xz4", 16},
                      {"z4sz4", 16}, {"q8xz2", 16}};
  for (const auto& r : rows) CHECK(closure(builtin_group(r.name)).order() == r.order);
}

TEST_CASE("isomorphism types of the builtins") {
  struct Row { const char* name; const char* type; };
  const Row rows[] = {{"z2", "Z2"},         {"z2xz2", "Z2xZ2"}, {"z4", "Z4"},
                      {"z4xz2", "Z4xZ2"},   {"z8", "Z8"},       {"q8", "Q8"},
                      {"z8xz2", "Z8xZ2"},   {"z4xz4", "Z4xZ4"}, {"z4sz4", "Z4sZ4"},
                      {"q8xz2", "Q8xZ2"}};
  for (const auto& r : rows)
    CHECK(identify_isomorphism_type(closure(builtin_group(r.name)).multiplication_table()) ==
          r.type);
}

TEST_CASE("equal order histograms still separate") {
  // three order-16 groups share the element-order profile {1:1, 2:3, 4:12}
  FiniteSubgroup a = closure(builtin_group("z4xz4"));
  FiniteSubgroup b = closure(builtin_group("z4sz4"));
  FiniteSubgroup c = closure(builtin_group("q8xz2"));
  CHECK(a.order_histogram() == b.order_histogram());
  CHECK(b.order_histogram() == c.order_histogram());
  std::map<int, int> expected{{1, 1}, {2, 3}, {4, 12}};
  CHECK(a.order_histogram() == expected);
  std::string ta = identify_isomorphism_type(a.multiplication_table());
  std::string tb = identify_isomorphism_type(b.multiplication_table());
  std::string tc = identify_isomorphism_type(c.multiplication_table());
  CHECK(ta != tb);
  CHECK(tb != tc);
  CHECK(ta != tc);
}

TEST_CASE("composition, inverse, conjugation, order") {
  auto gens = builtin_group("z4sz4");
  const ProductAuto &g = gens[0], &h = gens[1];
  CHECK(auto_order(g) == 4);
  CHECK(auto_order(h) == 4);
  CHECK(compose(g, auto_inverse(g)) == ProductAuto());
  CHECK(compose(auto_inverse(g), g) == ProductAuto());
  // apply respects composition: (h о g)(x) = h(g(x))
  PointX x{P1Point(one, CycloNum(2)), P1Point(one, zero), P1Point(zero, one),
           P1Point(one, -one)};
  CHECK(compose(h, g).apply(x) == h.apply(g.apply(x)));
  // conjugation preserves order
  ProductAuto k({swap_matrix(), ProjMatrix(one, zero, one, one), half_turn_matrix(),
                 ProjMatrix()},
                Perm4::from_cycles({{2, 3}}));
  CHECK(auto_order(conjugate(g, k)) == 4);
}

TEST_CASE("squares of the semidirect generators are coordinatewise") {
  auto gens = builtin_group("z4sz4");
  ProductAuto g2 = compose(gens[0], gens[0]);
  ProductAuto h2 = compose(gens[1], gens[1]);
  CHECK(g2 == all_slots(half_turn_matrix()));
  CHECK(h2 == all_slots(swap_matrix()));
  ProjMatrix ab = half_turn_matrix() * swap_matrix();
  CHECK(compose(g2, h2) == all_slots(ab));
  CHECK(auto_order(g2) == 2);
  CHECK(auto_order(h2) == 2);
  CHECK(auto_order(compose(g2, h2)) == 2);
}

TEST_CASE("closure structure") {
  FiniteSubgroup G = closure(builtin_group("z4"));
  CHECK(G.order() == 4);
  CHECK(G.elements[0] == ProductAuto());
  CHECK(G.index_of(ProductAuto()) == 0);
  auto table = G.multiplication_table();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(G.elements[table[a][b]] == compose(G.elements[a], G.elements[b]));
  // the table row of any generator is a permutation
  std::map<int, int> hist = G.order_histogram();
  CHECK(hist == std::map<int, int>{{1, 1}, {2, 1}, {4, 2}});
}

TEST_CASE("infinite generators exceed the closure cap") {
  ProductAuto shear({ProjMatrix(one, one, zero, one), ProjMatrix(), ProjMatrix(),
                     ProjMatrix()},
                    Perm4());
  CHECK(!auto_order(shear).has_value());
  CHECK_THROWS_AS(closure({shear}), CapExceededError);
}

TEST_CASE("string forms and keys") {
  ProductAuto g = builtin_group("z8")[0];
  CHECK(g.str().find(" o ") != std::string::npos);
  CHECK(g.key() == g.canonical().key());
  CHECK(point_str(PointX{P1Point(one, zero), P1Point(zero, one), P1Point(one, one),
                         P1Point(one, -one)}) ==
        "((1 : 0), (0 : 1), (1 : 1), (1 : -1))");
}

TEST_CASE("unknown builtin name") {
  CHECK_THROWS_AS(builtin_group("nonsense"), std::invalid_argument);
}
