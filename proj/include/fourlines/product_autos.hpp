// Automorphisms of X = P^1 x P^1 x P^1 x P^1.
//
// An element is a pair (A_1..A_4, sigma) with A_i in PGL_2 and sigma a
// permutation of the four factors, acting by (g.x)_i = A_i x_{sigma(i)}.
// Composition follows from that action: (h.g) has matrices B_i A_{tau(i)}
// and permutation i -> sigma(tau(i)) for h = (B, tau), g = (A, sigma).
// Cycle notation (c1 c2 ... ck) means sigma(c1) = c2, ..., sigma(ck) = c1.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourlines/moebius.hpp"

namespace fourlines {

struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Permutation of {0,1,2,3}; img[k] = image of k.
class Perm4 {
 public:
  Perm4() : img_{0, 1, 2, 3} {}
  explicit Perm4(const std::array<int, 4>& img);

  int operator()(int k) const { return img_[k]; }
  bool is_identity() const { return img_ == std::array<int, 4>{0, 1, 2, 3}; }
  Perm4 inverse() const;

  // 1-based disjoint cycles, e.g. {{1,2},{3,4}}; empty for the identity.
  static Perm4 from_cycles(const std::vector<std::vector<int>>& cycles);
  std::vector<std::vector<int>> cycles() const;  // all cycles incl. fixed points, 0-based
  std::vector<std::vector<int>> cycles_1based_nontrivial() const;
  std::string str() const;

  friend bool operator==(const Perm4& a, const Perm4& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm4& a, const Perm4& b) { return !(a == b); }
  friend bool operator<(const Perm4& a, const Perm4& b) { return a.img_ < b.img_; }

 private:
  std::array<int, 4> img_;
};

// A point of X.
using PointX = std::array<P1Point, 4>;

std::string point_str(const PointX& p);

class ProductAuto {
 public:
  ProductAuto() = default;  // identity
  ProductAuto(const std::array<ProjMatrix, 4>& mats, const Perm4& perm)
      : mats_(mats), perm_(perm) {}

  static ProductAuto identity() { return ProductAuto(); }

  const ProjMatrix& mat(int k) const { return mats_[k]; }
  const Perm4& perm() const { return perm_; }

  PointX apply(const PointX& x) const {
    PointX y;
    for (int k = 0; k < 4; ++k) y[k] = mats_[k].apply(x[perm_(k)]);
    return y;
  }

  // canonical representatives in every slot (projective data only)
  ProductAuto canonical() const;
  friend bool operator==(const ProductAuto& a, const ProductAuto& b);
  friend bool operator!=(const ProductAuto& a, const ProductAuto& b) { return !(a == b); }
  // deterministic key for containers and dedup
  std::string key() const;
  std::string str() const;

 private:
  std::array<ProjMatrix, 4> mats_{};
  Perm4 perm_{};
};

// h after g
ProductAuto compose(const ProductAuto& h, const ProductAuto& g);
ProductAuto auto_inverse(const ProductAuto& g);
// k^{-1} g k
ProductAuto conjugate(const ProductAuto& g, const ProductAuto& k);
std::optional<int> auto_order(const ProductAuto& g, int cap = 64);

struct FiniteSubgroup {
  std::vector<ProductAuto> generators;
  // BFS order from the identity; elements[0] is the identity
  std::vector<ProductAuto> elements;

  int order() const { return int(elements.size()); }
  // index of g in elements, or -1
  int index_of(const ProductAuto& g) const;
  // multiplication table: table[a][b] = index of elements[a] * elements[b]
  std::vector<std::vector<int>> multiplication_table() const;
  std::map<int, int> order_histogram() const;
};

// Deterministic closure of the generated subgroup; throws CapExceededError
// if more than `cap` distinct elements appear.
FiniteSubgroup closure(const std::vector<ProductAuto>& generators, int cap = 64);

// Canonical generating sets of the subgroups studied by this project.
// Names: z2, z2xz2, z4, z4xz2, z8, q8, z8xz2, z4xz4, z4sz4, q8xz2.
std::vector<ProductAuto> builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

// The involutions generating everything above: half_turn = diag(1,-1)
// (fixing (1:0),(0:1)) and swap = the coordinate exchange (fixing (1:1),(1:-1)).
ProjMatrix half_turn_matrix();
ProjMatrix swap_matrix();

}  // namespace fourlines
