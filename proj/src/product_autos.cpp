#include "fourlines/product_autos.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace fourlines {

Perm4::Perm4(const std::array<int, 4>& img) : img_(img) {
  std::array<bool, 4> seen{};
  for (int v : img_) {
    if (v < 0 || v > 3 || seen[v]) throw std::invalid_argument("Perm4: not a permutation of {0,1,2,3}");
    seen[v] = true;
  }
}

Perm4 Perm4::inverse() const {
  std::array<int, 4> inv{};
  for (int k = 0; k < 4; ++k) inv[img_[k]] = k;
  return Perm4(inv);
}

Perm4 Perm4::from_cycles(const std::vector<std::vector<int>>& cycles) {
  std::array<int, 4> img{0, 1, 2, 3};
  std::array<bool, 4> used{};
  for (const auto& cyc : cycles) {
    if (cyc.empty()) continue;
    for (int v : cyc) {
      if (v < 1 || v > 4) throw std::invalid_argument("Perm4: cycle entries must lie in 1..4");
      if (used[v - 1]) throw std::invalid_argument("Perm4: cycles are not disjoint");
      used[v - 1] = true;
    }
    for (size_t j = 0; j < cyc.size(); ++j) {
      int from = cyc[j] - 1;
      int to = cyc[(j + 1) % cyc.size()] - 1;
      img[from] = to;
    }
  }
  return Perm4(img);
}

std::vector<std::vector<int>> Perm4::cycles() const {
  std::vector<std::vector<int>> out;
  std::array<bool, 4> seen{};
  for (int start = 0; start < 4; ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    int cur = start;
    do {
      seen[cur] = true;
      cyc.push_back(cur);
      cur = img_[cur];
    } while (cur != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<std::vector<int>> Perm4::cycles_1based_nontrivial() const {
  std::vector<std::vector<int>> out;
  for (const auto& cyc : cycles()) {
    if (cyc.size() < 2) continue;
    std::vector<int> c1;
    for (int v : cyc) c1.push_back(v + 1);
    out.push_back(std::move(c1));
  }
  return out;
}

std::string Perm4::str() const {
  auto cyc = cycles_1based_nontrivial();
  if (cyc.empty()) return "id";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (size_t j = 0; j < c.size(); ++j) {
      if (j) os << ' ';
      os << c[j];
    }
    os << ')';
  }
  return os.str();
}

std::string point_str(const PointX& p) {
  std::ostringstream os;
  os << '(';
  for (int k = 0; k < 4; ++k) {
    if (k) os << ", ";
    os << p[k].str();
  }
  os << ')';
  return os.str();
}

ProductAuto ProductAuto::canonical() const {
  std::array<ProjMatrix, 4> c{mats_[0].canonical(), mats_[1].canonical(),
                              mats_[2].canonical(), mats_[3].canonical()};
  return ProductAuto(c, perm_);
}

bool operator==(const ProductAuto& a, const ProductAuto& b) {
  if (a.perm_ != b.perm_) return false;
  for (int k = 0; k < 4; ++k)
    if (!(a.mats_[k] == b.mats_[k])) return false;  // ProjMatrix == is projective
  return true;
}

std::string ProductAuto::key() const {
  std::ostringstream os;
  os << perm_.str() << '|';
  for (int k = 0; k < 4; ++k) {
    if (k) os << '|';
    os << mats_[k].canonical().str();
  }
  return os.str();
}

std::string ProductAuto::str() const {
  std::ostringstream os;
  os << '(';
  for (int k = 0; k < 4; ++k) {
    if (k) os << ", ";
    os << mats_[k].canonical().str();
  }
  os << ") o " << perm_.str();
  return os.str();
}

ProductAuto compose(const ProductAuto& h, const ProductAuto& g) {
  std::array<ProjMatrix, 4> mats{
      h.mat(0) * g.mat(h.perm()(0)), h.mat(1) * g.mat(h.perm()(1)),
      h.mat(2) * g.mat(h.perm()(2)), h.mat(3) * g.mat(h.perm()(3))};
  std::array<int, 4> img{};
  for (int k = 0; k < 4; ++k) img[k] = g.perm()(h.perm()(k));
  return ProductAuto(mats, Perm4(img));
}

ProductAuto auto_inverse(const ProductAuto& g) {
  Perm4 pinv = g.perm().inverse();
  std::array<ProjMatrix, 4> mats{g.mat(pinv(0)).proj_inverse(), g.mat(pinv(1)).proj_inverse(),
                                 g.mat(pinv(2)).proj_inverse(), g.mat(pinv(3)).proj_inverse()};
  return ProductAuto(mats, pinv);
}

ProductAuto conjugate(const ProductAuto& g, const ProductAuto& k) {
  return compose(compose(auto_inverse(k), g), k);
}

std::optional<int> auto_order(const ProductAuto& g, int cap) {
  ProductAuto id = ProductAuto::identity();
  ProductAuto p = g;
  for (int n = 1; n <= cap; ++n) {
    if (p == id) return n;
    p = compose(p, g);
  }
  return std::nullopt;
}

int FiniteSubgroup::index_of(const ProductAuto& g) const {
  for (size_t j = 0; j < elements.size(); ++j)
    if (elements[j] == g) return int(j);
  return -1;
}

std::vector<std::vector<int>> FiniteSubgroup::multiplication_table() const {
  const int n = order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int idx = index_of(compose(elements[a], elements[b]));
      if (idx < 0) throw std::logic_error("multiplication_table: product escaped the element set");
      table[a][b] = idx;
    }
  return table;
}

std::map<int, int> FiniteSubgroup::order_histogram() const {
  std::map<int, int> h;
  for (const auto& g : elements) {
    auto n = auto_order(g);
    if (!n) throw std::logic_error("order_histogram: element order exceeds cap");
    ++h[*n];
  }
  return h;
}

FiniteSubgroup closure(const std::vector<ProductAuto>& generators, int cap) {
  FiniteSubgroup sub;
  sub.generators = generators;
  std::map<std::string, int> seen;
  std::deque<int> work;
  sub.elements.push_back(ProductAuto::identity());
  seen[sub.elements[0].key()] = 0;
  work.push_back(0);
  while (!work.empty()) {
    int at = work.front();
    work.pop_front();
    for (const auto& g : generators) {
      ProductAuto next = compose(sub.elements[at], g).canonical();
      if (seen.count(next.key())) continue;
      if (int(sub.elements.size()) >= cap)
        throw CapExceededError("closure: generated group exceeds " + std::to_string(cap) + " elements");
      seen[next.key()] = int(sub.elements.size());
      sub.elements.push_back(next);
      work.push_back(int(sub.elements.size()) - 1);
    }
  }
  return sub;
}

ProjMatrix half_turn_matrix() {
  return ProjMatrix::from_strings({"1", "0", "0", "-1"});
}

ProjMatrix swap_matrix() {
  return ProjMatrix::from_strings({"0", "1", "1", "0"});
}

namespace {

ProjMatrix id_matrix() { return ProjMatrix(); }

ProductAuto tuple_auto(const std::array<ProjMatrix, 4>& mats,
                       const std::vector<std::vector<int>>& cycles = {}) {
  return ProductAuto(mats, Perm4::from_cycles(cycles));
}

}  // namespace

std::vector<std::string> builtin_group_names() {
  return {"z2", "z2xz2", "z4", "z4xz2", "z8", "q8", "z8xz2", "z4xz4", "z4sz4", "q8xz2"};
}

std::vector<ProductAuto> builtin_group(const std::string& name) {
  const ProjMatrix I = id_matrix();
  const ProjMatrix A = half_turn_matrix();
  const ProjMatrix B = swap_matrix();
  const ProjMatrix AB = A * B;

  const ProductAuto inv_diag = tuple_auto({A, A, A, A});          // order 2
  const ProductAuto inv_swap = tuple_auto({B, B, B, B});          // order 2
  const ProductAuto rot4 = tuple_auto({I, A, I, A}, {{1, 2}, {3, 4}});   // order 4
  const ProductAuto rot8 = tuple_auto({I, I, I, A}, {{1, 3, 2, 4}});     // order 8
  const ProductAuto quat = tuple_auto({I, A, A, I}, {{1, 3}, {2, 4}});   // order 4, q8 partner
  const ProductAuto four_b = tuple_auto({I, I, B, B}, {{1, 3}, {2, 4}}); // order 4, z4xz4 partner
  const ProductAuto four_s = tuple_auto({I, A, B, AB}, {{1, 3}, {2, 4}});// order 4, z4sz4 partner

  if (name == "z2") return {inv_diag};
  if (name == "z2xz2") return {inv_diag, inv_swap};
  if (name == "z4") return {rot4};
  if (name == "z4xz2") return {rot4, inv_swap};
  if (name == "z8") return {rot8};
  if (name == "q8") return {rot4, quat};
  if (name == "z8xz2") return {rot8, inv_swap};
  if (name == "z4xz4") return {rot4, four_b};
  if (name == "z4sz4") return {rot4, four_s};
  if (name == "q8xz2") return {rot4, quat, inv_swap};
  throw std::invalid_argument("builtin_group: unknown name '" + name + "'");
}

}  // namespace fourlines
