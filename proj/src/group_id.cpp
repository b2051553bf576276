#include "fourlines/group_id.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace fourlines {

namespace {

MultTable table_from_rule(int n, const std::function<int(int, int)>& mul) {
  MultTable t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = mul(a, b);
  return t;
}

MultTable mk_cyclic(int n) {
  return table_from_rule(n, [n](int a, int b) { return (a + b) % n; });
}

MultTable mk_product(const MultTable& s, const MultTable& t) {
  const int ns = int(s.size()), nt = int(t.size());
  return table_from_rule(ns * nt, [&, nt](int a, int b) {
    return s[a / nt][b / nt] * nt + t[a % nt][b % nt];
  });
}

// order 2n; element r + n*s encodes rot^r flip^s, flip rot flip = rot^{-1}
MultTable mk_dihedral(int n) {
  return table_from_rule(2 * n, [n](int a, int b) {
    int ra = a % n, sa = a / n, rb = b % n, sb = b / n;
    int r = sa ? (ra - rb + n) % n : (ra + rb) % n;
    return r + n * ((sa + sb) % 2);
  });
}

// order 4n; element r + 2n*s encodes a^r b^s with a^{2n}=1, b^2=a^n, b a b^{-1}=a^{-1}
MultTable mk_dicyclic(int n) {
  const int m = 2 * n;
  return table_from_rule(4 * n, [n, m](int a, int b) {
    int ra = a % m, sa = a / m, rb = b % m, sb = b / m;
    if (sa == 0) return (ra + rb) % m + m * sb;
    if (sb == 0) return (ra - rb + m) % m + m;
    return (ra - rb + n + 2 * m) % m;
  });
}

// order 16; element r + 8*s encodes g^r h^s with h g h^{-1} = g^k (k = 5 or 3)
MultTable mk_mod16(int k) {
  return table_from_rule(16, [k](int a, int b) {
    int ra = a % 8, sa = a / 8, rb = b % 8, sb = b / 8;
    int r = (ra + (sa ? k * rb : rb)) % 8;
    return r + 8 * ((sa + sb) % 2);
  });
}

// order 16; (i,j)(i',j') = (i + (-1)^j i', j + j') with i, j in Z4
MultTable mk_z4sz4() {
  return table_from_rule(16, [](int a, int b) {
    int ia = a % 4, ja = a / 4, ib = b % 4, jb = b / 4;
    int i = (ja % 2) ? (ia - ib + 4) % 4 : (ia + ib) % 4;
    return i + 4 * ((ja + jb) % 4);
  });
}

// order 16; (i,j,l)(i',j',l') = (i+i', j+j'+l*i', l+l'), i in Z4, j,l in Z2
MultTable mk_sg16_3() {
  return table_from_rule(16, [](int a, int b) {
    int ia = a % 4, ja = (a / 4) % 2, la = a / 8;
    int ib = b % 4, jb = (b / 4) % 2, lb = b / 8;
    int i = (ia + ib) % 4;
    int j = (ja + jb + la * ib) % 2;
    int l = (la + lb) % 2;
    return i + 4 * j + 8 * l;
  });
}

// order 16; central product of D4 (order 8) and Z4 over the common square:
// (i,j,l)(i',j',l') = (i + (-1)^j i' + 2*floor((l+l')/2), j+j', (l+l') mod 2)
MultTable mk_cpd8z4() {
  return table_from_rule(16, [](int a, int b) {
    int ia = a % 4, ja = (a / 4) % 2, la = a / 8;
    int ib = b % 4, jb = (b / 4) % 2, lb = b / 8;
    int i = ((ja ? ia - ib : ia + ib) + 2 * ((la + lb) / 2) + 8) % 4;
    return i + 4 * ((ja + jb) % 2) + 8 * ((la + lb) % 2);
  });
}

// order 12; even permutations of {0,1,2,3} under composition, identity first
MultTable mk_a4() {
  std::vector<std::array<int, 4>> elems;
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    int inv = 0;
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y)
        if (p[x] > p[y]) ++inv;
    if (inv % 2 == 0) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // next_permutation starts at the identity, so elems[0] is the identity
  auto find = [&](const std::array<int, 4>& q) {
    for (size_t j = 0; j < elems.size(); ++j)
      if (elems[j] == q) return int(j);
    throw std::logic_error("mk_a4: composition left A4");
  };
  return table_from_rule(int(elems.size()), [&](int a, int b) {
    std::array<int, 4> q{};
    for (int x = 0; x < 4; ++x) q[x] = elems[a][elems[b][x]];
    return find(q);
  });
}

int table_identity(const MultTable& t) {
  const int n = int(t.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = (t[e][x] == x && t[x][e] == x);
    if (ok) return e;
  }
  throw std::invalid_argument("multiplication table has no identity");
}

int element_order(const MultTable& t, int e, int g) {
  int cur = g;
  for (int n = 1; n <= int(t.size()); ++n) {
    if (cur == e) return n;
    cur = t[cur][g];
  }
  throw std::invalid_argument("multiplication table has an element of unbounded order");
}

// Greedy minimal-ish generating sequence (indices), scanning in index order.
std::vector<int> find_generators(const MultTable& t, int e) {
  const int n = int(t.size());
  std::vector<int> gens;
  std::vector<char> in_span(n, 0);
  in_span[e] = 1;
  int span_size = 1;
  auto grow = [&]() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a) {
        if (!in_span[a]) continue;
        for (int g : gens) {
          int p = t[a][g];
          if (!in_span[p]) {
            in_span[p] = 1;
            ++span_size;
            changed = true;
          }
        }
      }
    }
  };
  for (int cand = 0; cand < n && span_size < n; ++cand) {
    if (in_span[cand]) continue;
    gens.push_back(cand);
    grow();
  }
  return gens;
}

// For every element, a word in the generators (indices into gens) reaching it
// from the identity; BFS so words are shortest-first and deterministic.
std::vector<std::vector<int>> element_words(const MultTable& t, int e,
                                            const std::vector<int>& gens) {
  const int n = int(t.size());
  std::vector<std::vector<int>> words(n);
  std::vector<char> seen(n, 0);
  std::vector<int> queue{e};
  seen[e] = 1;
  for (size_t at = 0; at < queue.size(); ++at) {
    int a = queue[at];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int p = t[a][gens[gi]];
      if (seen[p]) continue;
      seen[p] = 1;
      words[p] = words[a];
      words[p].push_back(int(gi));
      queue.push_back(p);
    }
  }
  if (queue.size() != size_t(n))
    throw std::logic_error("element_words: generators do not span the group");
  return words;
}

bool isomorphic_to_reference(const ReferenceGroup& ref, const MultTable& t,
                             int t_identity, const std::vector<int>& t_orders) {
  const int n = int(t.size());
  const int re = table_identity(ref.table);
  std::vector<int> gens = find_generators(ref.table, re);
  std::vector<std::vector<int>> words = element_words(ref.table, re, gens);
  std::vector<int> gen_orders;
  for (int g : gens) gen_orders.push_back(element_order(ref.table, re, g));

  // candidate images per generator, filtered by element order
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t gi = 0; gi < gens.size(); ++gi)
    for (int h = 0; h < n; ++h)
      if (t_orders[h] == gen_orders[gi]) candidates[gi].push_back(h);

  std::vector<int> image(gens.size(), -1);
  std::function<bool(size_t)> place = [&](size_t gi) -> bool {
    if (gi == gens.size()) {
      // evaluate every word in t and verify a bijective homomorphism
      std::vector<int> phi(n, -1);
      for (int a = 0; a < n; ++a) {
        int cur = t_identity;
        for (int step : words[a]) cur = t[cur][image[step]];
        phi[a] = cur;
      }
      std::vector<char> hit(n, 0);
      for (int v : phi) {
        if (hit[v]) return false;
        hit[v] = 1;
      }
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (phi[ref.table[a][b]] != t[phi[a]][phi[b]]) return false;
      return true;
    }
    for (int h : candidates[gi]) {
      image[gi] = h;
      if (place(gi + 1)) return true;
    }
    image[gi] = -1;
    return false;
  };
  return place(0);
}

}  // namespace

const std::vector<ReferenceGroup>& reference_groups() {
  static const std::vector<ReferenceGroup> refs = [] {
    std::vector<ReferenceGroup> r;
    auto add = [&](const std::string& label, MultTable t) {
      r.push_back({label, std::move(t)});
    };
    const MultTable z2 = mk_cyclic(2), z3 = mk_cyclic(3), z4 = mk_cyclic(4),
                    z8 = mk_cyclic(8);
    add("Z1", mk_cyclic(1));
    add("Z2", z2);
    add("Z3", z3);
    add("Z4", z4);
    add("Z2xZ2", mk_product(z2, z2));
    add("Z5", mk_cyclic(5));
    add("Z6", mk_cyclic(6));
    add("D3", mk_dihedral(3));
    add("Z7", mk_cyclic(7));
    add("Z8", z8);
    add("Z4xZ2", mk_product(z4, z2));
    add("Z2xZ2xZ2", mk_product(mk_product(z2, z2), z2));
    add("D4", mk_dihedral(4));
    add("Q8", mk_dicyclic(2));
    add("Z9", mk_cyclic(9));
    add("Z3xZ3", mk_product(z3, z3));
    add("Z10", mk_cyclic(10));
    add("D5", mk_dihedral(5));
    add("Z11", mk_cyclic(11));
    add("Z12", mk_cyclic(12));
    add("Z6xZ2", mk_product(mk_cyclic(6), z2));
    add("D6", mk_dihedral(6));
    add("Dic3", mk_dicyclic(3));
    add("A4", mk_a4());
    add("Z13", mk_cyclic(13));
    add("Z14", mk_cyclic(14));
    add("D7", mk_dihedral(7));
    add("Z15", mk_cyclic(15));
    add("Z16", mk_cyclic(16));
    add("Z8xZ2", mk_product(z8, z2));
    add("Z4xZ4", mk_product(z4, z4));
    add("Z4xZ2xZ2", mk_product(z4, mk_product(z2, z2)));
    add("Z2xZ2xZ2xZ2", mk_product(mk_product(z2, z2), mk_product(z2, z2)));
    add("D8", mk_dihedral(8));
    add("Q16", mk_dicyclic(4));
    add("SD16", mk_mod16(3));
    add("M16", mk_mod16(5));
    add("Z4sZ4", mk_z4sz4());
    add("SG16_3", mk_sg16_3());
    add("CPD8Z4", mk_cpd8z4());
    add("D4xZ2", mk_product(mk_dihedral(4), z2));
    add("Q8xZ2", mk_product(mk_dicyclic(2), z2));
    return r;
  }();
  return refs;
}

std::map<int, int> table_order_histogram(const MultTable& table) {
  const int e = table_identity(table);
  std::map<int, int> h;
  for (int g = 0; g < int(table.size()); ++g) ++h[element_order(table, e, g)];
  return h;
}

std::string identify_isomorphism_type(const MultTable& table) {
  const int n = int(table.size());
  if (n == 0 || n > 16)
    throw std::invalid_argument("identify_isomorphism_type: order must be 1..16");
  for (const auto& row : table) {
    if (int(row.size()) != n)
      throw std::invalid_argument("identify_isomorphism_type: table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument("identify_isomorphism_type: entry out of range");
  }
  const int e = table_identity(table);
  std::vector<int> orders(n);
  for (int g = 0; g < n; ++g) orders[g] = element_order(table, e, g);
  std::map<int, int> hist;
  for (int o : orders) ++hist[o];

  for (const auto& ref : reference_groups()) {
    if (int(ref.table.size()) != n) continue;
    if (table_order_histogram(ref.table) != hist) continue;
    if (isomorphic_to_reference(ref, table, e, orders)) return ref.label;
  }
  throw std::invalid_argument(
      "identify_isomorphism_type: no reference class matches (not a group table?)");
}

}  // namespace fourlines
