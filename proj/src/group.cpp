#include "halg/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace halg {

namespace {

void validate(FiniteGroup& g) {
  const int n = g.order;
  // Latin square: each row and column a permutation of 0..n-1.
  for (int r = 0; r < n; ++r) {
    std::vector<bool> seen(n, false);
    for (int c = 0; c < n; ++c) {
      const int v = g.cayley[r][c];
      if (v < 0 || v >= n || seen[v]) throw NotLatinSquare(r, c);
      seen[v] = true;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<bool> seen(n, false);
    for (int r = 0; r < n; ++r) {
      const int v = g.cayley[r][c];
      if (seen[v]) throw NotLatinSquare(r, c);
      seen[v] = true;
    }
  }
  for (int h = 0; h < n; ++h)
    if (g.cayley[0][h] != h || g.cayley[h][0] != h) throw NoIdentity();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.cayley[g.cayley[a][b]][c] != g.cayley[a][g.cayley[b][c]])
          throw NotAssociative(a, b, c);
  g.inverses.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.cayley[a][b] == 0) g.inverses[a] = b;
}

}  // namespace

FiniteGroup group_from_cayley(std::vector<std::vector<int>> table,
                              std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw std::invalid_argument("empty Cayley table");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("Cayley table is not square");
  for (const auto& row : table)
    for (int v : row)
      if (v < 0 || v >= n) throw NotLatinSquare(0, 0);

  // Locate the two-sided identity; relabel it to index 0 if needed.
  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int h = 0; h < n && ok; ++h)
      ok = table[cand][h] == h && table[h][cand] == h;
    if (ok) { e = cand; break; }
  }
  if (e < 0) throw NoIdentity();
  if (e != 0) {
    std::vector<int> newidx(n);
    std::iota(newidx.begin(), newidx.end(), 0);
    std::swap(newidx[0], newidx[e]);  // involution: old index -> new index
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        t[newidx[a]][newidx[b]] = newidx[table[a][b]];
    table = std::move(t);
    if (!labels.empty()) std::swap(labels[0], labels[e]);
  }

  FiniteGroup g;
  g.order = n;
  g.cayley = std::move(table);
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    labels[0] = "e";
  }
  g.labels = std::move(labels);
  validate(g);
  return g;
}

FiniteGroup group_trivial() { return group_from_cayley({{0}}, {"e"}); }

FiniteGroup group_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  for (int a = 0; a < n; ++a)
    labels.push_back(a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a)));
  return group_from_cayley(std::move(t), std::move(labels));
}

FiniteGroup group_dihedral(int n) {
  if (n < 2) throw std::invalid_argument("dihedral parameter must be >= 2");
  const int order = 2 * n;
  // Element r^a rho^b at index a*n + b.
  auto idx = [n](int a, int b) { return a * n + ((b % n) + n) % n; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < n; ++d)
          // (r^a rho^b)(r^c rho^d) = r^{a+c} rho^{(-1)^c b + d}
          t[idx(a, b)][idx(c, d)] = idx((a + c) % 2, (c ? -b : b) + d);
  std::vector<std::string> labels(order);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < n; ++b) {
      std::string s;
      if (a) s += "r";
      if (b == 1) s += s.empty() ? "rho" : "*rho";
      else if (b > 1) s += (s.empty() ? "rho^" : "*rho^") + std::to_string(b);
      labels[idx(a, b)] = s.empty() ? "e" : s;
    }
  return group_from_cayley(std::move(t), std::move(labels));
}

FiniteGroup group_quaternion() {
  // Units 1,i,j,k encoded 0..3; element index = 2*unit + (sign < 0).
  // unit_mul[a][b] = (sign, unit) of the product of units a,b.
  static const int unit_mul[4][4][2] = {
      {{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}},
      {{+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}},
      {{+1, 2}, {-1, 3}, {-1, 0}, {+1, 1}},
      {{+1, 3}, {+1, 2}, {-1, 1}, {-1, 0}}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, sa = a % 2 ? -1 : 1;
      const int ub = b / 2, sb = b % 2 ? -1 : 1;
      const int s = sa * sb * unit_mul[ua][ub][0];
      t[a][b] = 2 * unit_mul[ua][ub][1] + (s < 0);
    }
  return group_from_cayley(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

namespace {

int perm_rank(const std::vector<int>& p) {
  // Lexicographic rank of a one-line permutation of 0..n-1.
  const int n = static_cast<int>(p.size());
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    int f = 1;
    for (int k = 2; k <= n - 1 - i; ++k) f *= k;
    rank += smaller * f;
  }
  return rank;
}

std::string cycle_label(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(n, false);
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || p[i] == i) continue;
    s += "(";
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      s += std::to_string(j + 1);
      j = p[j];
    }
    s += ")";
  }
  return s.empty() ? "e" : s;
}

}  // namespace

FiniteGroup group_symmetric(int n, int order_cap) {
  if (n < 1) throw std::invalid_argument("symmetric group parameter must be >= 1");
  long long fact = 1;
  for (int i = 2; i <= n; ++i) {
    fact *= i;
    if (fact > order_cap)
      throw OrderCapExceeded("symmetric group order " + std::to_string(fact) +
                             " exceeds cap " + std::to_string(order_cap));
  }
  const int order = static_cast<int>(fact);
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  // perms is in lexicographic order, so perms[rank] has that rank.
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> prod(n);
      for (int x = 0; x < n; ++x) prod[x] = perms[a][perms[b][x]];  // apply b first
      t[a][b] = perm_rank(prod);
    }
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back(cycle_label(q));
  return group_from_cayley(std::move(t), std::move(labels));
}

FiniteGroup group_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const int n1 = g1.order, n2 = g2.order, n = n1 * n2;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  auto idx = [n2](int a, int b) { return a * n2 + b; };
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2) {
      labels[idx(a1, a2)] = "(" + g1.label(a1) + "," + g2.label(a2) + ")";
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2)
          t[idx(a1, a2)][idx(b1, b2)] = idx(g1.mul(a1, b1), g2.mul(a2, b2));
    }
  return group_from_cayley(std::move(t), std::move(labels));
}

FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& generators,
                                    int order_cap) {
  if (generators.empty()) throw std::invalid_argument("no permutation generators");
  const size_t d = generators[0].size();
  std::vector<std::vector<int>> gens;
  for (const auto& g : generators) {
    if (g.size() != d) throw std::invalid_argument("permutation generators of mixed degree");
    std::vector<int> p(d);
    std::vector<bool> seen(d, false);
    for (size_t i = 0; i < d; ++i) {
      if (g[i] < 1 || g[i] > static_cast<int>(d) || seen[g[i] - 1])
        throw std::invalid_argument("not a permutation of 1.." + std::to_string(d));
      seen[g[i] - 1] = true;
      p[i] = g[i] - 1;
    }
    gens.push_back(p);
  }
  std::vector<int> id(d);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  index[id] = 0;
  elems.push_back(id);
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      std::vector<int> prod(d);
      for (size_t x = 0; x < d; ++x) prod[x] = elems[head][g[x]];
      if (index.emplace(prod, static_cast<int>(elems.size())).second) {
        elems.push_back(prod);
        if (static_cast<int>(elems.size()) > order_cap)
          throw OrderCapExceeded("permutation closure exceeds cap " + std::to_string(order_cap));
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(d);
      for (size_t x = 0; x < d; ++x) prod[x] = elems[a][elems[b][x]];
      t[a][b] = index.at(prod);
    }
  std::vector<std::string> labels;
  for (const auto& p : elems) labels.push_back(cycle_label(p));
  return group_from_cayley(std::move(t), std::move(labels));
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order; ++a)
    if (is_central(g, a)) z.push_back(a);
  return z;
}

bool is_central(const FiniteGroup& g, int x) {
  for (int b = 0; b < g.order; ++b)
    if (g.mul(x, b) != g.mul(b, x)) return false;
  return true;
}

int conjugate_elem(const FiniteGroup& G, int h, int g) {
  return G.mul(G.mul(h, g), G.inv(h));
}

int element_order(const FiniteGroup& g, int x) {
  int acc = x, n = 1;
  while (acc != 0) {
    acc = g.mul(acc, x);
    ++n;
  }
  return n;
}

}  // namespace halg
