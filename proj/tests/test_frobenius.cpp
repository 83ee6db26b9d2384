#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "halg/frobenius.hpp"

using namespace halg;

namespace {

std::vector<Rat> random_weights(std::mt19937& rng, int order) {
  std::vector<Rat> w = {Rat(1)};
  for (int x = 1; x < order; ++x) {
    int num = static_cast<int>(rng() % 9) - 4;
    if (num == 0) num = 3;
    w.emplace_back(num, 1 + static_cast<int>(rng() % 4));
  }
  return w;
}

}  // namespace

TEST_CASE("quaternion top pairing and Nakayama automorphism") {
  FiniteGroup q8 = group_quaternion();
  GradedAlgebraTable a = hasse_algebra(q8, GeneratingSet::of({2, 4, 5}));
  // indices: 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k; top m = -i.
  const Matrix p = top_pairing(a);
  CHECK(p[2][1] == 1);  // i * (-1) = -i
  CHECK(p[2][6] == 0);  // i * k dies in the algebra
  CHECK(p[0][3] == 1);  // e * (-i)
  CHECK(is_frobenius(a));
  CHECK_FALSE(is_symmetric_frobenius(a));

  SUBCASE("one nonzero entry per row and per column") {
    for (int r = 0; r < 8; ++r) {
      int row_nz = 0, col_nz = 0;
      for (int c = 0; c < 8; ++c) {
        if (p[r][c] != 0) ++row_nz;
        if (p[c][r] != 0) ++col_nz;
      }
      CHECK(row_nz == 1);
      CHECK(col_nz == 1);
    }
  }
  SUBCASE("Nakayama fixes i, swaps j with -j, has order 2") {
    MonomialAutomorphism mu = nakayama(a);
    CHECK(mu.perm[2] == 2);
    CHECK(mu.perm[4] == 5);
    CHECK(mu.perm[5] == 4);
    CHECK(mu.perm[6] == 7);  // k <-> -k in degree 2
    CHECK(mu.perm[1] == 1);
    CHECK(mu.perm[3] == 3);
    for (int g = 0; g < 8; ++g) {
      CHECK(mu.scalars[g] == 1);  // untwisted algebra
      CHECK(mu.perm[mu.perm[g]] == g);
    }
    CHECK(is_multiplicative(a, mu));
  }
  SUBCASE("permutation part is conjugation by m") {
    CHECK(check_nakayama_is_conjugation(a));
  }
  SUBCASE("order divides a! and m^order is central") {
    CHECK(nakayama_order_divides_factorial(a));  // order 2 | 3!
  }
  SUBCASE("beta is trivial for the untwisted algebra") {
    std::vector<Rat> beta = beta_scalars(a);
    for (const Rat& b : beta) CHECK(b == 1);
  }
}

TEST_CASE("S3 Nakayama interchanges the two transpositions") {
  FiniteGroup s3 = group_symmetric(3);
  auto find = [&](const std::string& l) {
    for (int g = 0; g < 6; ++g)
      if (s3.label(g) == l) return g;
    FAIL("missing label");
    return -1;
  };
  const int x1 = find("(12)"), x2 = find("(23)"), y1 = find("(123)"), z = find("(13)");
  GradedAlgebraTable a = hasse_algebra(s3, GeneratingSet::of({x1, x2}));
  const Matrix p = top_pairing(a);
  CHECK(p[y1][x1] == 1);
  CHECK(p[y1][x2] == 0);
  CHECK(is_frobenius(a));
  CHECK_FALSE(is_symmetric_frobenius(a));
  MonomialAutomorphism mu = nakayama(a);
  CHECK(mu.perm[x1] == x2);
  CHECK(mu.perm[x2] == x1);
  CHECK(mu.perm[z] == z);
  CHECK(check_nakayama_is_conjugation(a));  // (13)(12)(13) = (23)
  CHECK(nakayama_order_divides_factorial(a));
}

TEST_CASE("trivial group") {
  GradedAlgebraTable a = hasse_algebra(group_trivial(), GeneratingSet::of({}));
  CHECK(top_pairing(a) == Matrix{{Rat(1)}});
  CHECK(is_frobenius(a));
  CHECK(is_symmetric_frobenius(a));
  MonomialAutomorphism mu = nakayama(a);
  CHECK(mu.perm == std::vector<int>{0});
  CHECK(mu.scalars[0] == 1);
}

TEST_CASE("C4 with both nontrivial powers as generators") {
  FiniteGroup c4 = group_cyclic(4);
  GradedAlgebraTable a = hasse_algebra(c4, GeneratingSet::of({1, 2}));
  CHECK(hilbert_series(a).str() == "1+2t+t^2");
  CHECK(is_frobenius(a));
  CHECK(is_symmetric_frobenius(a));  // abelian: m central
  CHECK(check_nakayama_is_conjugation(a));
}

TEST_CASE("dihedral Coxeter instances: symmetric iff n even") {
  for (int n = 3; n <= 8; ++n) {
    FiniteGroup g = group_dihedral(n);
    GradedAlgebraTable a = hasse_algebra(g, GeneratingSet::of({n, n + 1}));
    CHECK(is_frobenius(a));
    CHECK(is_symmetric_frobenius(a) == (n % 2 == 0));
    CHECK(is_symmetric_frobenius(a) == is_central(g, *a.top));
    CHECK(check_nakayama_is_conjugation(a));
    CHECK(nakayama_order_divides_factorial(a));
    if (n % 2 == 0) {
      // m = rho^{n/2} central, so the permutation part is the identity.
      MonomialAutomorphism mu = nakayama(a);
      for (int x = 0; x < g.order; ++x) CHECK(mu.perm[x] == x);
    }
  }
}

TEST_CASE("no unique top: not Frobenius, nakayama refuses") {
  FiniteGroup q8 = group_quaternion();
  GradedAlgebraTable a = hasse_algebra(q8, GeneratingSet::of({2, 4}));  // {i, j}
  CHECK(hilbert_series(a).str() == "1+2t+3t^2+2t^3");
  CHECK_FALSE(a.top);
  CHECK_FALSE(is_frobenius(a));
  CHECK_THROWS_AS(top_pairing(a), NoUniqueTop);
  CHECK_THROWS_AS(nakayama(a), NotFrobenius);
  CHECK_THROWS_AS(is_symmetric_frobenius(a), NotFrobenius);
  CHECK_THROWS_AS(beta_scalars(a), NotFrobenius);
}

TEST_CASE("coboundary twists: beta(g) = lambda(g)/lambda(mgm^-1)") {
  std::mt19937 rng(20260824);
  std::vector<std::pair<FiniteGroup, GeneratingSet>> fixtures;
  fixtures.emplace_back(group_quaternion(), GeneratingSet::of({2, 4, 5}));
  fixtures.emplace_back(group_dihedral(4), GeneratingSet::of({4, 5}));
  fixtures.emplace_back(group_dihedral(3), GeneratingSet::of({3, 4}));
  fixtures.emplace_back(group_cyclic(4), GeneratingSet::of({1, 2}));
  for (const auto& [g, re] : fixtures) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rat> w = random_weights(rng, g.order);
      GradedAlgebraTable a = skew_hasse_from_weights(g, re, w);
      CHECK(is_frobenius(a));  // twisting preserves the Frobenius property
      const int m = *a.top;
      std::vector<Rat> beta = beta_scalars(a);
      CHECK(beta[m] == 1);
      for (int x = 0; x < g.order; ++x)
        CHECK(beta[x] == w[x] / w[conjugate_elem(g, m, x)]);
      // The full automorphism is mu(g) = beta(g) * mgm^-1.
      MonomialAutomorphism mu = nakayama(a);
      for (int x = 0; x < g.order; ++x) {
        CHECK(mu.perm[x] == conjugate_elem(g, m, x));
        CHECK(mu.scalars[x] == beta[x]);
      }
    }
  }
}

TEST_CASE("palindrome and Frobenius coincide on a small sweep") {
  // All generating sets of size <= 3 for a few groups of order <= 8.
  std::vector<FiniteGroup> corpus = {group_cyclic(6), group_quaternion(), group_dihedral(3),
                                     group_product(group_cyclic(2), group_cyclic(2))};
  for (const auto& g : corpus) {
    std::vector<int> elems;
    for (int x = 1; x < g.order; ++x) elems.push_back(x);
    const int n = static_cast<int>(elems.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) > 3) continue;
      std::vector<int> members;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) members.push_back(elems[i]);
      GradedAlgebraTable a;
      try {
        a = hasse_algebra(g, GeneratingSet::of(members));
      } catch (const DoesNotGenerate&) {
        continue;
      }
      CHECK(is_palindrome(hilbert_series(a)) == is_frobenius(a));
    }
  }
}
