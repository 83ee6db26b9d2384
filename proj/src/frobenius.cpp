#include "halg/frobenius.hpp"

#include <numeric>

namespace halg {

Matrix top_pairing(const GradedAlgebraTable& a) {
  if (!a.top) throw NoUniqueTop();
  const int n = a.group.order;
  const int m = *a.top;
  Matrix p(n, std::vector<Rat>(n, Rat(0)));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (auto prod = a.mul(g, h); prod && prod->second == m) p[g][h] = prod->first;
  return p;
}

bool is_frobenius(const GradedAlgebraTable& a) {
  if (!a.top) return false;
  return matrix_invertible(top_pairing(a));
}

MonomialAutomorphism nakayama(const GradedAlgebraTable& a) {
  if (!is_frobenius(a)) throw NotFrobenius();
  const int n = a.group.order;
  const Matrix p = top_pairing(a);
  // <a,b> = <mu(b),a> with mu(b) = sum_c N[c][b] c reads P = P^T N.
  const Matrix nmat = matrix_solve(matrix_transpose(p), p);
  MonomialAutomorphism mu;
  mu.perm.assign(n, -1);
  mu.scalars.assign(n, Rat(0));
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < n; ++c) {
      if (nmat[c][b] == 0) continue;
      if (mu.perm[b] != -1) throw NotMonomial();
      mu.perm[b] = c;
      mu.scalars[b] = nmat[c][b];
    }
    if (mu.perm[b] == -1) throw NotMonomial();
  }
  // Monomial form is a theorem; these asserts make the computation a check.
  std::vector<int> image = mu.perm;
  std::sort(image.begin(), image.end());
  for (int i = 0; i < n; ++i)
    if (image[i] != i) throw NotMonomial();
  for (int g = 0; g < n; ++g)
    if (a.lengths.lengths[mu.perm[g]] != a.lengths.lengths[g])
      throw FormulaMismatch("Nakayama permutation does not preserve length");
  if (!is_multiplicative(a, mu)) throw FormulaMismatch("Nakayama map is not multiplicative");
  return mu;
}

bool is_multiplicative(const GradedAlgebraTable& a, const MonomialAutomorphism& mu) {
  const int n = a.group.order;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const auto gh = a.mul(g, h);
      const auto img = a.mul(mu.perm[g], mu.perm[h]);
      if (gh.has_value() != img.has_value()) return false;
      if (!gh) continue;
      // mu(g).mu(h) = s(g)s(h) alpha(pg,ph) (pg ph); mu(g.h) = alpha(g,h) s(gh) (p(gh))
      if (img->second != mu.perm[gh->second]) return false;
      if (mu.scalars[g] * mu.scalars[h] * img->first != gh->first * mu.scalars[gh->second])
        return false;
    }
  return true;
}

bool check_nakayama_is_conjugation(const GradedAlgebraTable& a) {
  const MonomialAutomorphism mu = nakayama(a);
  const int m = *a.top;
  for (int g = 0; g < a.group.order; ++g)
    if (mu.perm[g] != conjugate_elem(a.group, m, g)) return false;
  return true;
}

bool is_symmetric_frobenius(const GradedAlgebraTable& a) {
  if (!is_frobenius(a)) throw NotFrobenius();
  const Matrix p = top_pairing(a);
  return p == matrix_transpose(p);
}

bool nakayama_order_divides_factorial(const GradedAlgebraTable& a) {
  if (!is_frobenius(a)) throw NotFrobenius();
  const int m = *a.top;
  const int n = a.group.order;
  // Conjugation permutation restricted to length-1 elements.
  Int order = 1;
  int count = 0;
  std::vector<bool> seen(n, false);
  for (int g = 0; g < n; ++g) {
    if (a.lengths.lengths[g] != 1) continue;
    ++count;
    if (seen[g]) continue;
    int len = 0, x = g;
    do {
      seen[x] = true;
      x = conjugate_elem(a.group, m, x);
      ++len;
    } while (x != g);
    order = boost::multiprecision::lcm(order, Int(len));
  }
  if (factorial(count) % order != 0) return false;
  // eta_m of that order forces m^order central.
  int mp = 0;
  for (Int i = 0; i < order; ++i) mp = a.group.mul(mp, m);
  return is_central(a.group, mp);
}

std::vector<Rat> beta_scalars(const GradedAlgebraTable& a) {
  const MonomialAutomorphism mu = nakayama(a);
  const int m = *a.top;
  const int n = a.group.order;
  std::vector<Rat> beta = mu.scalars;
  for (int g = 0; g < n; ++g) {
    const int ginv = a.group.inv(g);
    const int mginv = a.group.mul(m, ginv);
    const int conj = conjugate_elem(a.group, m, g);
    const Rat closed = a.structure.at({mginv, g}) / a.structure.at({conj, mginv});
    if (closed != beta[g])
      throw FormulaMismatch("beta closed formula disagrees with the Nakayama solve");
  }
  if (beta[m] != 1) throw FormulaMismatch("beta(m) != 1");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      if (a.group.mul(m, g) != a.group.mul(g, m)) continue;
      if (a.group.mul(m, h) != a.group.mul(h, m)) continue;
      const int gh = a.group.mul(g, h);
      if (a.lengths.lengths[gh] != a.lengths.lengths[g] + a.lengths.lengths[h]) continue;
      if (beta[gh] != beta[g] * beta[h])
        throw FormulaMismatch("beta is not multiplicative on a commuting additive pair");
    }
  return beta;
}

}  // namespace halg
