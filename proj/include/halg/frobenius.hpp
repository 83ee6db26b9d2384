#pragma once

#include "halg/algebra.hpp"
#include "halg/linalg.hpp"

namespace halg {

struct NoUniqueTop : std::domain_error {
  NoUniqueTop() : std::domain_error("no unique maximal-length element") {}
};
struct NotFrobenius : std::domain_error {
  NotFrobenius() : std::domain_error("algebra is not Frobenius") {}
};
struct NotMonomial : std::logic_error {
  NotMonomial() : std::logic_error("Nakayama automorphism is not monomial on the group basis") {}
};
struct FormulaMismatch : std::logic_error {
  explicit FormulaMismatch(const std::string& w) : std::logic_error(w) {}
};

// Basis map g -> scalars[g] * perm[g]; degree-preserving and multiplicative.
struct MonomialAutomorphism {
  std::vector<int> perm;
  std::vector<Rat> scalars;
};

// P[g][h] = coefficient of the top element m in g.h.
Matrix top_pairing(const GradedAlgebraTable& a);

bool is_frobenius(const GradedAlgebraTable& a);

// Graded Nakayama automorphism from the exact solve P = P^T N, asserted
// monomial afterwards; <a,b> = <mu(b), a>.
MonomialAutomorphism nakayama(const GradedAlgebraTable& a);

// Permutation part equals g -> m g m^-1 on every basis element.
bool check_nakayama_is_conjugation(const GradedAlgebraTable& a);

bool is_symmetric_frobenius(const GradedAlgebraTable& a);

// Order of the conjugation permutation restricted to length-1 elements
// divides a! (a = #length-1 elements); also checks m^order is central.
bool nakayama_order_divides_factorial(const GradedAlgebraTable& a);

// Scalar part of the Nakayama automorphism, mu(g) = beta(g) m g m^-1,
// cross-checked against beta(g) = alpha(m g^-1, g) alpha(m g m^-1, m g^-1)^-1
// and the identities beta(m) = 1, beta(gh) = beta(g) beta(h) for commuting
// length-additive pairs.
std::vector<Rat> beta_scalars(const GradedAlgebraTable& a);

// True when mu(g).mu(h) = mu(g.h) on all pairs including the zero pattern.
bool is_multiplicative(const GradedAlgebraTable& a, const MonomialAutomorphism& mu);

}  // namespace halg
