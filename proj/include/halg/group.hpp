#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace halg {

inline constexpr int kDefaultOrderCap = 5040;

struct NoIdentity : std::domain_error {
  NoIdentity() : std::domain_error("Cayley table has no two-sided identity") {}
};
struct NotLatinSquare : std::domain_error {
  int row, col;
  NotLatinSquare(int r, int c)
      : std::domain_error("Cayley table is not a Latin square at row " + std::to_string(r) +
                          ", column " + std::to_string(c)),
        row(r), col(c) {}
};
struct NotAssociative : std::domain_error {
  int a, b, c;
  NotAssociative(int a_, int b_, int c_)
      : std::domain_error("Cayley table fails associativity on triple (" + std::to_string(a_) +
                          "," + std::to_string(b_) + "," + std::to_string(c_) + ")"),
        a(a_), b(b_), c(c_) {}
};
struct OrderCapExceeded : std::domain_error {
  explicit OrderCapExceeded(const std::string& what) : std::domain_error(what) {}
};

// Finite group given by a validated Cayley table.  Index 0 is always the
// identity; elements are opaque indices and labels are presentation-only.
// Immutable after construction.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> cayley;  // cayley[g][h] = index of g*h
  std::vector<int> inverses;
  std::vector<std::string> labels;

  int mul(int a, int b) const { return cayley[a][b]; }
  int inv(int a) const { return inverses[a]; }
  const std::string& label(int g) const { return labels[g]; }
};

// Validates the table (identity, Latin square, associativity, inverses) and
// relabels so that the identity sits at index 0.
FiniteGroup group_from_cayley(std::vector<std::vector<int>> table,
                              std::vector<std::string> labels = {});

FiniteGroup group_trivial();
FiniteGroup group_cyclic(int n);
// Order 2n, generated by r, rho with r^2 = rho^n = e and rho*r = r*rho^-1.
FiniteGroup group_dihedral(int n);
// {±1, ±i, ±j, ±k} with ij = k = -ji, i^2 = j^2 = k^2 = -1.
FiniteGroup group_quaternion();
// Elements indexed by lexicographic rank of one-line notation; product gh
// applies h first.  Requires n! <= order_cap.
FiniteGroup group_symmetric(int n, int order_cap = kDefaultOrderCap);
FiniteGroup group_product(const FiniteGroup& g1, const FiniteGroup& g2);

// Closure of a set of permutations of {1..d} (one-line images, 1-based).
FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& generators,
                                    int order_cap = kDefaultOrderCap);

std::vector<int> center(const FiniteGroup& g);
// h g h^-1
int conjugate_elem(const FiniteGroup& G, int h, int g);
int element_order(const FiniteGroup& g, int x);
bool is_central(const FiniteGroup& g, int x);

}  // namespace halg
