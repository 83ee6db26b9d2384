#pragma once

#include "halg/algebra.hpp"

namespace halg {

struct BadParameter : std::invalid_argument {
  explicit BadParameter(const std::string& w) : std::invalid_argument(w) {}
};
struct ComponentEmptyUpToN : std::domain_error {
  explicit ComponentEmptyUpToN(const std::string& w) : std::domain_error(w) {}
};
struct DecompositionFailed : std::domain_error {
  explicit DecompositionFailed(const std::string& w) : std::domain_error(w) {}
};
struct MismatchWithPoincare : std::domain_error {
  int coefficient;
  explicit MismatchWithPoincare(int coeff)
      : std::domain_error("covariant series differs from the Poincare polynomial at t^" +
                          std::to_string(coeff)),
        coefficient(coeff) {}
};

// Exponent tuple of a normal-form monomial, one entry per generator in
// normal order; the word it denotes is the ordered product of powers.
using Monomial = std::vector<int>;

enum class ReduceStrategy { Leftmost, Rightmost };

// G-graded connected algebra presented by a monomial normal-form basis.
// Normal order is the generator list order; each out-of-order adjacent
// letter pair rewrites to a scalar multiple of a single in-order pair, so
// every word reduces to scalar * monomial.
class CoactionModel {
 public:
  struct Generator {
    std::string label;
    int gdeg;  // G-degree (group element index); Z-degree is always 1
  };
  struct Rule {
    Rat scalar;
    int left, right;  // replacement letters, in normal order
  };

  CoactionModel(FiniteGroup group, std::vector<Generator> generators,
                std::map<std::pair<int, int>, Rule> rules,
                std::map<std::string, Rat> parameters);

  const FiniteGroup& group() const { return group_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::map<std::string, Rat>& parameters() const { return params_; }

  // Reduces an arbitrary word (sequence of letter indices) to its normal
  // form.  The scalar accumulates the rule scalars along the way.
  std::pair<Rat, Monomial> reduce(std::vector<int> word,
                                  ReduceStrategy strategy = ReduceStrategy::Leftmost) const;

  std::pair<Rat, Monomial> mul(const Monomial& a, const Monomial& b) const;

  std::vector<int> word_of(const Monomial& m) const;
  int gdegree(const Monomial& m) const;  // group element index
  static int zdegree(const Monomial& m);

  // G-degrees of the degree-1 letters, minus e.
  GeneratingSet degree_one_set() const;

 private:
  FiniteGroup group_;
  std::vector<Generator> generators_;
  std::map<std::pair<int, int>, Rule> rules_;
  std::map<std::string, Rat> params_;
};

// Example 3.7 model: generators x, z, y (normal order) with zx = q xz,
// yx = a zy, yz = xy over D8; G-degrees r, r rho^2, r rho.
CoactionModel d8_model(const Rat& q, const Rat& a);

// Coefficient of t^n counts normal monomials of Z-degree n and G-degree g.
IntSeries component_series(const CoactionModel& m, int g, int order);

struct LowestComponent {
  int degree;
  Monomial witness;  // lexicographically smallest exponent tuple
};

// Minimal Z-degree and witness of each A_g; asserts the lowest component is
// one-dimensional.
std::map<int, LowestComponent> lowest_generators(const CoactionModel& m, int order);

struct NormalityReport {
  bool normal = false;
  int failing_generator = -1;  // letter index when !normal
  int mass = -1;               // group element m
  Monomial mass_witness;
  // Per-letter conjugation data: f_m * v = scalar * v' * f_m.
  std::vector<std::pair<int, Rat>> generator_images;
  // beta(g) from f_m f_g = beta(g) f_{m g m^-1} f_m on the witnesses.
  std::vector<Rat> beta;
  bool phi_matches = false;  // every f_g satisfied the displayed form
};

// Verifies f_m A_1 = A_1 f_m inside degree deg(f_m)+1 by exact rank
// comparison, then the conjugation action on every f_g witness.
NormalityReport check_fm_normal(const CoactionModel& m, int order);

// Multiplies the f_{g_i} along a reduced word of m and checks the result is
// a nonzero scalar times the f_m witness; returns that scalar.
Rat product_decomposition_scalar(const CoactionModel& m, int order);

// series_div(full Hilbert series, component_series(e)); asserts equality
// with the Poincare polynomial of (G, degree-one set).
IntSeries covariant_series(const CoactionModel& m, int order);

// The span of the f_g witnesses with multiplication rewrite-then-project
// (monomials with any exponent >= 2 are killed), as a graded algebra table.
// Requires every generator's G-degree to square to e.
GradedAlgebraTable covariant_algebra(const CoactionModel& m, int order);

}  // namespace halg
