#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "halg/rat.hpp"

namespace halg {

// Exact coefficient vector, indexed by degree.  A Polynomial keeps its
// leading coefficient nonzero (the zero polynomial is an empty/zero vector);
// a Truncated series remembers its truncation order and all arithmetic
// stays below it.
class IntSeries {
 public:
  enum class Kind { Polynomial, Truncated };

  IntSeries() : kind_(Kind::Polynomial) {}
  static IntSeries polynomial(std::vector<Rat> coeffs);
  static IntSeries truncated(std::vector<Rat> coeffs, int order);

  Kind kind() const { return kind_; }
  bool is_polynomial() const { return kind_ == Kind::Polynomial; }
  int truncation_order() const { return trunc_; }

  // Degree of a polynomial; -1 for the zero polynomial.
  int degree() const;
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  Rat eval(const Rat& t) const;

  IntSeries operator+(const IntSeries& o) const;
  IntSeries operator-(const IntSeries& o) const;
  IntSeries operator*(const IntSeries& o) const;
  bool operator==(const IntSeries& o) const;
  bool operator<(const IntSeries& o) const;  // lexicographic on coefficients

  std::string str() const;  // "1+3t+3t^2+t^3"

 private:
  std::vector<Rat> coeffs_;
  Kind kind_;
  int trunc_ = -1;
  void normalize();
};

struct TruncatedInput : std::domain_error {
  TruncatedInput() : std::domain_error("operation requires a polynomial, got a truncated series") {}
};
struct ZeroConstantTerm : std::domain_error {
  ZeroConstantTerm() : std::domain_error("series division by a series with zero constant term") {}
};

struct CyclotomicCertificate {
  // (n, multiplicity) pairs, sorted by n; the product of Phi_n^multiplicity
  // times scalar reproduces the certified polynomial exactly.
  std::vector<std::pair<int, int>> factors;
  Rat scalar;
};

bool is_palindrome(const IntSeries& p);

// n-th cyclotomic polynomial, from Phi_n(t) = (t^n - 1) / prod_{d|n, d<n} Phi_d(t).
IntSeries cyclotomic(int n);

// Exact division: returns quotient if denom divides p, otherwise nullopt.
std::optional<IntSeries> poly_divide_exact(const IntSeries& p, const IntSeries& d);

std::optional<CyclotomicCertificate> cyclotomic_factor(const IntSeries& p);

IntSeries expand_certificate(const CyclotomicCertificate& cert);

// Truncated quotient numer/denom to order N; requires denom(0) != 0.
IntSeries series_div(const IntSeries& numer, const IntSeries& denom, int order);

}  // namespace halg
