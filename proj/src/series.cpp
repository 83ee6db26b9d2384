#include "halg/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace halg {

IntSeries IntSeries::polynomial(std::vector<Rat> coeffs) {
  IntSeries s;
  s.coeffs_ = std::move(coeffs);
  s.kind_ = Kind::Polynomial;
  s.normalize();
  return s;
}

IntSeries IntSeries::truncated(std::vector<Rat> coeffs, int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  IntSeries s;
  s.coeffs_ = std::move(coeffs);
  s.coeffs_.resize(order + 1, Rat(0));
  s.kind_ = Kind::Truncated;
  s.trunc_ = order;
  return s;
}

void IntSeries::normalize() {
  if (kind_ != Kind::Polynomial) return;
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int IntSeries::degree() const {
  if (kind_ != Kind::Polynomial) throw TruncatedInput();
  return static_cast<int>(coeffs_.size()) - 1;
}

Rat IntSeries::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[i];
}

bool IntSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

Rat IntSeries::eval(const Rat& t) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

namespace {
// Result kind of a binary op: truncated wins, with the smaller order.
std::pair<IntSeries::Kind, int> combine(const IntSeries& a, const IntSeries& b) {
  if (a.is_polynomial() && b.is_polynomial()) return {IntSeries::Kind::Polynomial, -1};
  int n;
  if (!a.is_polynomial() && !b.is_polynomial())
    n = std::min(a.truncation_order(), b.truncation_order());
  else
    n = a.is_polynomial() ? b.truncation_order() : a.truncation_order();
  return {IntSeries::Kind::Truncated, n};
}
}  // namespace

IntSeries IntSeries::operator+(const IntSeries& o) const {
  auto [kind, n] = combine(*this, o);
  std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return kind == Kind::Polynomial ? polynomial(std::move(c)) : truncated(std::move(c), n);
}

IntSeries IntSeries::operator-(const IntSeries& o) const {
  auto [kind, n] = combine(*this, o);
  std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
  return kind == Kind::Polynomial ? polynomial(std::move(c)) : truncated(std::move(c), n);
}

IntSeries IntSeries::operator*(const IntSeries& o) const {
  auto [kind, n] = combine(*this, o);
  size_t len = coeffs_.size() + o.coeffs_.size();
  if (kind == Kind::Truncated) len = std::min(len, static_cast<size_t>(n + 1));
  std::vector<Rat> c(len, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size() && i + j < len; ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return kind == Kind::Polynomial ? polynomial(std::move(c)) : truncated(std::move(c), n);
}

bool IntSeries::operator==(const IntSeries& o) const {
  size_t n = std::max(coeffs_.size(), o.coeffs_.size());
  for (size_t i = 0; i < n; ++i)
    if (coeff(static_cast<int>(i)) != o.coeff(static_cast<int>(i))) return false;
  return true;
}

bool IntSeries::operator<(const IntSeries& o) const {
  size_t n = std::max(coeffs_.size(), o.coeffs_.size());
  for (size_t i = 0; i < n; ++i) {
    const Rat a = coeff(static_cast<int>(i)), b = o.coeff(static_cast<int>(i));
    if (a != b) return a < b;
  }
  return false;
}

std::string IntSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    const Rat a = abs(c);
    if (a != 1 || i == 0) os << rat_to_string(a);
    if (i == 1) os << "t";
    else if (i > 1) os << "t^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

bool is_palindrome(const IntSeries& p) {
  const int d = p.degree();
  for (int i = 0; i <= d; ++i)
    if (p.coeff(i) != p.coeff(d - i)) return false;
  return true;
}

std::optional<IntSeries> poly_divide_exact(const IntSeries& p, const IntSeries& d) {
  if (!p.is_polynomial() || !d.is_polynomial()) throw TruncatedInput();
  if (d.is_zero()) return std::nullopt;
  std::vector<Rat> rem = p.coeffs();
  const int dd = d.degree();
  const Rat lead = d.coeff(dd);
  if (p.degree() < dd) return p.is_zero() ? std::optional<IntSeries>(p) : std::nullopt;
  std::vector<Rat> quot(p.degree() - dd + 1, Rat(0));
  for (int i = p.degree(); i >= dd; --i) {
    if (rem[i] == 0) continue;
    const Rat q = rem[i] / lead;
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.coeff(j);
  }
  for (const Rat& r : rem)
    if (r != 0) return std::nullopt;
  return IntSeries::polynomial(std::move(quot));
}

IntSeries cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  // t^n - 1
  std::vector<Rat> c(n + 1, Rat(0));
  c[0] = -1;
  c[n] = 1;
  IntSeries num = IntSeries::polynomial(std::move(c));
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto q = poly_divide_exact(num, cyclotomic(d));
    num = *q;  // the recursion is exact by construction
  }
  return num;
}

namespace {
int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}
}  // namespace

std::optional<CyclotomicCertificate> cyclotomic_factor(const IntSeries& p) {
  if (!p.is_polynomial()) throw TruncatedInput();
  if (p.is_zero()) return std::nullopt;
  IntSeries quot = p;
  std::map<int, int> mult;
  bool progress = true;
  while (quot.degree() > 0 && progress) {
    progress = false;
    const int d = quot.degree();
    // phi(n) >= sqrt(n/2), so phi(n) <= d forces n <= 2d^2 + 1.
    for (int n = 1; n <= 2 * d * d + 1; ++n) {
      if (euler_phi(n) > d) continue;
      if (auto q = poly_divide_exact(quot, cyclotomic(n))) {
        ++mult[n];
        quot = *q;
        progress = true;
        break;
      }
    }
  }
  if (quot.degree() != 0) return std::nullopt;
  CyclotomicCertificate cert;
  cert.factors.assign(mult.begin(), mult.end());
  cert.scalar = quot.coeff(0);
  return cert;
}

IntSeries expand_certificate(const CyclotomicCertificate& cert) {
  IntSeries p = IntSeries::polynomial({cert.scalar});
  for (auto [n, k] : cert.factors)
    for (int i = 0; i < k; ++i) p = p * cyclotomic(n);
  return p;
}

IntSeries series_div(const IntSeries& numer, const IntSeries& denom, int order) {
  if (denom.coeff(0) == 0) throw ZeroConstantTerm();
  std::vector<Rat> q(order + 1, Rat(0));
  for (int k = 0; k <= order; ++k) {
    Rat acc = numer.coeff(k);
    for (int j = 0; j < k; ++j) acc -= q[j] * denom.coeff(k - j);
    q[k] = acc / denom.coeff(0);
  }
  return IntSeries::truncated(std::move(q), order);
}

}  // namespace halg
