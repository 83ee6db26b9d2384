#include "halg/coaction.hpp"

#include <algorithm>
#include <functional>

#include "halg/linalg.hpp"

namespace halg {

CoactionModel::CoactionModel(FiniteGroup group, std::vector<Generator> generators,
                             std::map<std::pair<int, int>, Rule> rules,
                             std::map<std::string, Rat> parameters)
    : group_(std::move(group)),
      generators_(std::move(generators)),
      rules_(std::move(rules)),
      params_(std::move(parameters)) {
  const int k = static_cast<int>(generators_.size());
  for (const auto& [key, rule] : rules_) {
    auto [a, b] = key;
    if (a < 0 || a >= k || b < 0 || b >= k || rule.left < 0 || rule.left >= k ||
        rule.right < 0 || rule.right >= k)
      throw std::invalid_argument("rewrite rule letter out of range");
    if (a <= b) throw std::invalid_argument("rewrite rule must match an out-of-order pair");
    if (rule.left > rule.right) throw std::invalid_argument("rewrite rule must produce an in-order pair");
    if (rule.scalar == 0) throw std::invalid_argument("rewrite scalar must be nonzero");
    // G-homogeneity of the rule.
    const int lhs = group_.mul(generators_[a].gdeg, generators_[b].gdeg);
    const int rhs = group_.mul(generators_[rule.left].gdeg, generators_[rule.right].gdeg);
    if (lhs != rhs) throw std::invalid_argument("rewrite rule is not G-homogeneous");
  }
}

std::pair<Rat, Monomial> CoactionModel::reduce(std::vector<int> word,
                                               ReduceStrategy strategy) const {
  Rat scalar(1);
  // Each rule strictly decreases the word read as a base-k numeral, so this
  // terminates.
  for (;;) {
    int pos = -1;
    const int last = static_cast<int>(word.size()) - 1;
    if (strategy == ReduceStrategy::Leftmost) {
      for (int i = 0; i < last; ++i)
        if (rules_.count({word[i], word[i + 1]})) { pos = i; break; }
    } else {
      for (int i = last - 1; i >= 0; --i)
        if (rules_.count({word[i], word[i + 1]})) { pos = i; break; }
    }
    if (pos < 0) break;
    const Rule& r = rules_.at({word[pos], word[pos + 1]});
    scalar *= r.scalar;
    word[pos] = r.left;
    word[pos + 1] = r.right;
  }
  Monomial m(generators_.size(), 0);
  for (int letter : word) ++m[letter];
  return {scalar, m};
}

std::pair<Rat, Monomial> CoactionModel::mul(const Monomial& a, const Monomial& b) const {
  std::vector<int> word = word_of(a);
  const std::vector<int> wb = word_of(b);
  word.insert(word.end(), wb.begin(), wb.end());
  return reduce(std::move(word));
}

std::vector<int> CoactionModel::word_of(const Monomial& m) const {
  std::vector<int> word;
  for (size_t letter = 0; letter < m.size(); ++letter)
    for (int i = 0; i < m[letter]; ++i) word.push_back(static_cast<int>(letter));
  return word;
}

int CoactionModel::gdegree(const Monomial& m) const {
  int acc = 0;
  for (size_t letter = 0; letter < m.size(); ++letter)
    for (int i = 0; i < m[letter]; ++i) acc = group_.mul(acc, generators_[letter].gdeg);
  return acc;
}

int CoactionModel::zdegree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

GeneratingSet CoactionModel::degree_one_set() const {
  std::vector<int> members;
  for (const auto& g : generators_)
    if (g.gdeg != 0) members.push_back(g.gdeg);
  return GeneratingSet::of(std::move(members));
}

CoactionModel d8_model(const Rat& q, const Rat& a) {
  if (q * q != 1) throw BadParameter("q must satisfy q^2 = 1");
  if (a == 0) throw BadParameter("a must be nonzero");
  FiniteGroup d8 = group_dihedral(4);
  // Letters in normal order: 0 = x, 1 = z, 2 = y; basis x^i z^j y^k.
  const int r = 4, rrho = 5, rrho2 = 6;  // r^a rho^b at index a*4+b
  std::vector<CoactionModel::Generator> gens = {{"x", r}, {"z", rrho2}, {"y", rrho}};
  std::map<std::pair<int, int>, CoactionModel::Rule> rules;
  rules[{1, 0}] = {q, 0, 1};         // zx = q xz
  rules[{2, 0}] = {a, 1, 2};         // yx = a zy
  rules[{2, 1}] = {Rat(1), 0, 2};    // yz = xy
  return CoactionModel(std::move(d8), std::move(gens), std::move(rules),
                       {{"q", q}, {"a", a}});
}

namespace {

// All exponent tuples of total degree <= order, in lexicographic order.
std::vector<Monomial> monomials_up_to(int letters, int order) {
  std::vector<Monomial> out;
  Monomial current(letters, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == letters) {
      out.push_back(current);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      current[pos] = e;
      rec(pos + 1, left - e);
    }
    current[pos] = 0;
  };
  rec(0, order);
  return out;
}

}  // namespace

IntSeries component_series(const CoactionModel& m, int g, int order) {
  std::vector<Rat> coeffs(order + 1, Rat(0));
  for (const auto& mono : monomials_up_to(static_cast<int>(m.generators().size()), order))
    if (m.gdegree(mono) == g) coeffs[CoactionModel::zdegree(mono)] += 1;
  return IntSeries::truncated(std::move(coeffs), order);
}

std::map<int, LowestComponent> lowest_generators(const CoactionModel& m, int order) {
  const int n = m.group().order;
  std::map<int, LowestComponent> out;
  std::map<int, int> lowest_dim;
  for (const auto& mono : monomials_up_to(static_cast<int>(m.generators().size()), order)) {
    const int g = m.gdegree(mono);
    const int d = CoactionModel::zdegree(mono);
    auto it = out.find(g);
    if (it == out.end() || d < it->second.degree) {
      out[g] = {d, mono};
      lowest_dim[g] = 1;
    } else if (d == it->second.degree) {
      ++lowest_dim[g];
      if (mono < it->second.witness) it->second.witness = mono;
    }
  }
  for (int g = 0; g < n; ++g) {
    if (!out.count(g))
      throw ComponentEmptyUpToN("component of " + m.group().label(g) +
                                " is empty up to degree " + std::to_string(order));
    if (lowest_dim[g] != 1)
      throw ComponentEmptyUpToN("lowest component of " + m.group().label(g) +
                                " is not one-dimensional");
  }
  return out;
}

namespace {

// Rank of the span of (scalar, monomial) pairs, monomials as unit vectors.
int span_rank(const std::vector<std::pair<Rat, Monomial>>& vecs) {
  std::map<Monomial, int> cols;
  for (const auto& [s, mono] : vecs)
    cols.emplace(mono, static_cast<int>(cols.size()));
  Matrix m;
  for (const auto& [s, mono] : vecs) {
    std::vector<Rat> row(cols.size(), Rat(0));
    row[cols.at(mono)] = s;
    m.push_back(std::move(row));
  }
  for (auto& row : m) row.resize(cols.size(), Rat(0));
  return matrix_rank(m);
}

}  // namespace

NormalityReport check_fm_normal(const CoactionModel& m, int order) {
  const FiniteGroup& g = m.group();
  const GeneratingSet re = m.degree_one_set();
  const LengthTable lt = length_table(g, re);
  const auto mass = unique_max(lt);
  if (!mass) throw std::domain_error("no unique maximal-length element");
  const auto lowest = lowest_generators(m, order);

  NormalityReport rep;
  rep.mass = *mass;
  rep.mass_witness = lowest.at(*mass).witness;
  const int letters = static_cast<int>(m.generators().size());

  // Span equality of f_m A_1 and A_1 f_m in degree deg(f_m)+1.
  std::vector<std::pair<Rat, Monomial>> left, right, both;
  for (int v = 0; v < letters; ++v) {
    Monomial unit(letters, 0);
    unit[v] = 1;
    left.push_back(m.mul(rep.mass_witness, unit));
    right.push_back(m.mul(unit, rep.mass_witness));
  }
  both = left;
  both.insert(both.end(), right.begin(), right.end());
  const int rl = span_rank(left), rr = span_rank(right), rb = span_rank(both);
  if (!(rl == rr && rl == rb)) {
    rep.normal = false;
    return rep;
  }

  // f_m v = scalar * v' f_m with a single generator v'.
  for (int v = 0; v < letters; ++v) {
    Monomial unit(letters, 0);
    unit[v] = 1;
    const auto lhs = m.mul(rep.mass_witness, unit);
    int image = -1;
    Rat scalar(0);
    for (int w = 0; w < letters; ++w) {
      Monomial wunit(letters, 0);
      wunit[w] = 1;
      const auto rhs = m.mul(wunit, rep.mass_witness);
      if (rhs.second == lhs.second) {
        image = w;
        scalar = lhs.first / rhs.first;
        break;
      }
    }
    if (image < 0) {
      rep.normal = false;
      rep.failing_generator = v;
      return rep;
    }
    rep.generator_images.emplace_back(image, scalar);
  }
  rep.normal = true;

  // phi_m on the witnesses: f_m f_g = beta(g) f_{m g m^-1} f_m.
  rep.beta.assign(g.order, Rat(0));
  rep.phi_matches = true;
  for (int x = 0; x < g.order; ++x) {
    const int conj = conjugate_elem(g, *mass, x);
    const auto lhs = m.mul(rep.mass_witness, lowest.at(x).witness);
    const auto rhs = m.mul(lowest.at(conj).witness, rep.mass_witness);
    if (lhs.second != rhs.second || rhs.first == 0) {
      rep.phi_matches = false;
      continue;
    }
    rep.beta[x] = lhs.first / rhs.first;
  }
  if (rep.phi_matches && rep.beta[*mass] != 1) rep.phi_matches = false;
  return rep;
}

Rat product_decomposition_scalar(const CoactionModel& m, int order) {
  const FiniteGroup& g = m.group();
  const GeneratingSet re = m.degree_one_set();
  const LengthTable lt = length_table(g, re);
  const auto mass = unique_max(lt);
  if (!mass) throw DecompositionFailed("no unique maximal-length element");
  const auto lowest = lowest_generators(m, order);

  // Map each degree-1 G-degree to its letter.
  std::map<int, int> letter_of;
  for (size_t v = 0; v < m.generators().size(); ++v)
    letter_of[m.generators()[v].gdeg] = static_cast<int>(v);

  std::vector<int> word;
  for (int gen : witness_word(lt, *mass)) {
    auto it = letter_of.find(gen);
    if (it == letter_of.end())
      throw DecompositionFailed("reduced word uses a generator with no degree-1 witness");
    word.push_back(it->second);
  }
  const auto [scalar, mono] = m.reduce(word);
  if (mono != lowest.at(*mass).witness)
    throw DecompositionFailed("product of f_{g_i} is not supported on the f_m witness");
  if (scalar == 0) throw DecompositionFailed("product of f_{g_i} vanished");
  return scalar;
}

IntSeries covariant_series(const CoactionModel& m, int order) {
  const int letters = static_cast<int>(m.generators().size());
  std::vector<Rat> full(order + 1, Rat(0));
  for (const auto& mono : monomials_up_to(letters, order)) full[CoactionModel::zdegree(mono)] += 1;
  const IntSeries hilbert = IntSeries::truncated(std::move(full), order);
  const IntSeries quotient = series_div(hilbert, component_series(m, 0, order), order);

  const IntSeries poincare = poincare_polynomial(length_table(m.group(), m.degree_one_set()));
  for (int i = 0; i <= order; ++i)
    if (quotient.coeff(i) != poincare.coeff(i)) throw MismatchWithPoincare(i);
  return quotient;
}

GradedAlgebraTable covariant_algebra(const CoactionModel& m, int order) {
  const FiniteGroup& g = m.group();
  for (const auto& gen : m.generators())
    if (g.mul(gen.gdeg, gen.gdeg) != 0)
      throw std::invalid_argument("covariant projection needs square-invariant generators");
  const auto lowest = lowest_generators(m, order);
  const GeneratingSet re = m.degree_one_set();

  std::map<std::pair<int, int>, Rat> entries;
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y) {
      const auto [scalar, mono] = m.mul(lowest.at(x).witness, lowest.at(y).witness);
      if (std::any_of(mono.begin(), mono.end(), [](int e) { return e >= 2; })) continue;
      entries[{x, y}] = scalar;
    }
  // algebra_from_entries checks the zero pattern matches length-additivity.
  return algebra_from_entries(g, re, entries);
}

}  // namespace halg
