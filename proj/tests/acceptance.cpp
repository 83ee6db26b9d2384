// Acceptance suite: one pass/fail line per criterion.  argv[1] is the path
// to the halg-cli binary (used by the determinism criterion).
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "halg/coaction.hpp"
#include "halg/frobenius.hpp"
#include "halg/group_io.hpp"
#include "halg/linalg.hpp"
#include "halg/screening.hpp"

using namespace halg;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass) {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << name << "\n";
  if (!pass) ++failures;
}

// Compares the algebra's products over a labelled basis against an expected
// table given as label strings, "0" meaning the product vanishes.
bool table_matches(const GradedAlgebraTable& a, const std::vector<int>& basis,
                   const std::vector<std::string>& names,
                   const std::vector<std::vector<std::string>>& expected) {
  std::map<std::string, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[names[i]] = basis[i];
  for (size_t r = 0; r < basis.size(); ++r)
    for (size_t c = 0; c < basis.size(); ++c) {
      const auto prod = a.mul(basis[r], basis[c]);
      if (expected[r][c] == "0") {
        if (prod) return false;
      } else {
        if (!prod || prod->first != 1 || prod->second != index.at(expected[r][c])) return false;
      }
    }
  return true;
}

bool criterion1() {
  FiniteGroup q8 = group_quaternion();
  GradedAlgebraTable a = hasse_algebra(q8, GeneratingSet::of({2, 4, 5}));
  // x1=i x2=j x3=-j y1=k y2=-k y3=-1 z=-i
  const std::vector<int> basis = {2, 4, 5, 6, 7, 1, 3};
  const std::vector<std::string> names = {"x1", "x2", "x3", "y1", "y2", "y3", "z"};
  const std::vector<std::vector<std::string>> expected = {
      {"y3", "y1", "y2", "0", "0", "z", "0"},
      {"y2", "y3", "0", "0", "z", "0", "0"},
      {"y1", "0", "y3", "z", "0", "0", "0"},
      {"0", "z", "0", "0", "0", "0", "0"},
      {"0", "0", "z", "0", "0", "0", "0"},
      {"z", "0", "0", "0", "0", "0", "0"},
      {"0", "0", "0", "0", "0", "0", "0"}};
  bool ok = table_matches(a, basis, names, expected);
  ok = ok && hilbert_series(a).str() == "1+3t+3t^2+t^3";
  ok = ok && is_frobenius(a) && !is_symmetric_frobenius(a);
  MonomialAutomorphism mu = nakayama(a);
  ok = ok && mu.perm[2] == 2 && mu.perm[4] == 5 && mu.perm[5] == 4;
  bool identity = true, involution = true;
  for (int g = 0; g < 8; ++g) {
    identity = identity && mu.perm[g] == g;
    involution = involution && mu.perm[mu.perm[g]] == g;
  }
  return ok && involution && !identity;  // order exactly 2
}

bool criterion2() {
  FiniteGroup s3 = group_symmetric(3);
  int x1 = -1, x2 = -1, y1 = -1, y2 = -1, z = -1;
  for (int g = 0; g < 6; ++g) {
    if (s3.label(g) == "(12)") x1 = g;
    if (s3.label(g) == "(23)") x2 = g;
    if (s3.label(g) == "(123)") y1 = g;
    if (s3.label(g) == "(132)") y2 = g;
    if (s3.label(g) == "(13)") z = g;
  }
  GradedAlgebraTable a = hasse_algebra(s3, GeneratingSet::of({x1, x2}));
  const std::vector<int> basis = {x1, x2, y1, y2, z};
  const std::vector<std::string> names = {"x1", "x2", "y1", "y2", "z"};
  const std::vector<std::vector<std::string>> expected = {{"0", "y1", "0", "z", "0"},
                                                          {"y2", "0", "z", "0", "0"},
                                                          {"z", "0", "0", "0", "0"},
                                                          {"0", "z", "0", "0", "0"},
                                                          {"0", "0", "0", "0", "0"}};
  bool ok = table_matches(a, basis, names, expected);
  ok = ok && hilbert_series(a).str() == "1+2t+2t^2+t^3";
  ok = ok && is_frobenius(a) && !is_symmetric_frobenius(a);
  MonomialAutomorphism mu = nakayama(a);
  return ok && mu.perm[x1] == x2 && mu.perm[x2] == x1;
}

bool criterion3() {
  bool ok = true;
  for (int n = 3; n <= 8; ++n) {
    FiniteGroup g = group_dihedral(n);
    LengthTable lt = length_table(g, GeneratingSet::of({n, n + 1}));
    IntSeries p = poincare_polynomial(lt);
    const auto top = unique_max(lt);
    ok = ok && top.has_value();
    if (n % 2 == 0) ok = ok && top == n / 2;  // rho^{n/2}
    ok = ok && p.eval(Rat(1)) == 2 * n && cyclotomic_factor(p).has_value();
    GradedAlgebraTable a = hasse_algebra(g, GeneratingSet::of({n, n + 1}));
    ok = ok && is_frobenius(a) && is_symmetric_frobenius(a) == (n % 2 == 0);
  }
  return ok;
}

bool criterion4() {
  const std::vector<std::string> corpus = {
      "trivial", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6",
      "product:cyclic:2,cyclic:2", "dihedral:3", "cyclic:8", "quaternion", "dihedral:4",
      "product:cyclic:2,cyclic:4", "product:cyclic:2,product:cyclic:2,cyclic:2", "dihedral:5",
      "dihedral:6", "dihedral:8"};
  std::mt19937 rng(20240824);
  long long instances = 0, frobenius_instances = 0;
  for (const std::string& name : corpus) {
    FiniteGroup g = group_builtin(name);
    for (const GeneratingSet& re : enumerate_generating_sets(g, 4)) {
      ++instances;
      GradedAlgebraTable a = hasse_algebra(g, re);
      const IntSeries p = hilbert_series(a);
      const bool frob = is_frobenius(a);
      if (is_palindrome(p) && !frob) return false;  // Theorem 2.9(1)
      if (!frob) continue;
      ++frobenius_instances;
      const int m = *a.top;
      const Matrix pm = top_pairing(a);
      for (int r = 0; r < g.order; ++r) {
        int row_nz = 0, col_nz = 0;
        for (int c = 0; c < g.order; ++c) {
          if (pm[r][c] != 0) ++row_nz;
          if (pm[c][r] != 0) ++col_nz;
        }
        if (row_nz != 1 || col_nz != 1) return false;
      }
      MonomialAutomorphism mu = nakayama(a);  // throws if not monomial/multiplicative
      for (int x = 0; x < g.order; ++x) {
        if (a.lengths.lengths[mu.perm[x]] != a.lengths.lengths[x]) return false;
        if (mu.perm[x] != conjugate_elem(g, m, x)) return false;
      }
      if (is_symmetric_frobenius(a) != is_central(g, m)) return false;
      if (!nakayama_order_divides_factorial(a)) return false;
      for (int t = 0; t < 20; ++t) {
        std::vector<Rat> w = {Rat(1)};
        for (int x = 1; x < g.order; ++x) {
          int num = static_cast<int>(rng() % 9) - 4;
          if (num == 0) num = 3;
          w.emplace_back(num, 1 + static_cast<int>(rng() % 4));
        }
        GradedAlgebraTable tw = skew_hasse_from_weights(g, re, w);
        if (!is_frobenius(tw)) return false;
        // beta_scalars cross-checks the solve against the closed formula
        // and throws FormulaMismatch on any violation.
        std::vector<Rat> beta = beta_scalars(tw);
        if (beta[m] != 1) return false;
      }
    }
  }
  return instances > 1000 && frobenius_instances > 50;
}

bool criterion5() {
  ScreenReport r = dual_reflection_screen(group_quaternion());
  return r.subsets_scanned == 128 && r.candidates.size() == 1 &&
         r.candidates[0].poincare.str() == "1+3t+3t^2+t^3" &&
         r.candidates[0].certificate.factors == std::vector<std::pair<int, int>>{{2, 3}} &&
         r.candidates[0].certificate.scalar == 1;
}

bool verify_model(const Rat& q) {
  CoactionModel m = d8_model(q, Rat(2));
  const int order = 8;
  LengthTable lt = length_table(m.group(), m.degree_one_set());

  IntSeries inv = component_series(m, 0, order);
  for (int n = 0; n <= order; ++n) {
    const Rat expect = n % 2 ? Rat(0) : Rat((n / 2 + 1) * (n / 2 + 2) / 2);
    if (inv.coeff(n) != expect) return false;
  }
  auto low = lowest_generators(m, order);  // asserts 1-dim lowest components
  if (low.size() != 8) return false;
  for (const auto& [g, lc] : low)
    if (lc.degree != lt.lengths[g]) return false;

  IntSeries p = covariant_series(m, order);  // asserts equality with Poincare
  Rat at_one(0);
  for (int n = 0; n <= order; ++n) at_one += p.coeff(n);
  if (at_one != 8 || p.coeff(3) != 1 || p.coeff(4) != 0) return false;
  if (lt.lengths[7] != 3) return false;  // deg p = 3 = l(m)

  NormalityReport nr = check_fm_normal(m, order);
  if (!nr.normal || nr.mass != 7 || !nr.phi_matches || nr.beta[7] != 1) return false;
  if (product_decomposition_scalar(m, order) == 0) return false;

  GradedAlgebraTable cov = covariant_algebra(m, order);
  return !check_associativity(cov).has_value() && is_frobenius(cov);
}

bool criterion6() { return verify_model(Rat(-1)) && verify_model(Rat(1)); }

// Definition 2.3(1) filtration oracle: rank of the span of all products of
// i factors from {e} u Re inside the group algebra.
bool filtration_matches(const FiniteGroup& g, const GeneratingSet& re) {
  LengthTable lt = length_table(g, re);
  std::vector<int> alphabet = {0};
  for (int v : re.members) alphabet.push_back(v);
  std::vector<int> words = {0};
  int prev_rank = 0;
  for (int i = 0; i <= lt.max_length(); ++i) {
    if (i > 0) {
      std::vector<int> next;
      for (int w : words)
        for (int v : alphabet) next.push_back(g.mul(w, v));
      words = std::move(next);
    }
    Matrix rows;
    for (int w : words) {
      std::vector<Rat> row(g.order, Rat(0));
      row[w] = 1;
      rows.push_back(std::move(row));
    }
    int count = 0;
    for (int l : lt.lengths)
      if (l == i) ++count;
    if (matrix_rank(rows) - prev_rank != count) return false;
    prev_rank += count;
  }
  return prev_rank == g.order;
}

bool criterion7() {
  FiniteGroup s3 = group_symmetric(3);
  int x1 = -1, x2 = -1;
  for (int g = 0; g < 6; ++g) {
    if (s3.label(g) == "(12)") x1 = g;
    if (s3.label(g) == "(23)") x2 = g;
  }
  return filtration_matches(s3, GeneratingSet::of({x1, x2})) &&
         filtration_matches(group_quaternion(), GeneratingSet::of({2, 4, 5})) &&
         filtration_matches(group_dihedral(4), GeneratingSet::of({4, 5})) &&
         filtration_matches(group_dihedral(4), GeneratingSet::of({4, 5, 6}));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool criterion8(const std::string& cli) {
  const std::string base = "'" + cli + "' corpus --format structured --seed 987654321";
  if (std::system((base + " > acceptance_run1.json").c_str()) != 0) return false;
  if (std::system((base + " > acceptance_run2.json").c_str()) != 0) return false;
  const std::string r1 = slurp("acceptance_run1.json");
  const std::string r2 = slurp("acceptance_run2.json");
  return !r1.empty() && r1 == r2;
}

}  // namespace

int main(int argc, char** argv) {
  report(1, "Q8 worked example: table, Poincare, Frobenius, Nakayama", criterion1());
  report(2, "S3 worked example: table, Poincare, Frobenius, Nakayama", criterion2());
  report(3, "dihedral Coxeter family n=3..8: top element, symmetry parity", criterion3());
  report(4, "property sweep over the corpus with coboundary twists", criterion4());
  report(5, "Q8 screen: unique surviving polynomial (1+t)^3", criterion5());
  report(6, "D8 coaction model verification, q = -1 and q = +1", criterion6());
  report(7, "filtration vs length-additive table rank equivalence", criterion7());
  if (argc > 1)
    report(8, "byte-identical structured corpus reports for a fixed seed", criterion8(argv[1]));
  else
    report(8, "byte-identical structured corpus reports for a fixed seed", false);
  return failures == 0 ? 0 : 1;
}
