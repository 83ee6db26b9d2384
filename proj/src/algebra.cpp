#include "halg/algebra.hpp"

namespace halg {

std::optional<std::pair<Rat, int>> GradedAlgebraTable::mul(int g, int h) const {
  auto it = structure.find({g, h});
  if (it == structure.end()) return std::nullopt;
  return std::make_pair(it->second, group.mul(g, h));
}

namespace {

GradedAlgebraTable make_table(const FiniteGroup& g, const GeneratingSet& re) {
  GradedAlgebraTable a;
  a.group = g;
  a.lengths = length_table(g, re);
  a.top = unique_max(a.lengths);
  return a;
}

bool length_additive(const LengthTable& lt, const FiniteGroup& g, int x, int y) {
  return lt.lengths[g.mul(x, y)] == lt.lengths[x] + lt.lengths[y];
}

}  // namespace

GradedAlgebraTable hasse_algebra(const FiniteGroup& g, const GeneratingSet& re) {
  GradedAlgebraTable a = make_table(g, re);
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      if (length_additive(a.lengths, g, x, y)) a.structure[{x, y}] = 1;
  return a;
}

GradedAlgebraTable skew_hasse_from_weights(const FiniteGroup& g, const GeneratingSet& re,
                                           const std::vector<Rat>& weights) {
  if (static_cast<int>(weights.size()) != g.order)
    throw std::invalid_argument("one weight per group element required");
  for (const Rat& w : weights)
    if (w == 0) throw ZeroWeight();
  if (weights[0] != 1) throw std::invalid_argument("weight of the identity must be 1");
  GradedAlgebraTable a = make_table(g, re);
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      if (length_additive(a.lengths, g, x, y))
        a.structure[{x, y}] = weights[x] * weights[y] / weights[g.mul(x, y)];
  return a;
}

GradedAlgebraTable algebra_from_entries(const FiniteGroup& g, const GeneratingSet& re,
                                        const std::map<std::pair<int, int>, Rat>& entries) {
  GradedAlgebraTable a = make_table(g, re);
  for (const auto& [key, val] : entries) {
    auto [x, y] = key;
    if (x < 0 || x >= g.order || y < 0 || y >= g.order)
      throw std::invalid_argument("structure constant index out of range");
    if (!length_additive(a.lengths, g, x, y))
      throw std::invalid_argument("structure constant on a non-length-additive pair");
    if (val == 0) throw std::invalid_argument("structure constants must be nonzero");
  }
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      if (length_additive(a.lengths, g, x, y)) {
        auto it = entries.find({x, y});
        if (it == entries.end())
          throw std::invalid_argument("missing structure constant on a length-additive pair");
        a.structure[{x, y}] = it->second;
      }
  return a;
}

std::optional<std::tuple<int, int, int>> check_associativity(const GradedAlgebraTable& a) {
  const int n = a.group.order;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        // (g.h).k
        Rat left(0);
        int lbasis = -1;
        if (auto gh = a.mul(g, h)) {
          if (auto ghk = a.mul(gh->second, k)) {
            left = gh->first * ghk->first;
            lbasis = ghk->second;
          }
        }
        Rat right(0);
        int rbasis = -1;
        if (auto hk = a.mul(h, k)) {
          if (auto ghk = a.mul(g, hk->second)) {
            right = hk->first * ghk->first;
            rbasis = ghk->second;
          }
        }
        if (lbasis != rbasis || left != right) return std::make_tuple(g, h, k);
      }
  return std::nullopt;
}

std::optional<std::tuple<int, int, int>> cocycle_consistency(const GradedAlgebraTable& a) {
  const int n = a.group.order;
  const auto& l = a.lengths.lengths;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        const int gh = a.group.mul(g, h);
        const int hk = a.group.mul(h, k);
        const int ghk = a.group.mul(gh, k);
        if (l[ghk] != l[g] + l[h] + l[k]) continue;
        if (l[gh] != l[g] + l[h] || l[hk] != l[h] + l[k])
          return std::make_tuple(g, h, k);  // subadditivity forces both to add
        const Rat lhs = a.structure.at({g, h}) * a.structure.at({gh, k});
        const Rat rhs = a.structure.at({h, k}) * a.structure.at({g, hk});
        if (lhs != rhs) return std::make_tuple(g, h, k);
      }
  return std::nullopt;
}

IntSeries hilbert_series(const GradedAlgebraTable& a) { return poincare_polynomial(a.lengths); }

}  // namespace halg
