#include "halg/screening.hpp"

#include <algorithm>

namespace halg {

long long ScreenReport::candidate_sets() const {
  long long n = 0;
  for (const auto& b : candidates) n += static_cast<long long>(b.sets.size());
  return n;
}

namespace {

// Visits subsets of {1..n-1} in lexicographic order on sorted tuples,
// including the empty subset.
template <typename F>
void visit_subsets(int n, std::optional<int> max_size, F&& f) {
  std::vector<int> current;
  auto rec = [&](auto&& self, int next) -> void {
    f(current);
    if (max_size && static_cast<int>(current.size()) >= *max_size) return;
    for (int v = next; v < n; ++v) {
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
}

bool generates(const FiniteGroup& g, const std::vector<int>& members) {
  if (members.empty()) return g.order == 1;
  std::vector<bool> seen(g.order, false);
  std::vector<int> queue = {0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    const int x = queue.back();
    queue.pop_back();
    for (int v : members) {
      const int to = g.mul(x, v);
      if (seen[to]) continue;
      seen[to] = true;
      ++reached;
      queue.push_back(to);
    }
  }
  return reached == g.order;
}

}  // namespace

std::vector<GeneratingSet> enumerate_generating_sets(const FiniteGroup& g,
                                                     std::optional<int> max_size) {
  if (g.order > kScreenOrderCap)
    throw OrderCapExceeded("group order " + std::to_string(g.order) +
                           " exceeds enumeration cap " + std::to_string(kScreenOrderCap));
  std::vector<GeneratingSet> out;
  visit_subsets(g.order, max_size, [&](const std::vector<int>& s) {
    if (!s.empty() && generates(g, s)) out.push_back(GeneratingSet{s});
  });
  return out;
}

ScreenReport dual_reflection_screen(const FiniteGroup& g, std::optional<int> max_size) {
  if (g.order > kScreenOrderCap)
    throw OrderCapExceeded("group order " + std::to_string(g.order) +
                           " exceeds enumeration cap " + std::to_string(kScreenOrderCap));
  ScreenReport report;
  std::map<IntSeries, ScreenBucket> buckets;
  visit_subsets(g.order, max_size, [&](const std::vector<int>& s) {
    ++report.subsets_scanned;
    if (s.empty() || !generates(g, s)) {
      ++report.not_generating;
      return;
    }
    const GeneratingSet re{s};
    const LengthTable lt = length_table(g, re);
    const IntSeries p = poincare_polynomial(lt);
    if (!is_palindrome(p)) {
      ++report.not_palindrome;
      return;
    }
    const auto m = unique_max(lt);
    if (!m) {
      ++report.no_unique_top;
      return;
    }
    const auto cert = cyclotomic_factor(p);
    if (!cert) {
      ++report.not_cyclotomic;
      return;
    }
    if (p.eval(Rat(1)) != g.order) {
      ++report.wrong_value_at_one;
      return;
    }
    auto [it, fresh] = buckets.try_emplace(p);
    if (fresh) {
      it->second.poincare = p;
      it->second.certificate = *cert;
      it->second.top_length = lt.lengths[*m];
    }
    it->second.sets.emplace_back(re, *m);
  });
  for (auto& [_, b] : buckets) report.candidates.push_back(std::move(b));
  return report;
}

}  // namespace halg
