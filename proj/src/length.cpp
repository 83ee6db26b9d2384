#include "halg/length.hpp"

#include <algorithm>

namespace halg {

GeneratingSet GeneratingSet::of(std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.front() == 0)
    throw std::invalid_argument("generating set must exclude the identity");
  return GeneratingSet{std::move(members)};
}

LengthTable length_table(const FiniteGroup& g, const GeneratingSet& re) {
  for (int v : re.members)
    if (v <= 0 || v >= g.order) throw std::invalid_argument("generator index out of range");

  const int n = g.order;
  LengthTable lt;
  lt.generating_set = re;
  lt.lengths.assign(n, -1);
  lt.witness.assign(n, {-1, -1});
  lt.lengths[0] = 0;

  std::vector<int> frontier = {0};
  int depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<int> next;
    // Generator loop outermost so the smallest generator index claims ties.
    for (int v : re.members)
      for (int prev : frontier) {
        const int to = g.mul(prev, v);
        if (lt.lengths[to] != -1) continue;
        lt.lengths[to] = depth;
        lt.witness[to] = {prev, v};
        next.push_back(to);
      }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }

  std::vector<int> unreachable;
  for (int x = 0; x < n; ++x)
    if (lt.lengths[x] < 0) unreachable.push_back(x);
  if (!unreachable.empty()) throw DoesNotGenerate(std::move(unreachable));
  return lt;
}

std::vector<int> witness_word(const LengthTable& lt, int g) {
  std::vector<int> word;
  while (g != 0) {
    auto [prev, v] = lt.witness[g];
    word.push_back(v);
    g = prev;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

int LengthTable::max_length() const {
  return *std::max_element(lengths.begin(), lengths.end());
}

IntSeries poincare_polynomial(const LengthTable& lt) {
  std::vector<Rat> coeffs(lt.max_length() + 1, Rat(0));
  for (int l : lt.lengths) coeffs[l] += 1;
  return IntSeries::polynomial(std::move(coeffs));
}

std::vector<int> max_length_elements(const LengthTable& lt) {
  const int d = lt.max_length();
  std::vector<int> out;
  for (int g = 0; g < static_cast<int>(lt.lengths.size()); ++g)
    if (lt.lengths[g] == d) out.push_back(g);
  return out;
}

std::optional<int> unique_max(const LengthTable& lt) {
  auto elems = max_length_elements(lt);
  if (elems.size() == 1) return elems[0];
  return std::nullopt;
}

}  // namespace halg
