#pragma once

#include <optional>
#include <vector>

#include "halg/group.hpp"
#include "halg/series.hpp"

namespace halg {

struct DoesNotGenerate : std::domain_error {
  std::vector<int> unreachable;
  explicit DoesNotGenerate(std::vector<int> u)
      : std::domain_error("generating set does not generate: " + std::to_string(u.size()) +
                          " unreachable element(s)"),
        unreachable(std::move(u)) {}
};

// Subset of G \ {e}.  Generation is enforced at LengthTable construction.
struct GeneratingSet {
  std::vector<int> members;  // sorted, distinct, identity excluded

  static GeneratingSet of(std::vector<int> members);
};

// Reduced lengths and BFS witnesses for one generating set.  Words build on
// the right (g -> g*v), ties broken by smallest generator index.
struct LengthTable {
  GeneratingSet generating_set;
  std::vector<int> lengths;
  // witness[g] = (previous element, generator used); (-1,-1) for the identity.
  std::vector<std::pair<int, int>> witness;

  int max_length() const;
};

LengthTable length_table(const FiniteGroup& g, const GeneratingSet& re);

// One reduced word for g, as a sequence of generator element indices.
std::vector<int> witness_word(const LengthTable& lt, int g);

// Coefficient of t^k counts elements of length k; value at 1 is |G|.
IntSeries poincare_polynomial(const LengthTable& lt);

std::vector<int> max_length_elements(const LengthTable& lt);
std::optional<int> unique_max(const LengthTable& lt);

}  // namespace halg
