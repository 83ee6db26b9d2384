#pragma once

#include <map>
#include <optional>
#include <tuple>

#include "halg/length.hpp"
#include "halg/rat.hpp"

namespace halg {

struct ZeroWeight : std::domain_error {
  ZeroWeight() : std::domain_error("skew Hasse weights must be nonzero") {}
};

// Graded algebra with basis indexed by group elements, deg g = l(g).
// structure holds the scalar alpha(g,h) exactly on length-additive pairs;
// an absent key means the product is zero.
struct GradedAlgebraTable {
  FiniteGroup group;
  LengthTable lengths;
  std::map<std::pair<int, int>, Rat> structure;
  std::optional<int> top;  // unique maximal-length element, when it exists

  // Product of basis elements g,h: (scalar, basis index), or nullopt for 0.
  std::optional<std::pair<Rat, int>> mul(int g, int h) const;
};

// All structure constants 1 on length-additive pairs.
GradedAlgebraTable hasse_algebra(const FiniteGroup& g, const GeneratingSet& re);

// Coboundary twist alpha(g,h) = w(g) w(h) / w(gh); weights[e] must be 1.
GradedAlgebraTable skew_hasse_from_weights(const FiniteGroup& g, const GeneratingSet& re,
                                           const std::vector<Rat>& weights);

// Arbitrary scalar table on the length-additive pattern.  Entries must cover
// exactly the length-additive pairs with nonzero scalars; associativity is
// NOT checked here -- run check_associativity before analysis.
GradedAlgebraTable algebra_from_entries(const FiniteGroup& g, const GeneratingSet& re,
                                        const std::map<std::pair<int, int>, Rat>& entries);

// Exhaustive |G|^3 scan of (g.h).k vs g.(h.k), including the zero pattern.
// Returns the lexicographically smallest failing triple, or nullopt if ok.
std::optional<std::tuple<int, int, int>> check_associativity(const GradedAlgebraTable& a);

// Scalar 2-cocycle identity alpha(g,h) alpha(gh,k) = alpha(h,k) alpha(g,hk)
// on all triples with all lengths additive.
std::optional<std::tuple<int, int, int>> cocycle_consistency(const GradedAlgebraTable& a);

IntSeries hilbert_series(const GradedAlgebraTable& a);

}  // namespace halg
