#pragma once

#include "halg/frobenius.hpp"

namespace halg {

inline constexpr int kScreenOrderCap = 64;

// One bucket of survivors sharing a Poincare polynomial.
struct ScreenBucket {
  IntSeries poincare;
  CyclotomicCertificate certificate;
  int top_length = 0;
  // (generating set, its top element m)
  std::vector<std::pair<GeneratingSet, int>> sets;
};

struct ScreenReport {
  long long subsets_scanned = 0;
  std::vector<ScreenBucket> candidates;  // ordered by polynomial
  // Rejection tallies; every scanned subset lands in exactly one bucket.
  long long not_generating = 0;
  long long not_palindrome = 0;
  long long no_unique_top = 0;
  long long not_cyclotomic = 0;
  long long wrong_value_at_one = 0;

  long long candidate_sets() const;
};

// All nonempty subsets of G \ {e} (optionally size-capped) that generate G,
// in lexicographic order on sorted index tuples.
std::vector<GeneratingSet> enumerate_generating_sets(const FiniteGroup& g,
                                                     std::optional<int> max_size = std::nullopt);

// Necessary-condition screen for dual-reflection candidacy: generation,
// palindrome, unique top, cyclotomic certificate, p(1) = |G|.  Survivors are
// candidates only; no sufficiency is claimed.
ScreenReport dual_reflection_screen(const FiniteGroup& g,
                                    std::optional<int> max_size = std::nullopt);

}  // namespace halg
