#pragma once

#include <cstdint>

#include "lcconn/label_cover.hpp"

namespace lcconn {

// Default number of candidates an exhaustive search may visit.
inline constexpr double kDefaultEnumerationCap = 4194304.0;  // 2^22

struct MaxCoverResult {
  Labeling witness;
  std::int64_t covered = 0;
  Rational fraction;
};

// Exact maximum coverage. The search space |L1|^|U| * |L2|^|W| must not
// exceed `cap` (CapExceededError otherwise). Among optimal labelings the
// witness is the lexicographically smallest (left assignment first, then
// right, vertices in index order).
MaxCoverResult brute_force_max(const LabelCoverInstance& instance,
                               double cap = kDefaultEnumerationCap);

struct MinCostResult {
  MultiLabeling witness;
  Rational cost;
  bool feasible = false;
};

// Exact minimum-cost covering multi-labeling. The search space
// 2^(|L1||U| + |L2||W|) must not exceed `cap`. Ties are broken by the
// lexicographically smallest vector of per-vertex label bitmasks (left
// vertices first; bit a set iff label a is assigned).
MinCostResult brute_force_min_cost(const LabelCoverInstance& instance,
                                   double cap = kDefaultEnumerationCap);

// Candidate counts used by the cap checks (as doubles, they can be huge).
double max_search_space(const LabelCoverInstance& instance);
double min_cost_search_space(const LabelCoverInstance& instance);

}  // namespace lcconn
