#include "lcconn/brute_force.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "lcconn/errors.hpp"

namespace lcconn {
namespace {

// Odometer over `count` digits in [0, base); digit 0 is most significant.
bool advance(std::vector<int>& digits, int base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

std::vector<std::vector<int>> arcs_by_left(const LabelCoverInstance& instance) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(instance.left_count));
  for (std::size_t i = 0; i < instance.arcs.size(); ++i) {
    out[static_cast<std::size_t>(instance.arcs[i].left)].push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> mask_to_set(std::uint32_t mask) {
  std::vector<int> out;
  for (int bit = 0; mask != 0; ++bit, mask >>= 1) {
    if (mask & 1U) out.push_back(bit);
  }
  return out;
}

}  // namespace

double max_search_space(const LabelCoverInstance& instance) {
  return std::pow(static_cast<double>(instance.left_labels), instance.left_count) *
         std::pow(static_cast<double>(instance.right_labels), instance.right_count);
}

double min_cost_search_space(const LabelCoverInstance& instance) {
  return std::pow(2.0, static_cast<double>(instance.left_labels) * instance.left_count +
                           static_cast<double>(instance.right_labels) * instance.right_count);
}

MaxCoverResult brute_force_max(const LabelCoverInstance& instance, double cap) {
  require_valid(instance);
  const double space = max_search_space(instance);
  if (space > cap) throw CapExceededError("max-coverage enumeration exceeds cap", space);

  const auto by_left = arcs_by_left(instance);
  std::vector<int> right(static_cast<std::size_t>(instance.right_count), 0);
  std::vector<int> left(static_cast<std::size_t>(instance.left_count), 0);
  std::vector<int> per_label(static_cast<std::size_t>(instance.left_labels), 0);

  MaxCoverResult best;
  best.covered = -1;
  // Given the right assignment, left vertices are independent: each takes
  // its best label, smallest on ties, which is also the lexicographically
  // smallest optimal left assignment for this right assignment.
  do {
    std::int64_t total = 0;
    for (int u = 0; u < instance.left_count; ++u) {
      std::fill(per_label.begin(), per_label.end(), 0);
      for (int arc_id : by_left[static_cast<std::size_t>(u)]) {
        const Arc& arc = instance.arcs[static_cast<std::size_t>(arc_id)];
        const int want = right[static_cast<std::size_t>(arc.right)];
        for (int a = 0; a < instance.left_labels; ++a) {
          if (arc.projection[static_cast<std::size_t>(a)] == want) ++per_label[static_cast<std::size_t>(a)];
        }
      }
      int pick = 0;
      for (int a = 1; a < instance.left_labels; ++a) {
        if (per_label[static_cast<std::size_t>(a)] > per_label[static_cast<std::size_t>(pick)]) pick = a;
      }
      left[static_cast<std::size_t>(u)] = pick;
      total += per_label[static_cast<std::size_t>(pick)];
    }
    const bool better =
        total > best.covered ||
        (total == best.covered &&
         std::tie(left, right) < std::tie(best.witness.left, best.witness.right));
    if (better) {
      best.covered = total;
      best.witness.left = left;
      best.witness.right = right;
    }
  } while (advance(right, instance.right_labels));

  best.fraction = instance.arcs.empty()
                      ? Rational(1)
                      : Rational(best.covered, static_cast<std::int64_t>(instance.arcs.size()));
  return best;
}

MinCostResult brute_force_min_cost(const LabelCoverInstance& instance, double cap) {
  require_valid(instance);
  if (!instance.has_costs()) throw ConfigurationError("min-cost search needs label costs");
  const double space = min_cost_search_space(instance);
  if (space > cap) throw CapExceededError("min-cost enumeration exceeds cap", space);
  if (instance.left_labels > 20 || instance.right_labels > 20) {
    throw CapExceededError("label sets too large for mask enumeration", space);
  }

  const auto by_left = arcs_by_left(instance);
  const int left_subsets = 1 << instance.left_labels;
  const Rational c1 = *instance.left_cost;
  const Rational c2 = *instance.right_cost;

  std::vector<int> right_masks(static_cast<std::size_t>(instance.right_count), 0);
  std::vector<int> left_masks(static_cast<std::size_t>(instance.left_count), 0);

  MinCostResult best;
  std::vector<int> best_left;
  std::vector<int> best_right;

  do {
    std::int64_t right_labels_used = 0;
    for (int m : right_masks) right_labels_used += std::popcount(static_cast<unsigned>(m));
    const Rational right_part = c2 * right_labels_used;
    if (best.feasible && right_part > best.cost) continue;

    bool ok = true;
    std::int64_t left_labels_used = 0;
    for (int u = 0; u < instance.left_count && ok; ++u) {
      const auto& arcs = by_left[static_cast<std::size_t>(u)];
      if (arcs.empty()) {
        left_masks[static_cast<std::size_t>(u)] = 0;
        continue;
      }
      // cover[a]: arcs of u that label a covers under the current right sets.
      std::vector<std::uint64_t> cover(static_cast<std::size_t>(instance.left_labels), 0);
      for (std::size_t k = 0; k < arcs.size(); ++k) {
        const Arc& arc = instance.arcs[static_cast<std::size_t>(arcs[k])];
        const int rmask = right_masks[static_cast<std::size_t>(arc.right)];
        for (int a = 0; a < instance.left_labels; ++a) {
          if (rmask & (1 << arc.projection[static_cast<std::size_t>(a)])) {
            cover[static_cast<std::size_t>(a)] |= (std::uint64_t{1} << k);
          }
        }
      }
      const std::uint64_t need = arcs.size() >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << arcs.size()) - 1);
      int pick = -1;
      for (int mask = 1; mask < left_subsets; ++mask) {
        std::uint64_t got = 0;
        for (int a = 0; a < instance.left_labels; ++a) {
          if (mask & (1 << a)) got |= cover[static_cast<std::size_t>(a)];
        }
        if (got != need) continue;
        if (pick < 0 || std::popcount(static_cast<unsigned>(mask)) < std::popcount(static_cast<unsigned>(pick))) {
          pick = mask;
        }
      }
      if (pick < 0) {
        ok = false;
      } else {
        left_masks[static_cast<std::size_t>(u)] = pick;
        left_labels_used += std::popcount(static_cast<unsigned>(pick));
      }
    }
    if (!ok) continue;

    const Rational cost = c1 * left_labels_used + right_part;
    const bool better = !best.feasible || cost < best.cost ||
                        (cost == best.cost &&
                         std::tie(left_masks, right_masks) < std::tie(best_left, best_right));
    if (better) {
      best.feasible = true;
      best.cost = cost;
      best_left = left_masks;
      best_right = right_masks;
    }
  } while (advance(right_masks, 1 << instance.right_labels));

  if (best.feasible) {
    best.witness = MultiLabeling::empty(instance.left_count, instance.right_count);
    for (std::size_t u = 0; u < best_left.size(); ++u) best.witness.left[u] = mask_to_set(static_cast<std::uint32_t>(best_left[u]));
    for (std::size_t w = 0; w < best_right.size(); ++w) best.witness.right[w] = mask_to_set(static_cast<std::uint32_t>(best_right[w]));
  }
  return best;
}

}  // namespace lcconn
