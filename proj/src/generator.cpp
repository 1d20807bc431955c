#include "lcconn/generator.hpp"

#include <algorithm>
#include <numeric>

#include "lcconn/errors.hpp"
#include "lcconn/rng.hpp"

namespace lcconn {

LabelCoverInstance random_instance(const InstanceProfile& profile, std::uint64_t seed) {
  if (profile.left_count <= 0 || profile.right_count <= 0 || profile.left_labels <= 0 ||
      profile.right_labels <= 0) {
    throw PreconditionError("infeasible profile: vertex and label counts must be positive");
  }
  if (profile.left_degree <= 0 || profile.left_degree > profile.right_count) {
    throw PreconditionError("infeasible profile: left degree " + std::to_string(profile.left_degree) +
                            " must lie in [1, |W|=" + std::to_string(profile.right_count) + "]");
  }
  if (profile.planted_slack < 0 || profile.planted_slack > 1) {
    throw PreconditionError("infeasible profile: planted slack must lie in [0, 1]");
  }

  Rng graph_rng(derive_seed(seed, "graph"));
  Rng plant_rng(derive_seed(seed, "plant"));
  Rng projection_rng(derive_seed(seed, "projection"));

  LabelCoverInstance inst;
  inst.left_count = profile.left_count;
  inst.right_count = profile.right_count;
  inst.left_labels = profile.left_labels;
  inst.right_labels = profile.right_labels;

  std::vector<int> right_ids(static_cast<std::size_t>(profile.right_count));
  for (int u = 0; u < profile.left_count; ++u) {
    std::iota(right_ids.begin(), right_ids.end(), 0);
    // Partial Fisher-Yates: the first left_degree slots are a uniform sample.
    for (int i = 0; i < profile.left_degree; ++i) {
      const auto j = static_cast<std::size_t>(i) +
                     graph_rng.below(static_cast<std::uint64_t>(profile.right_count - i));
      std::swap(right_ids[static_cast<std::size_t>(i)], right_ids[j]);
    }
    std::vector<int> chosen(right_ids.begin(), right_ids.begin() + profile.left_degree);
    std::sort(chosen.begin(), chosen.end());
    for (int w : chosen) inst.arcs.push_back(Arc{u, w, {}});
  }

  Labeling plant;
  for (int u = 0; u < profile.left_count; ++u) {
    plant.left.push_back(static_cast<int>(plant_rng.below(static_cast<std::uint64_t>(profile.left_labels))));
  }
  for (int w = 0; w < profile.right_count; ++w) {
    plant.right.push_back(static_cast<int>(plant_rng.below(static_cast<std::uint64_t>(profile.right_labels))));
  }

  const auto arc_count = static_cast<std::int64_t>(inst.arcs.size());
  // ceil((1 - eps) * |E|)
  const Rational target = (Rational(1) - profile.planted_slack) * arc_count;
  std::int64_t consistent = target.numerator() / target.denominator();
  if (Rational(consistent) < target) ++consistent;

  std::vector<int> order(inst.arcs.size());
  std::iota(order.begin(), order.end(), 0);
  plant_rng.shuffle(order);
  std::vector<bool> planted_arc(inst.arcs.size(), false);
  for (std::int64_t i = 0; i < consistent; ++i) planted_arc[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = true;

  for (std::size_t i = 0; i < inst.arcs.size(); ++i) {
    Arc& arc = inst.arcs[i];
    arc.projection.resize(static_cast<std::size_t>(profile.left_labels));
    for (auto& b : arc.projection) {
      b = static_cast<int>(projection_rng.below(static_cast<std::uint64_t>(profile.right_labels)));
    }
    if (planted_arc[i]) {
      arc.projection[static_cast<std::size_t>(plant.left[static_cast<std::size_t>(arc.left)])] =
          plant.right[static_cast<std::size_t>(arc.right)];
    }
  }
  inst.planted = std::move(plant);
  return inst;
}

}  // namespace lcconn
