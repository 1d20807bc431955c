#pragma once

#include <cstdint>

#include "lcconn/label_cover.hpp"

namespace lcconn {

struct InstanceProfile {
  int left_count = 0;
  int right_count = 0;
  int left_labels = 0;
  int right_labels = 0;
  int left_degree = 0;        // every left vertex gets this many distinct neighbours
  Rational planted_slack{0};  // epsilon: the plant covers at least (1 - epsilon) of the arcs
};

// Left-regular random projection game with a planted labeling. A random
// labeling is drawn first; ceil((1 - epsilon)|E|) arcs, chosen at random,
// get a projection consistent with it and the rest get uniformly random
// projections. The plant is stored in `planted`. Throws PreconditionError
// on an infeasible profile.
LabelCoverInstance random_instance(const InstanceProfile& profile, std::uint64_t seed);

}  // namespace lcconn
