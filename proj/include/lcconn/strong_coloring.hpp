#pragma once

#include <vector>

#include "lcconn/label_cover.hpp"

namespace lcconn {

// Partition of the arcs into induced matchings.
struct StrongColoring {
  std::vector<int> color_of;  // per arc index
  int color_count = 0;

  std::vector<std::vector<int>> classes() const;

  friend bool operator==(const StrongColoring&, const StrongColoring&) = default;
};

// True iff the arcs pairwise share no endpoint and no arc of the graph joins
// an endpoint of one to an endpoint of another. Throws DomainError on an
// unknown arc id.
bool is_induced_matching(const LabelCoverInstance& graph, const std::vector<int>& arc_ids);

// Arcs that may not share a color with `arc`: everything incident to a
// neighbour of either endpoint.
std::vector<std::vector<int>> conflict_sets(const LabelCoverInstance& graph);

// Greedy in arc order: smallest color with no conflicting arc. At most
// 2 * Delta^2 colors.
StrongColoring strong_edge_color(const LabelCoverInstance& graph);

// Minimum strong coloring by exhaustive search (tiny graphs only). Throws
// CapExceededError when the graph has more than `max_arcs` arcs.
StrongColoring minimum_strong_coloring(const LabelCoverInstance& graph, int max_arcs = 16);

bool is_valid_strong_coloring(const LabelCoverInstance& graph, const StrongColoring& coloring);

}  // namespace lcconn
