#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcconn/rational.hpp"

namespace lcconn {

// One constraint of a projection game. `projection[a]` is the right label
// that left label `a` maps to.
struct Arc {
  int left = 0;
  int right = 0;
  std::vector<int> projection;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Single-label assignment on both sides.
struct Labeling {
  std::vector<int> left;
  std::vector<int> right;

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

// Set-valued assignment. Each set is kept sorted and duplicate-free.
struct MultiLabeling {
  std::vector<std::vector<int>> left;
  std::vector<std::vector<int>> right;

  static MultiLabeling empty(int left_count, int right_count);
  static MultiLabeling from_labeling(const Labeling& labeling);

  friend bool operator==(const MultiLabeling&, const MultiLabeling&) = default;
};

// Bipartite constraint graph (U, W, E) with projections over label sets
// L1 = {0..left_labels-1} and L2 = {0..right_labels-1}. Label costs are
// present only for min-cost instances.
struct LabelCoverInstance {
  int left_count = 0;
  int right_count = 0;
  int left_labels = 0;
  int right_labels = 0;
  std::vector<Arc> arcs;
  std::optional<Rational> left_cost;
  std::optional<Rational> right_cost;
  bool allow_parallel_arcs = false;
  // Planted labeling of synthetic instances; carried through passes.
  std::optional<Labeling> planted;

  bool has_costs() const { return left_cost.has_value() && right_cost.has_value(); }
  int max_label_count() const { return left_labels > right_labels ? left_labels : right_labels; }

  friend bool operator==(const LabelCoverInstance&, const LabelCoverInstance&) = default;
};

struct Violation {
  enum class Kind {
    kEmptySide,
    kEmptyLabels,
    kVertexOutOfRange,
    kProjectionSize,
    kLabelOutOfRange,
    kParallelArc,
    kNegativeCost,
    kPlantedShape,
  };
  Kind kind;
  int arc = -1;  // offending arc index, -1 when not arc-specific
  std::string message;
};

std::vector<Violation> validate(const LabelCoverInstance& instance);

// Throws PreconditionError carrying the first violation, if any.
void require_valid(const LabelCoverInstance& instance);

bool covers(const Arc& arc, const Labeling& labeling);
std::int64_t covered_count(const LabelCoverInstance& instance, const Labeling& labeling);

// Covered arcs over |E|, parallel arcs counted with multiplicity. An
// instance without arcs is fully covered. Throws DomainError on labels
// outside L1/L2 or a labeling of the wrong shape.
Rational coverage_fraction(const LabelCoverInstance& instance, const Labeling& labeling);

// c1 * sum |f1(u)| + c2 * sum |f2(w)|. Throws ConfigurationError when the
// instance carries no costs.
Rational multi_cost(const LabelCoverInstance& instance, const MultiLabeling& m);

bool arc_covered(const Arc& arc, const std::vector<int>& left_set, const std::vector<int>& right_set);
bool is_feasible(const LabelCoverInstance& instance, const MultiLabeling& m);

struct DegreeProfile {
  int max_left = 0;
  int min_left = 0;
  Rational avg_left;
  int max_right = 0;
  int min_right = 0;
  Rational avg_right;
  int max_degree = 0;
  Rational left_ratio{1};   // q1 = max_left / avg_left
  Rational right_ratio{1};  // q2 = max_right / avg_right

  bool left_regular() const { return min_left == max_left; }
  bool right_regular() const { return min_right == max_right; }
  bool biregular() const { return left_regular() && right_regular(); }

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

DegreeProfile degree_profile(const LabelCoverInstance& instance);
std::vector<int> left_degrees(const LabelCoverInstance& instance);
std::vector<int> right_degrees(const LabelCoverInstance& instance);

// Replaces each group of parallel arcs with identical projection by one
// arc. Min-cost optima are unchanged by this.
LabelCoverInstance collapse_parallel_arcs(const LabelCoverInstance& instance);

}  // namespace lcconn
