#include "lcconn/label_cover.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "lcconn/errors.hpp"

namespace lcconn {

MultiLabeling MultiLabeling::empty(int left_count, int right_count) {
  MultiLabeling m;
  m.left.assign(static_cast<std::size_t>(left_count), {});
  m.right.assign(static_cast<std::size_t>(right_count), {});
  return m;
}

MultiLabeling MultiLabeling::from_labeling(const Labeling& labeling) {
  MultiLabeling m;
  for (int a : labeling.left) m.left.push_back({a});
  for (int b : labeling.right) m.right.push_back({b});
  return m;
}

std::vector<Violation> validate(const LabelCoverInstance& instance) {
  using Kind = Violation::Kind;
  std::vector<Violation> out;
  if (instance.left_count <= 0 || instance.right_count <= 0) {
    out.push_back({Kind::kEmptySide, -1, "vertex sets U and W must be nonempty"});
  }
  if (instance.left_labels <= 0 || instance.right_labels <= 0) {
    out.push_back({Kind::kEmptyLabels, -1, "label sets L1 and L2 must be nonempty"});
  }
  if (instance.left_cost && *instance.left_cost < 0) {
    out.push_back({Kind::kNegativeCost, -1, "left label cost is negative"});
  }
  if (instance.right_cost && *instance.right_cost < 0) {
    out.push_back({Kind::kNegativeCost, -1, "right label cost is negative"});
  }

  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < instance.arcs.size(); ++i) {
    const Arc& arc = instance.arcs[i];
    const int id = static_cast<int>(i);
    const std::string where = "arc " + std::to_string(i) + " (" + std::to_string(arc.left) + "," +
                              std::to_string(arc.right) + ")";
    if (arc.left < 0 || arc.left >= instance.left_count || arc.right < 0 ||
        arc.right >= instance.right_count) {
      out.push_back({Kind::kVertexOutOfRange, id, where + " has an endpoint out of range"});
    }
    if (static_cast<int>(arc.projection.size()) != instance.left_labels) {
      out.push_back({Kind::kProjectionSize, id,
                     where + " projection defined on " + std::to_string(arc.projection.size()) +
                         " of " + std::to_string(instance.left_labels) + " left labels"});
    }
    for (std::size_t a = 0; a < arc.projection.size(); ++a) {
      if (arc.projection[a] < 0 || arc.projection[a] >= instance.right_labels) {
        out.push_back({Kind::kLabelOutOfRange, id,
                       where + " maps label " + std::to_string(a) + " outside L2"});
      }
    }
    if (!seen.insert({arc.left, arc.right}).second && !instance.allow_parallel_arcs) {
      out.push_back({Kind::kParallelArc, id, where + " is parallel to an earlier arc"});
    }
  }

  if (instance.planted) {
    const Labeling& p = *instance.planted;
    bool ok = static_cast<int>(p.left.size()) == instance.left_count &&
              static_cast<int>(p.right.size()) == instance.right_count;
    for (int a : p.left) ok = ok && a >= 0 && a < instance.left_labels;
    for (int b : p.right) ok = ok && b >= 0 && b < instance.right_labels;
    if (!ok) out.push_back({Kind::kPlantedShape, -1, "planted labeling does not fit the instance"});
  }
  return out;
}

void require_valid(const LabelCoverInstance& instance) {
  const auto violations = validate(instance);
  if (!violations.empty()) throw PreconditionError("invalid instance: " + violations.front().message);
}

bool covers(const Arc& arc, const Labeling& labeling) {
  return arc.projection[static_cast<std::size_t>(labeling.left[static_cast<std::size_t>(arc.left)])] ==
         labeling.right[static_cast<std::size_t>(arc.right)];
}

namespace {

void check_labeling(const LabelCoverInstance& instance, const Labeling& labeling) {
  if (static_cast<int>(labeling.left.size()) != instance.left_count ||
      static_cast<int>(labeling.right.size()) != instance.right_count) {
    throw DomainError("labeling is not total on U and W");
  }
  for (int a : labeling.left) {
    if (a < 0 || a >= instance.left_labels) throw DomainError("left label " + std::to_string(a) + " outside L1");
  }
  for (int b : labeling.right) {
    if (b < 0 || b >= instance.right_labels) throw DomainError("right label " + std::to_string(b) + " outside L2");
  }
}

}  // namespace

std::int64_t covered_count(const LabelCoverInstance& instance, const Labeling& labeling) {
  check_labeling(instance, labeling);
  std::int64_t count = 0;
  for (const Arc& arc : instance.arcs) count += covers(arc, labeling) ? 1 : 0;
  return count;
}

Rational coverage_fraction(const LabelCoverInstance& instance, const Labeling& labeling) {
  const std::int64_t covered = covered_count(instance, labeling);
  if (instance.arcs.empty()) return Rational(1);
  return Rational(covered, static_cast<std::int64_t>(instance.arcs.size()));
}

Rational multi_cost(const LabelCoverInstance& instance, const MultiLabeling& m) {
  if (!instance.has_costs()) throw ConfigurationError("instance has no label costs");
  std::int64_t left_total = 0;
  std::int64_t right_total = 0;
  for (const auto& s : m.left) left_total += static_cast<std::int64_t>(s.size());
  for (const auto& s : m.right) right_total += static_cast<std::int64_t>(s.size());
  return *instance.left_cost * left_total + *instance.right_cost * right_total;
}

bool arc_covered(const Arc& arc, const std::vector<int>& left_set, const std::vector<int>& right_set) {
  for (int a : left_set) {
    const int b = arc.projection[static_cast<std::size_t>(a)];
    if (std::binary_search(right_set.begin(), right_set.end(), b)) return true;
  }
  return false;
}

bool is_feasible(const LabelCoverInstance& instance, const MultiLabeling& m) {
  if (static_cast<int>(m.left.size()) != instance.left_count ||
      static_cast<int>(m.right.size()) != instance.right_count) {
    throw DomainError("multi-labeling is not defined on every vertex");
  }
  for (const Arc& arc : instance.arcs) {
    if (!arc_covered(arc, m.left[static_cast<std::size_t>(arc.left)],
                     m.right[static_cast<std::size_t>(arc.right)])) {
      return false;
    }
  }
  return true;
}

std::vector<int> left_degrees(const LabelCoverInstance& instance) {
  std::vector<int> deg(static_cast<std::size_t>(instance.left_count), 0);
  for (const Arc& arc : instance.arcs) ++deg[static_cast<std::size_t>(arc.left)];
  return deg;
}

std::vector<int> right_degrees(const LabelCoverInstance& instance) {
  std::vector<int> deg(static_cast<std::size_t>(instance.right_count), 0);
  for (const Arc& arc : instance.arcs) ++deg[static_cast<std::size_t>(arc.right)];
  return deg;
}

DegreeProfile degree_profile(const LabelCoverInstance& instance) {
  DegreeProfile p;
  const auto left = left_degrees(instance);
  const auto right = right_degrees(instance);
  const auto edges = static_cast<std::int64_t>(instance.arcs.size());
  if (!left.empty()) {
    p.max_left = *std::max_element(left.begin(), left.end());
    p.min_left = *std::min_element(left.begin(), left.end());
    p.avg_left = Rational(edges, static_cast<std::int64_t>(left.size()));
  }
  if (!right.empty()) {
    p.max_right = *std::max_element(right.begin(), right.end());
    p.min_right = *std::min_element(right.begin(), right.end());
    p.avg_right = Rational(edges, static_cast<std::int64_t>(right.size()));
  }
  p.max_degree = std::max(p.max_left, p.max_right);
  if (p.avg_left > 0) p.left_ratio = Rational(p.max_left) / p.avg_left;
  if (p.avg_right > 0) p.right_ratio = Rational(p.max_right) / p.avg_right;
  return p;
}

LabelCoverInstance collapse_parallel_arcs(const LabelCoverInstance& instance) {
  LabelCoverInstance out = instance;
  out.arcs.clear();
  std::set<std::tuple<int, int, std::vector<int>>> seen;
  for (const Arc& arc : instance.arcs) {
    if (seen.insert({arc.left, arc.right, arc.projection}).second) out.arcs.push_back(arc);
  }
  std::set<std::pair<int, int>> endpoints;
  bool parallel = false;
  for (const Arc& arc : out.arcs) parallel = parallel || !endpoints.insert({arc.left, arc.right}).second;
  out.allow_parallel_arcs = parallel;
  return out;
}

}  // namespace lcconn
