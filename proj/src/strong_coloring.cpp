#include "lcconn/strong_coloring.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "lcconn/errors.hpp"

namespace lcconn {

std::vector<std::vector<int>> StrongColoring::classes() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(color_count));
  for (std::size_t e = 0; e < color_of.size(); ++e) out[static_cast<std::size_t>(color_of[e])].push_back(static_cast<int>(e));
  return out;
}

bool is_induced_matching(const LabelCoverInstance& graph, const std::vector<int>& arc_ids) {
  std::set<int> lefts, rights;
  for (int id : arc_ids) {
    if (id < 0 || id >= static_cast<int>(graph.arcs.size())) {
      throw DomainError("unknown arc id " + std::to_string(id));
    }
    const Arc& a = graph.arcs[static_cast<std::size_t>(id)];
    if (!lefts.insert(a.left).second || !rights.insert(a.right).second) return false;
  }
  // Every graph arc between chosen endpoints must be one of the chosen arcs
  // themselves; with distinct endpoints that means (left, right) pairs match.
  std::set<std::pair<int, int>> chosen;
  for (int id : arc_ids) chosen.insert({graph.arcs[static_cast<std::size_t>(id)].left, graph.arcs[static_cast<std::size_t>(id)].right});
  for (const Arc& a : graph.arcs) {
    if (lefts.count(a.left) && rights.count(a.right) && !chosen.count({a.left, a.right})) return false;
  }
  return true;
}

std::vector<std::vector<int>> conflict_sets(const LabelCoverInstance& graph) {
  std::vector<std::vector<int>> at_left(static_cast<std::size_t>(graph.left_count));
  std::vector<std::vector<int>> at_right(static_cast<std::size_t>(graph.right_count));
  for (std::size_t e = 0; e < graph.arcs.size(); ++e) {
    at_left[static_cast<std::size_t>(graph.arcs[e].left)].push_back(static_cast<int>(e));
    at_right[static_cast<std::size_t>(graph.arcs[e].right)].push_back(static_cast<int>(e));
  }
  std::vector<std::vector<int>> out(graph.arcs.size());
  for (std::size_t e = 0; e < graph.arcs.size(); ++e) {
    const Arc& arc = graph.arcs[e];
    std::vector<int>& c = out[e];
    for (int f : at_left[static_cast<std::size_t>(arc.left)]) {
      for (int g : at_right[static_cast<std::size_t>(graph.arcs[static_cast<std::size_t>(f)].right)]) c.push_back(g);
    }
    for (int f : at_right[static_cast<std::size_t>(arc.right)]) {
      for (int g : at_left[static_cast<std::size_t>(graph.arcs[static_cast<std::size_t>(f)].left)]) c.push_back(g);
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    c.erase(std::remove(c.begin(), c.end(), static_cast<int>(e)), c.end());
  }
  return out;
}

StrongColoring strong_edge_color(const LabelCoverInstance& graph) {
  const auto conflicts = conflict_sets(graph);
  StrongColoring sc;
  sc.color_of.assign(graph.arcs.size(), -1);
  std::vector<char> used;
  for (std::size_t e = 0; e < graph.arcs.size(); ++e) {
    used.assign(conflicts[e].size() + 1, 0);
    for (int f : conflicts[e]) {
      const int c = sc.color_of[static_cast<std::size_t>(f)];
      if (c >= 0 && c < static_cast<int>(used.size())) used[static_cast<std::size_t>(c)] = 1;
    }
    int color = 0;
    while (used[static_cast<std::size_t>(color)]) ++color;
    sc.color_of[e] = color;
    sc.color_count = std::max(sc.color_count, color + 1);
  }
  const long long delta = degree_profile(graph).max_degree;
  if (sc.color_count > 2 * delta * delta && !graph.arcs.empty()) {
    throw std::logic_error("greedy strong coloring exceeded 2*Delta^2 colors");
  }
  return sc;
}

bool is_valid_strong_coloring(const LabelCoverInstance& graph, const StrongColoring& coloring) {
  if (coloring.color_of.size() != graph.arcs.size()) return false;
  for (int c : coloring.color_of) {
    if (c < 0 || c >= coloring.color_count) return false;
  }
  for (const auto& cls : coloring.classes()) {
    if (!is_induced_matching(graph, cls)) return false;
  }
  return true;
}

StrongColoring minimum_strong_coloring(const LabelCoverInstance& graph, int max_arcs) {
  const int m = static_cast<int>(graph.arcs.size());
  if (m > max_arcs) throw CapExceededError("exact strong coloring limited to " + std::to_string(max_arcs) + " arcs", m);
  const auto conflicts = conflict_sets(graph);
  std::vector<int> color(static_cast<std::size_t>(m), -1);
  // Colors are introduced in order (color c only after c-1), which removes
  // permutation symmetry.
  std::function<bool(int, int, int)> place = [&](int e, int used, int limit) -> bool {
    if (e == m) return true;
    for (int c = 0; c < std::min(used + 1, limit); ++c) {
      bool ok = true;
      for (int f : conflicts[static_cast<std::size_t>(e)]) {
        if (f < e && color[static_cast<std::size_t>(f)] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[static_cast<std::size_t>(e)] = c;
      if (place(e + 1, std::max(used, c + 1), limit)) return true;
    }
    color[static_cast<std::size_t>(e)] = -1;
    return false;
  };
  for (int limit = (m == 0 ? 0 : 1);; ++limit) {
    if (place(0, 0, limit)) return StrongColoring{color, limit};
  }
}

}  // namespace lcconn
