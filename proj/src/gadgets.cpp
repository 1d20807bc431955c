#include "lcconn/gadgets.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "lcconn/errors.hpp"

namespace lcconn {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void check_source(const LabelCoverInstance& lc) {
  require_valid(lc);
  if (!lc.has_costs()) throw ConfigurationError("gadget construction needs label costs");
  std::set<std::pair<int, int>> seen;
  for (const Arc& a : lc.arcs) {
    if (!seen.insert({a.left, a.right}).second) {
      throw PreconditionError("gadget construction needs an instance without parallel arcs");
    }
  }
}

// Network under construction with duplicate suppression for padding.
struct Builder {
  NetworkInstance net;
  std::set<std::pair<int, int>> pairs;

  int vertex(VertexRole role) { return net.add_vertex(role); }

  int edge(int u, int v, Cost c, int mult = 1) {
    pairs.insert(key(u, v));
    return net.add_edge(u, v, c, mult);
  }

  // Adds the edge unless an edge between u and v already exists.
  bool unique_edge(int u, int v, Cost c) {
    if (!pairs.insert(key(u, v)).second) return false;
    net.add_edge(u, v, c);
    return true;
  }

  std::pair<int, int> key(int u, int v) const {
    if (!net.directed && u > v) std::swap(u, v);
    return {u, v};
  }
};

// Vertices and label edges shared by the rooted and SNDP gadgets.
struct Base {
  std::vector<int> u, w;
  std::vector<std::vector<int>> a, b;
};

GadgetLayout empty_layout(const LabelCoverInstance& lc) {
  GadgetLayout l;
  l.left_count = lc.left_count;
  l.right_count = lc.right_count;
  l.left_labels = lc.left_labels;
  l.right_labels = lc.right_labels;
  l.left_label_edge.assign(idx(lc.left_count * lc.left_labels), -1);
  l.right_label_edge.assign(idx(lc.right_count * lc.right_labels), -1);
  l.demand_of_arc.assign(lc.arcs.size(), -1);
  return l;
}

Base build_base(Builder& bld, GadgetLayout& layout, const LabelCoverInstance& lc) {
  Base base;
  for (int i = 0; i < lc.left_count; ++i) base.u.push_back(bld.vertex(VertexRole::kLeft));
  for (int j = 0; j < lc.right_count; ++j) base.w.push_back(bld.vertex(VertexRole::kRight));
  base.a.resize(idx(lc.left_count));
  base.b.resize(idx(lc.right_count));
  for (int i = 0; i < lc.left_count; ++i) {
    for (int l = 0; l < lc.left_labels; ++l) {
      const int v = bld.vertex(VertexRole::kLabelA);
      base.a[idx(i)].push_back(v);
      layout.left_label_edge[idx(i * lc.left_labels + l)] = bld.edge(base.u[idx(i)], v, Cost::of(*lc.left_cost));
    }
  }
  for (int j = 0; j < lc.right_count; ++j) {
    for (int l = 0; l < lc.right_labels; ++l) {
      const int v = bld.vertex(VertexRole::kLabelB);
      base.b[idx(j)].push_back(v);
      layout.right_label_edge[idx(j * lc.right_labels + l)] = bld.edge(v, base.w[idx(j)], Cost::of(*lc.right_cost));
    }
  }
  for (const Arc& arc : lc.arcs) {
    for (int l = 0; l < lc.left_labels; ++l) {
      bld.edge(base.a[idx(arc.left)][idx(l)], base.b[idx(arc.right)][idx(arc.projection[idx(l)])], Cost{});
    }
  }
  return base;
}

std::vector<std::vector<int>> neighbours_of_right(const LabelCoverInstance& lc) {
  std::vector<std::vector<int>> out(idx(lc.right_count));
  for (const Arc& a : lc.arcs) out[idx(a.right)].push_back(a.left);
  return out;
}

std::vector<std::vector<int>> neighbours_of_left(const LabelCoverInstance& lc) {
  std::vector<std::vector<int>> out(idx(lc.left_count));
  for (const Arc& a : lc.arcs) out[idx(a.left)].push_back(a.right);
  return out;
}

// A_{i'} for i' != i adjacent to w_j, and B_{j'} for j' != j adjacent to u_i.
std::vector<int> label_padding(const LabelCoverInstance& lc, const Base& base, const Arc& arc) {
  std::vector<int> z;
  const auto left_nbrs = neighbours_of_right(lc);
  const auto right_nbrs = neighbours_of_left(lc);
  for (int i2 : left_nbrs[idx(arc.right)]) {
    if (i2 != arc.left) z.insert(z.end(), base.a[idx(i2)].begin(), base.a[idx(i2)].end());
  }
  for (int j2 : right_nbrs[idx(arc.left)]) {
    if (j2 != arc.right) z.insert(z.end(), base.b[idx(j2)].begin(), base.b[idx(j2)].end());
  }
  return z;
}

std::vector<int> canonical_labels(const Base& base, const Arc& arc) {
  return {base.a[idx(arc.left)][0], base.b[idx(arc.right)][idx(arc.projection[0])]};
}

}  // namespace

std::vector<std::vector<int>> arcs_within_two(const LabelCoverInstance& lc) {
  const int m = static_cast<int>(lc.arcs.size());
  std::vector<std::vector<int>> at_left(idx(lc.left_count)), at_right(idx(lc.right_count));
  for (int e = 0; e < m; ++e) {
    at_left[idx(lc.arcs[idx(e)].left)].push_back(e);
    at_right[idx(lc.arcs[idx(e)].right)].push_back(e);
  }
  auto line_neighbours = [&](int e) {
    std::vector<int> out;
    for (int f : at_left[idx(lc.arcs[idx(e)].left)]) if (f != e) out.push_back(f);
    for (int f : at_right[idx(lc.arcs[idx(e)].right)]) if (f != e) out.push_back(f);
    return out;
  };
  std::vector<std::vector<int>> out(idx(m));
  for (int e = 0; e < m; ++e) {
    std::set<int> near;
    for (int f : line_neighbours(e)) {
      near.insert(f);
      for (int g : line_neighbours(f)) near.insert(g);
    }
    near.erase(e);
    out[idx(e)].assign(near.begin(), near.end());
  }
  return out;
}

GadgetResult to_directed_rooted(const LabelCoverInstance& lc) {
  check_source(lc);
  Builder bld;
  bld.net.directed = true;
  bld.net.kind = ProblemKind::kRootedDirected;
  GadgetLayout layout = empty_layout(lc);
  const int r = bld.vertex(VertexRole::kRoot);
  bld.net.root = r;
  const Base base = build_base(bld, layout, lc);
  for (int i = 0; i < lc.left_count; ++i) bld.edge(r, base.u[idx(i)], Cost{});

  const int delta = degree_profile(lc).max_degree;
  const auto nbr = neighbours_of_right(lc);
  bld.net.k = std::max(delta, 1);
  for (std::size_t e = 0; e < lc.arcs.size(); ++e) {
    const Arc& arc = lc.arcs[e];
    const int t = bld.vertex(VertexRole::kTerminal);
    bld.edge(base.w[idx(arc.right)], t, Cost{});
    DemandLayout dl;
    dl.arc = static_cast<int>(e);
    int indegree = 1;
    for (int i2 : nbr[idx(arc.right)]) {
      if (i2 == arc.left) continue;
      bld.edge(base.u[idx(i2)], t, Cost{});
      dl.padding["padding"].push_back(base.u[idx(i2)]);
      ++indegree;
    }
    if (delta > indegree) bld.edge(r, t, Cost{}, delta - indegree);
    const auto ab = canonical_labels(base, arc);
    dl.canonical_path = {r, base.u[idx(arc.left)], ab[0], ab[1], base.w[idx(arc.right)], t};
    layout.demand_of_arc[e] = static_cast<int>(bld.net.demands.size());
    bld.net.demands.push_back(Demand{r, t, bld.net.k});
    layout.demands.push_back(std::move(dl));
  }
  return GadgetResult{std::move(bld.net), std::move(layout)};
}

GadgetResult to_undirected_rooted(const LabelCoverInstance& lc) {
  check_source(lc);
  Builder bld;
  bld.net.directed = false;
  bld.net.kind = ProblemKind::kRootedUndirected;
  GadgetLayout layout = empty_layout(lc);
  const int r = bld.vertex(VertexRole::kRoot);
  bld.net.root = r;
  const Base base = build_base(bld, layout, lc);
  const auto near = arcs_within_two(lc);
  const std::size_t m = lc.arcs.size();

  std::vector<int> terminal(m);
  for (std::size_t e = 0; e < m; ++e) {
    terminal[e] = bld.vertex(VertexRole::kTerminal);
    bld.edge(base.w[idx(lc.arcs[e].right)], terminal[e], Cost{});
  }
  std::vector<std::vector<int>> z(m), x(m), y(m);
  for (std::size_t e = 0; e < m; ++e) {
    z[e] = label_padding(lc, base, lc.arcs[e]);
    for (int f : near[e]) z[e].push_back(terminal[idx(f)]);
  }
  for (std::size_t e = 0; e < m; ++e) {
    const int u = base.u[idx(lc.arcs[e].left)];
    for (std::size_t c = 0; c <= z[e].size(); ++c) {
      const int v = bld.vertex(VertexRole::kClique);
      for (int other : x[e]) bld.edge(other, v, Cost{});
      bld.edge(r, v, Cost{});
      bld.edge(v, u, Cost{});
      x[e].push_back(v);
    }
  }
  int k = 1;
  for (std::size_t e = 0; e < m; ++e) {
    for (int f : near[e]) y[e].insert(y[e].end(), x[idx(f)].begin(), x[idx(f)].end());
    k = std::max(k, static_cast<int>(z[e].size() + y[e].size()) + 1);
  }
  bld.net.k = k;
  for (std::size_t e = 0; e < m; ++e) {
    const int t = terminal[e];
    for (int v : z[e]) {
      for (int xv : x[e]) bld.unique_edge(xv, v, Cost{});
      bld.unique_edge(v, t, Cost{});
    }
    for (int v : y[e]) bld.unique_edge(v, t, Cost{});
  }
  for (std::size_t e = 0; e < m; ++e) {
    const Arc& arc = lc.arcs[e];
    const int t = terminal[e];
    DemandLayout dl;
    dl.arc = static_cast<int>(e);
    const int q_size = k - static_cast<int>(z[e].size() + y[e].size()) - 1;
    for (int c = 0; c < q_size; ++c) {
      const int q = bld.vertex(VertexRole::kAuxQ);
      bld.edge(r, q, Cost{});
      bld.edge(q, t, Cost{});
      dl.padding["Q"].push_back(q);
    }
    dl.padding["X"] = x[e];
    dl.padding["Y"] = y[e];
    dl.padding["Z"] = z[e];
    const auto ab = canonical_labels(base, arc);
    dl.canonical_path = {r, x[e].back(), base.u[idx(arc.left)], ab[0], ab[1], base.w[idx(arc.right)], t};
    layout.demand_of_arc[e] = static_cast<int>(bld.net.demands.size());
    bld.net.demands.push_back(Demand{r, t, k});
    layout.demands.push_back(std::move(dl));
  }
  return GadgetResult{std::move(bld.net), std::move(layout)};
}

GadgetResult to_vc_sndp(const LabelCoverInstance& lc) {
  check_source(lc);
  Builder bld;
  bld.net.directed = false;
  bld.net.kind = ProblemKind::kVcSndp;
  GadgetLayout layout = empty_layout(lc);
  const Base base = build_base(bld, layout, lc);
  const auto near = arcs_within_two(lc);
  const std::size_t m = lc.arcs.size();

  std::vector<int> source(m), sink(m);
  for (std::size_t e = 0; e < m; ++e) {
    source[e] = bld.vertex(VertexRole::kSource);
    sink[e] = bld.vertex(VertexRole::kSink);
    bld.edge(source[e], base.u[idx(lc.arcs[e].left)], Cost{});
    bld.edge(sink[e], base.w[idx(lc.arcs[e].right)], Cost{});
  }
  std::vector<std::vector<int>> z(m), y(m);
  int k = 1;
  for (std::size_t e = 0; e < m; ++e) {
    z[e] = label_padding(lc, base, lc.arcs[e]);
    for (int f : near[e]) {
      y[e].push_back(source[idx(f)]);
      y[e].push_back(sink[idx(f)]);
    }
    k = std::max(k, static_cast<int>(z[e].size() + y[e].size()) + 1);
  }
  bld.net.k = k;
  for (std::size_t e = 0; e < m; ++e) {
    for (const auto* set : {&y[e], &z[e]}) {
      for (int v : *set) {
        bld.unique_edge(source[e], v, Cost{});
        bld.unique_edge(v, sink[e], Cost{});
      }
    }
  }
  for (std::size_t e = 0; e < m; ++e) {
    const Arc& arc = lc.arcs[e];
    DemandLayout dl;
    dl.arc = static_cast<int>(e);
    const int q_size = k - static_cast<int>(z[e].size() + y[e].size()) - 1;
    for (int c = 0; c < q_size; ++c) {
      const int q = bld.vertex(VertexRole::kAuxQ);
      bld.edge(source[e], q, Cost{});
      bld.edge(q, sink[e], Cost{});
      dl.padding["Q"].push_back(q);
    }
    dl.padding["Y"] = y[e];
    dl.padding["Z"] = z[e];
    const auto ab = canonical_labels(base, arc);
    dl.canonical_path = {source[e], base.u[idx(arc.left)], ab[0], ab[1], base.w[idx(arc.right)], sink[e]};
    layout.demand_of_arc[e] = static_cast<int>(bld.net.demands.size());
    bld.net.demands.push_back(Demand{source[e], sink[e], k});
    layout.demands.push_back(std::move(dl));
  }
  return GadgetResult{std::move(bld.net), std::move(layout)};
}

GadgetResult to_k_route_cut(const LabelCoverInstance& lc) {
  check_source(lc);
  Builder bld;
  bld.net.directed = false;
  bld.net.kind = ProblemKind::kKRouteCut;
  GadgetLayout layout = empty_layout(lc);
  const Cost inf = Cost::inf();
  const int l1 = lc.left_labels;
  const int l2 = lc.right_labels;

  std::vector<std::vector<int>> a(idx(lc.left_count)), a2(idx(lc.left_count));
  std::vector<std::vector<int>> b(idx(lc.right_count)), b2(idx(lc.right_count));
  for (int i = 0; i < lc.left_count; ++i) {
    for (int l = 0; l < l1; ++l) {
      a[idx(i)].push_back(bld.vertex(VertexRole::kLabelA));
      a2[idx(i)].push_back(bld.vertex(VertexRole::kLabelAPrime));
      layout.left_label_edge[idx(i * l1 + l)] = bld.edge(a[idx(i)].back(), a2[idx(i)].back(), Cost::of(*lc.left_cost));
    }
  }
  for (int j = 0; j < lc.right_count; ++j) {
    for (int l = 0; l < l2; ++l) {
      b[idx(j)].push_back(bld.vertex(VertexRole::kLabelB));
      b2[idx(j)].push_back(bld.vertex(VertexRole::kLabelBPrime));
      layout.right_label_edge[idx(j * l2 + l)] = bld.edge(b[idx(j)].back(), b2[idx(j)].back(), Cost::of(*lc.right_cost));
    }
    for (int l = 0; l + 1 < l2; ++l) bld.edge(b2[idx(j)][idx(l)], b[idx(j)][idx(l + 1)], inf);
  }

  const std::size_t m = lc.arcs.size();
  std::vector<std::vector<int>> q_path(m), separators(m);
  std::vector<int> source(m), sink(m);
  for (std::size_t e = 0; e < m; ++e) {
    const Arc& arc = lc.arcs[e];
    const int i = arc.left;
    const int j = arc.right;
    std::vector<std::vector<int>> blocks(idx(l2));
    for (int l = 0; l < l1; ++l) blocks[idx(arc.projection[idx(l)])].push_back(l);

    auto& seq = q_path[e];
    int junction = -1;  // set while the last vertex of seq is a junction separator
    for (int p = 0; p < l2; ++p) {
      if (p > 0) {
        if (junction < 0) {
          junction = bld.vertex(VertexRole::kSeparator);
          separators[e].push_back(junction);
          if (!seq.empty()) bld.edge(seq.back(), junction, inf);
          seq.push_back(junction);
        }
        bld.edge(junction, b2[idx(j)][idx(p - 1)], inf);
        bld.edge(junction, b[idx(j)][idx(p)], inf);
      }
      for (int l : blocks[idx(p)]) {
        if (!seq.empty() && junction < 0) {
          const int x = bld.vertex(VertexRole::kSeparator);  // inside a block: no cross links
          separators[e].push_back(x);
          bld.edge(seq.back(), x, inf);
          seq.push_back(x);
        }
        if (!seq.empty()) bld.edge(seq.back(), a[idx(i)][idx(l)], inf);
        seq.push_back(a[idx(i)][idx(l)]);
        seq.push_back(a2[idx(i)][idx(l)]);
        junction = -1;
      }
    }
    source[e] = bld.vertex(VertexRole::kSource);
    sink[e] = bld.vertex(VertexRole::kSink);
    bld.edge(source[e], seq.front(), inf);
    bld.edge(source[e], b[idx(j)].front(), inf);
    bld.edge(sink[e], seq.back(), inf);
    bld.edge(sink[e], b2[idx(j)].back(), inf);
  }

  // Core of a demand: its Q path (all of A(u_i) and its separators), P_j
  // and its two terminals. Z is the neighbourhood of the core in the padded
  // graph, found as a fixpoint since padding of one demand can touch the
  // core of another.
  std::vector<std::set<int>> core(m);
  for (std::size_t e = 0; e < m; ++e) {
    const Arc& arc = lc.arcs[e];
    core[e].insert(a[idx(arc.left)].begin(), a[idx(arc.left)].end());
    core[e].insert(a2[idx(arc.left)].begin(), a2[idx(arc.left)].end());
    core[e].insert(separators[e].begin(), separators[e].end());
    core[e].insert(b[idx(arc.right)].begin(), b[idx(arc.right)].end());
    core[e].insert(b2[idx(arc.right)].begin(), b2[idx(arc.right)].end());
    core[e].insert(source[e]);
    core[e].insert(sink[e]);
  }
  std::vector<std::set<int>> adj(idx(bld.net.vertex_count()));
  auto link = [&](int u, int v) {
    adj[idx(u)].insert(v);
    adj[idx(v)].insert(u);
  };
  for (const Edge& ed : bld.net.edges) link(ed.u, ed.v);

  std::vector<std::vector<int>> z(m);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t e = 0; e < m; ++e) {
      std::set<int> nb;
      for (int v : core[e]) {
        for (int w : adj[idx(v)]) {
          if (!core[e].count(w)) nb.insert(w);
        }
      }
      if (nb.size() == z[e].size()) continue;
      z[e].assign(nb.begin(), nb.end());
      changed = true;
      for (int v : z[e]) {
        if (bld.unique_edge(source[e], v, inf)) link(source[e], v);
        if (bld.unique_edge(sink[e], v, inf)) link(sink[e], v);
      }
    }
  }
  std::size_t zmax = 0;
  for (const auto& set : z) zmax = std::max(zmax, set.size());
  bld.net.k = static_cast<int>(zmax) + 1;

  for (std::size_t e = 0; e < m; ++e) {
    DemandLayout dl;
    dl.arc = static_cast<int>(e);
    for (std::size_t c = z[e].size(); c < zmax; ++c) {
      const int s = bld.vertex(VertexRole::kAuxS);
      bld.edge(source[e], s, inf);
      bld.edge(sink[e], s, inf);
      dl.padding["S"].push_back(s);
    }
    dl.padding["Z"] = z[e];
    dl.padding["X"] = separators[e];
    std::vector<int> p;
    for (int l = 0; l < l2; ++l) {
      p.push_back(b[idx(lc.arcs[e].right)][idx(l)]);
      p.push_back(b2[idx(lc.arcs[e].right)][idx(l)]);
    }
    dl.padding["P"] = p;
    dl.canonical_path.push_back(source[e]);
    dl.canonical_path.insert(dl.canonical_path.end(), q_path[e].begin(), q_path[e].end());
    dl.canonical_path.push_back(sink[e]);
    layout.demand_of_arc[e] = static_cast<int>(bld.net.demands.size());
    bld.net.demands.push_back(Demand{source[e], sink[e], bld.net.k});
    layout.demands.push_back(std::move(dl));
  }
  return GadgetResult{std::move(bld.net), std::move(layout)};
}

GadgetResult build_gadget(const LabelCoverInstance& lc, ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kRootedDirected: return to_directed_rooted(lc);
    case ProblemKind::kRootedUndirected: return to_undirected_rooted(lc);
    case ProblemKind::kVcSndp: return to_vc_sndp(lc);
    case ProblemKind::kKRouteCut: return to_k_route_cut(lc);
  }
  throw std::invalid_argument("unknown problem kind");
}

MultiLabeling solution_to_labeling(const GadgetLayout& layout, const std::vector<int>& edges) {
  std::map<int, std::pair<int, int>> owner;  // edge -> (global vertex, label)
  for (int u = 0; u < layout.left_count; ++u)
    for (int l = 0; l < layout.left_labels; ++l) owner[layout.label_edge(u, l)] = {u, l};
  for (int w = 0; w < layout.right_count; ++w)
    for (int l = 0; l < layout.right_labels; ++l) owner[layout.label_edge(layout.left_count + w, l)] = {layout.left_count + w, l};
  MultiLabeling m = MultiLabeling::empty(layout.left_count, layout.right_count);
  for (int e : edges) {
    auto it = owner.find(e);
    if (it == owner.end()) throw DomainError("edge " + std::to_string(e) + " is not a label edge");
    const auto [v, l] = it->second;
    auto& set = v < layout.left_count ? m.left[idx(v)] : m.right[idx(v - layout.left_count)];
    set.push_back(l);
  }
  for (auto& s : m.left) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  for (auto& s : m.right) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return m;
}

std::vector<int> labeling_to_solution(const GadgetLayout& layout, const MultiLabeling& m) {
  std::vector<int> out;
  for (std::size_t u = 0; u < m.left.size(); ++u)
    for (int l : m.left[u]) out.push_back(layout.label_edge(static_cast<int>(u), l));
  for (std::size_t w = 0; w < m.right.size(); ++w)
    for (int l : m.right[w]) out.push_back(layout.label_edge(layout.left_count + static_cast<int>(w), l));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_coloring(const LabelCoverInstance& source, const StrongColoring& coloring) {
  if (coloring.color_of.size() != source.arcs.size()) {
    throw PreconditionError("coloring does not match the source instance");
  }
  const auto classes = coloring.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (!is_induced_matching(source, classes[c])) {
      throw PreconditionError("color class " + std::to_string(c) + " is not an induced matching");
    }
  }
}

std::vector<std::vector<int>> demand_classes(const GadgetLayout& layout, const StrongColoring& coloring) {
  std::vector<std::vector<int>> out;
  for (const auto& cls : coloring.classes()) {
    std::vector<int> demands;
    for (int arc : cls) demands.push_back(layout.demand_of_arc[idx(arc)]);
    out.push_back(std::move(demands));
  }
  return out;
}

}  // namespace

MergedInstance merge_terminals_directed(const GadgetResult& gadget, const LabelCoverInstance& source,
                                        const StrongColoring& coloring) {
  const NetworkInstance& base = gadget.network;
  if (base.kind != ProblemKind::kRootedDirected) throw PreconditionError("terminal merging needs a rooted directed gadget");
  check_coloring(source, coloring);
  MergedInstance out;
  out.coloring = coloring;
  out.classes = demand_classes(gadget.layout, coloring);
  const int r = *base.root;

  std::size_t largest = 0;
  for (const auto& cls : out.classes) largest = std::max(largest, cls.size());
  out.k_new = base.k * static_cast<int>(largest);

  // Terminal vertex -> merged terminal (the first terminal of its class).
  std::map<int, int> merged_into;
  for (const auto& cls : out.classes) {
    const int head = base.demands[idx(cls.front())].t;
    out.merged_terminal_of.push_back(head);
    for (int d : cls) merged_into[base.demands[idx(d)].t] = head;
  }

  NetworkInstance net = base;
  net.demands.clear();
  net.edges.clear();
  std::vector<int> new_index(base.edges.size(), -1);
  std::map<std::pair<int, int>, int> into_terminal;  // (tail, merged terminal) -> new edge
  std::map<int, int> extra_root;                      // merged terminal -> copies owed
  for (std::size_t e = 0; e < base.edges.size(); ++e) {
    Edge edge = base.edges[e];
    auto it = merged_into.find(edge.v);
    if (it != merged_into.end()) {
      edge.v = it->second;
      auto [slot, fresh] = into_terminal.try_emplace({edge.u, edge.v}, static_cast<int>(net.edges.size()));
      if (!fresh) {
        // Parallel arcs from the root simply add up; any other tail is a
        // single vertex that can carry one path, so the extra copies move
        // to the root.
        if (edge.u == r) net.edges[idx(slot->second)].mult += edge.mult;
        else extra_root[edge.v] += edge.mult;
        new_index[e] = slot->second;
        continue;
      }
      if (edge.u != r && edge.mult > 1) {
        extra_root[edge.v] += edge.mult - 1;
        edge.mult = 1;
      }
    }
    new_index[e] = static_cast<int>(net.edges.size());
    net.edges.push_back(edge);
  }
  for (const auto& [old_t, head] : merged_into) {
    if (old_t != head) net.roles[idx(old_t)] = VertexRole::kPlain;
  }
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    const int head = out.merged_terminal_of[c];
    const int owed = extra_root[head] + out.k_new - base.k * static_cast<int>(out.classes[c].size());
    if (owed > 0) {
      auto [slot, fresh] = into_terminal.try_emplace({r, head}, static_cast<int>(net.edges.size()));
      if (fresh) net.edges.push_back(Edge{r, head, Cost{}, owed});
      else net.edges[idx(slot->second)].mult += owed;
    }
    net.demands.push_back(Demand{r, head, out.k_new});
  }
  net.k = out.k_new;

  GadgetLayout layout = gadget.layout;
  for (auto& e : layout.left_label_edge) e = new_index[idx(e)];
  for (auto& e : layout.right_label_edge) e = new_index[idx(e)];
  layout.demands.clear();
  const auto arc_classes = coloring.classes();
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    DemandLayout dl;
    dl.arc = gadget.layout.demands[idx(out.classes[c].front())].arc;
    for (int d : out.classes[c]) {
      for (const auto& [name, set] : gadget.layout.demands[idx(d)].padding) {
        auto& dst = dl.padding[name];
        dst.insert(dst.end(), set.begin(), set.end());
      }
    }
    dl.canonical_path = gadget.layout.demands[idx(out.classes[c].front())].canonical_path;
    dl.canonical_path.back() = out.merged_terminal_of[c];
    layout.demands.push_back(std::move(dl));
    for (int arc : arc_classes[c]) layout.demand_of_arc[idx(arc)] = static_cast<int>(c);
  }
  out.network = std::move(net);
  out.layout = std::move(layout);
  return out;
}

MergedInstance merge_demands(const GadgetResult& gadget, const LabelCoverInstance& source,
                             const StrongColoring& coloring) {
  if (gadget.network.kind == ProblemKind::kRootedDirected) {
    return merge_terminals_directed(gadget, source, coloring);
  }
  if (gadget.network.kind != ProblemKind::kKRouteCut) {
    throw PreconditionError("demand merging supports rootedDirected and kRouteCut gadgets");
  }
  check_coloring(source, coloring);
  MergedInstance out;
  out.coloring = coloring;
  out.classes = demand_classes(gadget.layout, coloring);
  out.k_new = gadget.network.k;
  out.network = gadget.network;
  out.layout = gadget.layout;

  auto elements = [&](int d) {
    std::set<int> s;
    const DemandLayout& dl = gadget.layout.demands[idx(d)];
    s.insert(dl.canonical_path.begin(), dl.canonical_path.end());
    for (const auto& [name, set] : dl.padding) s.insert(set.begin(), set.end());
    return s;
  };
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    const auto& cls = out.classes[c];
    for (std::size_t x = 0; x < cls.size(); ++x) {
      const auto ex = elements(cls[x]);
      for (std::size_t y = x + 1; y < cls.size(); ++y) {
        for (int v : elements(cls[y])) {
          if (ex.count(v)) {
            throw PreconditionError("class " + std::to_string(c) + ": demands " + std::to_string(cls[x]) +
                                    " and " + std::to_string(cls[y]) + " share vertex " + std::to_string(v));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace lcconn
