#include "lcconn/flow.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "lcconn/errors.hpp"

namespace lcconn {
namespace {

// Dinic's algorithm on an explicit arc list.
class Dinic {
 public:
  explicit Dinic(int n) : head_(static_cast<std::size_t>(n), -1), level_(static_cast<std::size_t>(n)), it_(static_cast<std::size_t>(n)) {}

  int add(int from, int to, int cap) {
    const int id = static_cast<int>(to_.size());
    push(from, to, cap);
    push(to, from, 0);
    return id;
  }

  int run(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit && bfs(s, t)) {
      std::copy(head_.begin(), head_.end(), it_.begin());
      while (flow < limit) {
        const int pushed = dfs(s, t, limit - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  int flow_on(int arc) const { return cap_[static_cast<std::size_t>(arc ^ 1)]; }
  int to(int arc) const { return to_[static_cast<std::size_t>(arc)]; }
  int first(int v) const { return head_[static_cast<std::size_t>(v)]; }
  int next(int arc) const { return next_[static_cast<std::size_t>(arc)]; }
  int residual(int arc) const { return cap_[static_cast<std::size_t>(arc)]; }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int a = first(v); a != -1; a = next(a)) {
        if (residual(a) > 0 && !seen[static_cast<std::size_t>(to(a))]) {
          seen[static_cast<std::size_t>(to(a))] = 1;
          stack.push_back(to(a));
        }
      }
    }
    return seen;
  }

 private:
  void push(int from, int to, int cap) {
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[static_cast<std::size_t>(from)]);
    head_[static_cast<std::size_t>(from)] = static_cast<int>(to_.size()) - 1;
  }

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int a = head_[static_cast<std::size_t>(v)]; a != -1; a = next_[static_cast<std::size_t>(a)]) {
        const int w = to_[static_cast<std::size_t>(a)];
        if (cap_[static_cast<std::size_t>(a)] > 0 && level_[static_cast<std::size_t>(w)] < 0) {
          level_[static_cast<std::size_t>(w)] = level_[static_cast<std::size_t>(v)] + 1;
          q.push(w);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  int dfs(int v, int t, int want) {
    if (v == t) return want;
    for (int& a = it_[static_cast<std::size_t>(v)]; a != -1; a = next_[static_cast<std::size_t>(a)]) {
      const int w = to_[static_cast<std::size_t>(a)];
      const int c = cap_[static_cast<std::size_t>(a)];
      if (c <= 0 || level_[static_cast<std::size_t>(w)] != level_[static_cast<std::size_t>(v)] + 1) continue;
      const int got = dfs(w, t, std::min(want, c));
      if (got > 0) {
        cap_[static_cast<std::size_t>(a)] -= got;
        cap_[static_cast<std::size_t>(a ^ 1)] += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<int> head_, to_, cap_, next_, level_, it_;
};

constexpr int kInf = INT_MAX / 4;

int in_node(int v) { return 2 * v; }
int out_node(int v) { return 2 * v + 1; }

}  // namespace

FlowCertificate opcount(const NetworkInstance& net, int s, int t, const FlowOptions& options,
                        const std::vector<char>* present) {
  if (s == t) throw PreconditionError("opcount needs distinct endpoints");
  const int n = net.vertex_count();
  if (s < 0 || s >= n || t < 0 || t >= n) throw DomainError("opcount endpoint out of range");

  FlowCertificate cert;
  cert.s = s;
  cert.t = t;
  Dinic g(2 * n);
  std::vector<int> split_arc(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    split_arc[static_cast<std::size_t>(v)] = g.add(in_node(v), out_node(v), (v == s || v == t) ? kInf : 1);
  }
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    if (present && !(*present)[e]) continue;
    const Edge& edge = net.edges[e];
    const bool st = (edge.u == s && edge.v == t) || (!net.directed && edge.u == t && edge.v == s);
    if (st) cert.direct_multiplicity += edge.mult;
    // Only direct s-t edges can carry more than one path; every other edge
    // is bounded by a unit vertex, so it gets unbounded capacity and the
    // minimum cut consists of vertices and direct edges only.
    auto arc = [&](int from, int to) {
      if (to == s || from == t || from == to) return;
      g.add(out_node(from), in_node(to), (from == s && to == t) ? edge.mult : kInf);
    };
    arc(edge.u, edge.v);
    if (!net.directed) arc(edge.v, edge.u);
  }
  cert.path_count = g.run(out_node(s), in_node(t), options.limit);

  if (options.witnesses) {
    // Walk unit flows from s; each internal vertex carries at most one unit,
    // so every walk is a simple path ending at t.
    std::vector<int> used(static_cast<std::size_t>(4 * (net.edges.size() + static_cast<std::size_t>(n)) + 8), 0);
    for (int p = 0; p < cert.path_count; ++p) {
      std::vector<int> path{s};
      int node = out_node(s);
      while (node != in_node(t)) {
        int chosen = -1;
        for (int a = g.first(node); a != -1; a = g.next(a)) {
          if ((a & 1) == 0 && g.flow_on(a) - used[static_cast<std::size_t>(a)] > 0) {
            chosen = a;
            break;
          }
        }
        if (chosen < 0) break;
        ++used[static_cast<std::size_t>(chosen)];
        const int v = g.to(chosen) / 2;
        path.push_back(v);
        node = (v == t) ? in_node(t) : out_node(v);
      }
      cert.witness_paths.push_back(std::move(path));
    }
  }

  if (options.cut && options.limit == INT_MAX) {
    cert.has_cut = true;
    const auto seen = g.reachable(out_node(s));
    for (int v = 0; v < n; ++v) {
      if (v == s || v == t) continue;
      if (seen[static_cast<std::size_t>(in_node(v))] && !seen[static_cast<std::size_t>(out_node(v))]) {
        cert.cut_vertices.push_back(v);
      }
    }
  }
  return cert;
}

bool verify_certificate(const NetworkInstance& net, const FlowCertificate& cert, const std::vector<char>* present) {
  // Remaining multiplicity per ordered vertex pair.
  std::multiset<std::pair<int, int>> avail;
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    if (present && !(*present)[e]) continue;
    const Edge& edge = net.edges[e];
    for (int m = 0; m < edge.mult; ++m) {
      avail.insert({edge.u, edge.v});
      if (!net.directed) avail.insert({edge.v, edge.u});
    }
  }
  if (static_cast<int>(cert.witness_paths.size()) != cert.path_count) return false;
  std::set<int> interior;
  for (const auto& path : cert.witness_paths) {
    if (path.size() < 2 || path.front() != cert.s || path.back() != cert.t) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      auto it = avail.find({path[i], path[i + 1]});
      if (it == avail.end()) return false;
      // Consume one copy (both orientations for undirected edges).
      avail.erase(it);
      if (!net.directed) {
        auto back = avail.find({path[i + 1], path[i]});
        if (back != avail.end()) avail.erase(back);
      }
      if (i > 0 && !interior.insert(path[i]).second) return false;
    }
  }
  if (!cert.has_cut) return true;
  if (static_cast<int>(cert.cut_vertices.size()) + cert.direct_multiplicity != cert.path_count) return false;
  // With the cut removed, t must be unreachable except over a direct edge.
  std::vector<char> blocked(static_cast<std::size_t>(net.vertex_count()), 0);
  for (int v : cert.cut_vertices) blocked[static_cast<std::size_t>(v)] = 1;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(net.vertex_count()));
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    if (present && !(*present)[e]) continue;
    const Edge& edge = net.edges[e];
    adj[static_cast<std::size_t>(edge.u)].push_back(edge.v);
    if (!net.directed) adj[static_cast<std::size_t>(edge.v)].push_back(edge.u);
  }
  std::vector<char> seen(static_cast<std::size_t>(net.vertex_count()), 0);
  std::vector<int> stack{cert.s};
  seen[static_cast<std::size_t>(cert.s)] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (w == cert.t) {
        if (v != cert.s) return false;
        continue;
      }
      if (blocked[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      stack.push_back(w);
    }
  }
  return true;
}

}  // namespace lcconn
