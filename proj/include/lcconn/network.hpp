#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcconn/rational.hpp"

namespace lcconn {

enum class ProblemKind { kRootedDirected, kRootedUndirected, kVcSndp, kKRouteCut };

std::string to_string(ProblemKind kind);
ProblemKind parse_problem_kind(const std::string& text);  // throws std::invalid_argument
bool is_design_problem(ProblemKind kind);

// Edge cost: zero, a positive rational, or the reserved infinite token.
struct Cost {
  bool infinite = false;
  Rational value{0};

  static Cost inf() { return Cost{true, Rational(0)}; }
  static Cost of(Rational r) { return Cost{false, r}; }
  bool is_zero() const { return !infinite && value == Rational(0); }
  bool is_finite_positive() const { return !infinite && value > Rational(0); }

  friend bool operator==(const Cost&, const Cost&) = default;
};

std::string format_cost(const Cost& c);
Cost parse_cost(const std::string& text);  // "inf", "0", "n/d"

enum class VertexRole {
  kPlain,
  kRoot,
  kTerminal,
  kSource,
  kSink,
  kLeft,         // u_i
  kRight,        // w_j
  kLabelA,       // a in A_i
  kLabelAPrime,  // a' (k-route cut)
  kLabelB,       // b in B_j
  kLabelBPrime,  // b' (k-route cut)
  kClique,       // x in X_{i,j}
  kSeparator,    // separator on a k-route Q path
  kAuxQ,
  kAuxS,
};

std::string to_string(VertexRole role);
VertexRole parse_vertex_role(const std::string& text);

struct Edge {
  int u = 0;
  int v = 0;
  Cost cost;
  int mult = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Demand {
  int s = 0;
  int t = 0;
  int req = 0;

  friend bool operator==(const Demand&, const Demand&) = default;
};

// Directed or undirected multigraph with requirements. Rooted kinds keep
// `root` set and one demand (root, terminal, k) per terminal.
struct NetworkInstance {
  bool directed = false;
  ProblemKind kind = ProblemKind::kRootedDirected;
  int k = 1;
  std::vector<VertexRole> roles;
  std::vector<Edge> edges;
  std::optional<int> root;
  std::vector<Demand> demands;

  int vertex_count() const { return static_cast<int>(roles.size()); }
  int add_vertex(VertexRole role) {
    roles.push_back(role);
    return static_cast<int>(roles.size()) - 1;
  }
  int add_edge(int u, int v, Cost cost, int mult = 1) {
    edges.push_back(Edge{u, v, cost, mult});
    return static_cast<int>(edges.size()) - 1;
  }
  std::vector<int> terminals() const;

  friend bool operator==(const NetworkInstance&, const NetworkInstance&) = default;
};

// Empty when the instance is well formed: indices in range, k >= 1,
// multiplicities >= 1, infinite costs only in cut instances, rooted kinds
// have a root and demands from it.
std::vector<std::string> validate(const NetworkInstance& net);
void require_valid(const NetworkInstance& net);

// Indices of edges with positive finite cost, in edge order.
std::vector<int> priced_edges(const NetworkInstance& net);

// `network v1` text format.
NetworkInstance read_network(std::istream& in);
NetworkInstance read_network_file(const std::string& path);
void write_network(std::ostream& out, const NetworkInstance& net);
std::string to_text(const NetworkInstance& net);

// Where each network element came from in the label-cover instance.
struct DemandLayout {
  int arc = -1;                                    // source label-cover arc
  std::map<std::string, std::vector<int>> padding;  // "Z", "Y", "Q", "S", "X", ...
  std::vector<int> canonical_path;

  friend bool operator==(const DemandLayout&, const DemandLayout&) = default;
};

struct GadgetLayout {
  int left_count = 0;
  int right_count = 0;
  int left_labels = 0;
  int right_labels = 0;
  std::vector<int> left_label_edge;   // index u * |L1| + a
  std::vector<int> right_label_edge;  // index w * |L2| + b
  std::vector<int> demand_of_arc;     // arc -> index into NetworkInstance::demands
  std::vector<DemandLayout> demands;  // parallel to NetworkInstance::demands

  int label_edge(int global_vertex, int label) const;

  friend bool operator==(const GadgetLayout&, const GadgetLayout&) = default;
};

// Layout lines: `labeledge <vertex> <label> <edge>` with U numbered first
// and W offset by |U|; `demandarc <u> <w> <demand>`; plus `layout`, `shape`,
// `padding` and `path` lines for the rest.
void write_layout(std::ostream& out, const GadgetLayout& layout,
                  const std::vector<std::pair<int, int>>& arc_endpoints);
GadgetLayout read_layout(std::istream& in);

}  // namespace lcconn
