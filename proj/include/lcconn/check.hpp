#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lcconn/flow.hpp"
#include "lcconn/network.hpp"
#include "lcconn/rational.hpp"

namespace lcconn {

inline constexpr int kDefaultNetworkCap = 24;

struct CheckResult {
  bool feasible = false;
  Rational cost;
  std::vector<int> path_counts;  // per demand, exact
};

// Subgraph = chosen edges plus every zero-cost edge; feasible iff each
// demand has at least `req` openly disjoint paths. Design kinds only.
CheckResult check_design_solution(const NetworkInstance& net, const std::vector<int>& chosen);

// Graph minus the removed edges; feasible iff every demand drops below
// `req`. Removing an infinite-cost edge is a PreconditionError.
CheckResult check_cut_solution(const NetworkInstance& net, const std::vector<int>& removed);

// Dispatches on the instance kind.
CheckResult check_solution(const NetworkInstance& net, const std::vector<int>& edges);

struct NetworkOptResult {
  bool feasible = false;   // false when no subset works at all
  std::vector<int> edges;  // sorted; lexicographically smallest optimum
  Rational cost;
  int variables = 0;
  std::int64_t nodes = 0;  // search nodes visited
};

// Exact optimum over subsets of the positive finite-cost edges. Zero-cost
// edges are always kept (design) or always removed (cut) and are not part
// of the returned set. Throws CapExceededError with more than `cap`
// variable edges.
NetworkOptResult brute_force_network_opt(const NetworkInstance& net, int cap = kDefaultNetworkCap);

// `flowcert` block: header, then one `path` line per witness and an
// optional `cut` line.
void write_flow_certificate(std::ostream& out, const FlowCertificate& cert);

}  // namespace lcconn
