#pragma once

#include <climits>
#include <vector>

#include "lcconn/network.hpp"

namespace lcconn {

struct FlowCertificate {
  int s = 0;
  int t = 0;
  int path_count = 0;
  std::vector<std::vector<int>> witness_paths;  // vertex sequences s ... t
  bool has_cut = false;
  std::vector<int> cut_vertices;                // minimum separating vertex set
  int direct_multiplicity = 0;                  // s-t edges; no vertex cut removes them
};

struct FlowOptions {
  int limit = INT_MAX;  // stop once this many paths are found
  bool witnesses = false;
  bool cut = false;  // only meaningful without a limit
};

// Number of openly disjoint s-t paths in the subgraph of edges with
// present[e] != 0 (all edges when `present` is null). Internal vertices
// have unit capacity, edges capacity equal to their multiplicity; an s-t
// edge of multiplicity m contributes m paths. Throws PreconditionError when
// s == t.
FlowCertificate opcount(const NetworkInstance& net, int s, int t, const FlowOptions& options = {},
                        const std::vector<char>* present = nullptr);

// Independent check of a certificate: paths are real and openly disjoint,
// and (when present) the cut separates s from t apart from direct edges
// and has size path_count - direct_multiplicity.
bool verify_certificate(const NetworkInstance& net, const FlowCertificate& cert,
                        const std::vector<char>* present = nullptr);

}  // namespace lcconn
