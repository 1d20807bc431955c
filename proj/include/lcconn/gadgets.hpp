#pragma once

#include <vector>

#include "lcconn/label_cover.hpp"
#include "lcconn/network.hpp"
#include "lcconn/strong_coloring.hpp"

namespace lcconn {

struct GadgetResult {
  NetworkInstance network;
  GadgetLayout layout;
};

// All four builders need label costs (ConfigurationError otherwise) and an
// instance without parallel arcs (PreconditionError).

// r -> u_i -> A_i -> B_j -> w_j -> t_ij with costs on u_i -> a and b -> w_j,
// padding arcs u_i' -> t_ij, and root copies raising every terminal's
// indegree to k = Delta(G).
GadgetResult to_directed_rooted(const LabelCoverInstance& lc);

// Undirected base graph, per-arc cliques X_ij of size |Z_ij| + 1 and
// padding Z/Y/Q so that every terminal has degree exactly k.
GadgetResult to_undirected_rooted(const LabelCoverInstance& lc);

// Undirected base graph with source s_ij at u_i, sink t_ij at w_j and
// uniform requirement k = max |Y_ij u Z_ij| + 1.
GadgetResult to_vc_sndp(const LabelCoverInstance& lc);

// Label edges {a, a'} and {b, b'}, right paths P_j, per-arc paths Q_ij in
// preimage-block order with separator vertices, per-arc terminals s_ij and
// t_ij, and padding Z_ij u S_ij of size z; k = z + 1.
GadgetResult to_k_route_cut(const LabelCoverInstance& lc);

GadgetResult build_gadget(const LabelCoverInstance& lc, ProblemKind kind);

// Label ell goes to vertex v iff the label edge of (v, ell) is selected.
// Throws DomainError on an edge that is not a label edge.
MultiLabeling solution_to_labeling(const GadgetLayout& layout, const std::vector<int>& edges);
std::vector<int> labeling_to_solution(const GadgetLayout& layout, const MultiLabeling& m);

// Arcs at line-graph distance 1 or 2 from each arc (sharing an endpoint is
// distance 1).
std::vector<std::vector<int>> arcs_within_two(const LabelCoverInstance& lc);

struct MergedInstance {
  NetworkInstance network;
  GadgetLayout layout;
  StrongColoring coloring;
  std::vector<std::vector<int>> classes;  // demand indices of the unmerged instance, per color
  std::vector<int> merged_terminal_of;    // per color (rooted directed)
  int k_new = 0;
};

// One terminal T_C per color class with requirement k|T_C|, then root
// copies so every merged terminal needs k_new = k * max|T_C|. A padding
// source shared by two terminals of one class is kept once and the lost
// copy becomes a root arc. Rejects classes that are not induced matchings.
MergedInstance merge_terminals_directed(const GadgetResult& gadget, const LabelCoverInstance& source,
                                        const StrongColoring& coloring);

// Rooted directed: as above. k-route cut: the graph is unchanged and the
// demands are grouped by class after checking that the element sets
// (canonical path, padding, terminals) of one class are pairwise disjoint;
// a shared vertex is reported in the PreconditionError.
MergedInstance merge_demands(const GadgetResult& gadget, const LabelCoverInstance& source,
                             const StrongColoring& coloring);

}  // namespace lcconn
