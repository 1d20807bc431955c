#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "lcconn/brute_force.hpp"
#include "lcconn/check.hpp"
#include "lcconn/errors.hpp"
#include "lcconn/gadgets.hpp"
#include "lcconn/generator.hpp"
#include "lcconn/strong_coloring.hpp"

using namespace lcconn;

namespace {

const ProblemKind kKinds[] = {ProblemKind::kRootedDirected, ProblemKind::kRootedUndirected, ProblemKind::kVcSndp,
                              ProblemKind::kKRouteCut};

LabelCoverInstance costed(std::uint64_t seed, int u, int w, int l1, int l2, int deg) {
  InstanceProfile p;
  p.left_count = u;
  p.right_count = w;
  p.left_labels = l1;
  p.right_labels = l2;
  p.left_degree = deg;
  p.planted_slack = Rational(1, 2);
  auto lc = random_instance(p, seed);
  lc.left_cost = Rational(1 + static_cast<int>(seed % 2));
  lc.right_cost = Rational(1 + static_cast<int>(seed / 2 % 3));
  return lc;
}

}  // namespace

TEST(Gadgets, SingleArcOptimumIsTwo) {
  const auto lc = fixtures::k1();
  for (ProblemKind kind : kKinds) {
    const auto g = build_gadget(lc, kind);
    EXPECT_TRUE(validate(g.network).empty()) << to_string(kind);
    const auto opt = brute_force_network_opt(g.network);
    ASSERT_TRUE(opt.feasible) << to_string(kind);
    EXPECT_EQ(opt.cost, Rational(2)) << to_string(kind);
  }
  EXPECT_EQ(to_directed_rooted(lc).network.k, 1);
}

TEST(Gadgets, K3OptimumMatchesLabelCover) {
  const auto lc = fixtures::k3();
  const auto expect = brute_force_min_cost(lc).cost;
  ASSERT_EQ(expect, Rational(5));
  for (ProblemKind kind : kKinds) {
    EXPECT_EQ(brute_force_network_opt(build_gadget(lc, kind).network).cost, expect) << to_string(kind);
  }
}

TEST(Gadgets, OptimumEquivalenceOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto lc = costed(seed, 2 + static_cast<int>(seed % 2), 2, 2, 2, 2);
    const auto expect = brute_force_min_cost(lc);
    for (ProblemKind kind : kKinds) {
      const auto g = build_gadget(lc, kind);
      const auto opt = brute_force_network_opt(g.network);
      EXPECT_EQ(opt.cost, expect.cost) << "seed " << seed << ' ' << to_string(kind);
      // The optimum maps back to a feasible multi-labeling of the same cost.
      const auto m = solution_to_labeling(g.layout, opt.edges);
      EXPECT_TRUE(is_feasible(lc, m));
      EXPECT_EQ(multi_cost(lc, m), opt.cost);
    }
  }
}

TEST(Gadgets, EmptyAndFullSelections) {
  const auto lc = fixtures::k3();
  for (ProblemKind kind : kKinds) {
    const auto g = build_gadget(lc, kind);
    const auto all = priced_edges(g.network);
    if (is_design_problem(kind)) {
      EXPECT_TRUE(check_design_solution(g.network, all).feasible);
      EXPECT_FALSE(check_design_solution(g.network, {}).feasible);
    } else {
      EXPECT_TRUE(check_cut_solution(g.network, all).feasible);
      EXPECT_FALSE(check_cut_solution(g.network, {}).feasible);
    }
  }
}

TEST(Gadgets, CompletenessForFeasibleLabelings) {
  const auto lc = fixtures::k3();
  MultiLabeling m = MultiLabeling::empty(2, 2);
  m.left = {{0}, {0, 1}};
  m.right = {{0, 1}, {0}};
  ASSERT_TRUE(is_feasible(lc, m));
  for (ProblemKind kind : kKinds) {
    const auto g = build_gadget(lc, kind);
    const auto sol = labeling_to_solution(g.layout, m);
    const auto r = check_solution(g.network, sol);
    EXPECT_TRUE(r.feasible) << to_string(kind);
    EXPECT_EQ(r.cost, multi_cost(lc, m));
    EXPECT_EQ(solution_to_labeling(g.layout, sol), m);
  }
}

TEST(Gadgets, DirectedParameters) {
  const auto lc = costed(3, 3, 3, 2, 2, 2);
  const auto g = to_directed_rooted(lc);
  EXPECT_EQ(g.network.k, degree_profile(lc).max_degree);
  EXPECT_TRUE(g.network.directed);
  EXPECT_EQ(g.network.demands.size(), lc.arcs.size());
  // Every terminal's in-degree (with multiplicity) is exactly k.
  for (const Demand& d : g.network.demands) {
    int indeg = 0;
    for (const Edge& e : g.network.edges) if (e.v == d.t) indeg += e.mult;
    EXPECT_EQ(indeg, g.network.k);
  }
}

TEST(Gadgets, UndirectedTerminalDegreeIsK) {
  const auto lc = costed(5, 3, 3, 2, 2, 2);
  const auto g = to_undirected_rooted(lc);
  for (const Demand& d : g.network.demands) {
    int deg = 0;
    for (const Edge& e : g.network.edges) if (e.u == d.t || e.v == d.t) deg += e.mult;
    EXPECT_EQ(deg, g.network.k);
  }
}

TEST(Gadgets, SndpRequirementBound) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto lc = costed(seed, 3, 3, 3, 2, 2);
    const auto g = to_vc_sndp(lc);
    const int delta = degree_profile(lc).max_degree;
    EXPECT_LE(g.network.k, 2 * delta * lc.max_label_count() + 4 * delta * delta + 1);
  }
}

TEST(Gadgets, KRouteStructure) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto lc = costed(seed, 2, 2, 3, 2, 2);
    const auto g = to_k_route_cut(lc);
    std::size_t z = 0;
    for (const auto& dl : g.layout.demands) z = std::max(z, dl.padding.at("Z").size());
    EXPECT_EQ(g.network.k, static_cast<int>(z) + 1);
    for (std::size_t d = 0; d < g.network.demands.size(); ++d) {
      const Demand& dem = g.network.demands[d];
      const int intact = opcount(g.network, dem.s, dem.t).path_count;
      EXPECT_GE(intact, g.network.k);
      EXPECT_LE(intact, g.network.k + 1);
      // Deleting Z and S leaves exactly the two core routes.
      std::vector<char> present(g.network.edges.size(), 1);
      const auto& pad = g.layout.demands[d].padding;
      std::set<int> gone;
      for (const char* name : {"Z", "S"}) {
        auto it = pad.find(name);
        if (it != pad.end()) gone.insert(it->second.begin(), it->second.end());
      }
      for (std::size_t e = 0; e < present.size(); ++e)
        if (gone.count(g.network.edges[e].u) || gone.count(g.network.edges[e].v)) present[e] = 0;
      EXPECT_EQ(opcount(g.network, dem.s, dem.t, {}, &present).path_count, 2);
    }
  }
}

TEST(Gadgets, RejectsUncostedOrParallel) {
  auto lc = fixtures::k3();
  lc.left_cost.reset();
  EXPECT_THROW(to_vc_sndp(lc), ConfigurationError);
  auto par = fixtures::k1();
  par.allow_parallel_arcs = true;
  par.arcs.push_back(par.arcs[0]);
  EXPECT_THROW(to_directed_rooted(par), PreconditionError);
}

TEST(Gadgets, NonLabelEdgeRejected) {
  const auto g = to_directed_rooted(fixtures::k1());
  int zero = -1;
  for (std::size_t e = 0; e < g.network.edges.size(); ++e)
    if (g.network.edges[e].cost.is_zero()) zero = static_cast<int>(e);
  EXPECT_THROW(solution_to_labeling(g.layout, {zero}), DomainError);
}

TEST(Gadgets, LayoutRoundTrip) {
  const auto lc = fixtures::k3();
  const auto g = to_k_route_cut(lc);
  std::vector<std::pair<int, int>> ends;
  for (const Arc& a : lc.arcs) ends.push_back({a.left, a.right});
  std::ostringstream out;
  write_layout(out, g.layout, ends);
  std::istringstream in(out.str());
  EXPECT_EQ(read_layout(in), g.layout);
}

TEST(Merge, DisjointArcsShareOneTerminal) {
  const auto lc = fixtures::two_k2();
  const auto g = to_directed_rooted(lc);
  const auto merged = merge_terminals_directed(g, lc, strong_edge_color(lc));
  EXPECT_EQ(merged.classes.size(), 1u);
  EXPECT_EQ(merged.k_new, 2 * g.network.k);
  EXPECT_EQ(merged.network.demands.size(), 1u);
  EXPECT_TRUE(validate(merged.network).empty());
  EXPECT_EQ(brute_force_network_opt(merged.network).cost, brute_force_min_cost(lc).cost);
}

TEST(Merge, CompleteBipartiteNeedsFourColors) {
  const auto lc = fixtures::k3();
  const auto g = to_directed_rooted(lc);
  const auto merged = merge_demands(g, lc, strong_edge_color(lc));
  EXPECT_EQ(merged.classes.size(), 4u);
  EXPECT_EQ(brute_force_network_opt(merged.network).cost, Rational(5));
}

TEST(Merge, OptimumPreservedOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto lc = costed(seed, 3, 3, 2, 2, 1 + static_cast<int>(seed % 2));
    const auto expect = brute_force_min_cost(lc).cost;
    const auto coloring = strong_edge_color(lc);
    const int delta = degree_profile(lc).max_degree;
    for (ProblemKind kind : {ProblemKind::kRootedDirected, ProblemKind::kKRouteCut}) {
      const auto merged = merge_demands(build_gadget(lc, kind), lc, coloring);
      EXPECT_LE(static_cast<int>(merged.classes.size()), 2 * delta * delta);
      EXPECT_EQ(brute_force_network_opt(merged.network).cost, expect) << seed << ' ' << to_string(kind);
    }
  }
}

TEST(Merge, RejectsNonMatchingClass) {
  const auto lc = fixtures::k3();
  StrongColoring bad;
  bad.color_of = {0, 0, 1, 2};
  bad.color_count = 3;
  EXPECT_THROW(merge_terminals_directed(to_directed_rooted(lc), lc, bad), PreconditionError);
  EXPECT_THROW(merge_demands(to_vc_sndp(lc), lc, strong_edge_color(lc)), PreconditionError);
}

TEST(Oracle, CapExceeded) {
  const auto lc = costed(1, 3, 3, 3, 3, 3);
  EXPECT_THROW(brute_force_network_opt(to_vc_sndp(lc).network, 10), CapExceededError);
}

TEST(Oracle, InfiniteRemovalRejected) {
  const auto g = to_k_route_cut(fixtures::k1());
  int inf = -1;
  for (std::size_t e = 0; e < g.network.edges.size(); ++e)
    if (g.network.edges[e].cost.infinite) inf = static_cast<int>(e);
  EXPECT_THROW(check_cut_solution(g.network, {inf}), PreconditionError);
}

TEST(Oracle, FlowCertificateBlock) {
  const auto g = to_vc_sndp(fixtures::k1());
  FlowOptions opt;
  opt.witnesses = opt.cut = true;
  const Demand& d = g.network.demands[0];
  std::ostringstream out;
  write_flow_certificate(out, opcount(g.network, d.s, d.t, opt));
  EXPECT_EQ(out.str().rfind("flowcert ", 0), 0u);
}
