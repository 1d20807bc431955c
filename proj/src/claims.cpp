#include "lcconn/claims.hpp"

#include <algorithm>

#include "lcconn/check.hpp"
#include "lcconn/flow.hpp"

namespace lcconn {

namespace {

Claim make(std::string name, bool pass, std::string measured, std::string formula = "") {
  return Claim{std::move(name), pass, std::move(measured), std::move(formula)};
}

std::string str(long long v) { return std::to_string(v); }

}  // namespace

std::vector<Claim> network_claims(const NetworkInstance& net) {
  std::vector<Claim> out;
  const auto problems = validate(net);
  out.push_back(make("well-formed", problems.empty(), problems.empty() ? "ok" : problems.front()));
  if (!problems.empty()) return out;

  bool menger = true;
  int uniform = 0;
  for (const Demand& d : net.demands) {
    FlowOptions opt;
    opt.witnesses = opt.cut = true;
    menger = menger && verify_certificate(net, opcount(net, d.s, d.t, opt));
    uniform += d.req == net.k;
  }
  out.push_back(make("menger-duality", menger, str(static_cast<long long>(net.demands.size())) + " demands",
                     "pathCount = |cut| + direct"));
  out.push_back(make("uniform-requirement", uniform == static_cast<int>(net.demands.size()),
                     str(uniform) + "/" + str(static_cast<long long>(net.demands.size())), "req = k"));

  if (net.kind == ProblemKind::kRootedDirected || net.kind == ProblemKind::kRootedUndirected) {
    int worst = -1;
    bool exact = true;
    for (const Demand& d : net.demands) {
      int deg = 0;
      for (const Edge& e : net.edges) {
        if (e.v == d.t || (!net.directed && e.u == d.t)) deg += e.mult;
      }
      exact = exact && deg == net.k;
      if (deg != net.k) worst = deg;
    }
    out.push_back(make(net.directed ? "terminal-indegree" : "terminal-degree", exact,
                       exact ? "all " + str(net.k) : "found " + str(worst), "deg(t) = k"));
  }

  const std::vector<int> all = priced_edges(net);
  if (is_design_problem(net.kind)) {
    out.push_back(make("full-selection-feasible", check_design_solution(net, all).feasible, str(static_cast<long long>(all.size())) + " edges"));
    out.push_back(make("empty-selection-infeasible", !check_design_solution(net, {}).feasible, "0 edges"));
  } else {
    const CheckResult intact = check_cut_solution(net, {});
    const int lo = intact.path_counts.empty() ? 0 : *std::min_element(intact.path_counts.begin(), intact.path_counts.end());
    const int hi = intact.path_counts.empty() ? 0 : *std::max_element(intact.path_counts.begin(), intact.path_counts.end());
    out.push_back(make("intact-connectivity", lo >= net.k && hi <= net.k + 1,
                       "min " + str(lo) + " max " + str(hi), "k <= opcount <= k+1"));
    out.push_back(make("remove-all-feasible", check_cut_solution(net, all).feasible, str(static_cast<long long>(all.size())) + " edges"));
  }
  return out;
}

std::vector<Claim> gadget_claims(const LabelCoverInstance& source, const GadgetResult& gadget) {
  std::vector<Claim> out;
  const NetworkInstance& net = gadget.network;
  const long long delta = degree_profile(source).max_degree;
  const long long max_l = source.max_label_count();
  const std::string k = str(net.k);
  out.push_back(make("demand-per-arc", net.demands.size() == source.arcs.size(),
                     str(static_cast<long long>(net.demands.size())), "|demands| = |E|"));
  switch (net.kind) {
    case ProblemKind::kRootedDirected:
      out.push_back(make("k-rule", net.k == std::max(delta, 1LL), "k=" + k + " Delta=" + str(delta), "k = Delta(G)"));
      break;
    case ProblemKind::kRootedUndirected: {
      const long long bound = 16 * (delta * delta * delta * max_l + delta * delta * delta * delta);
      out.push_back(make("k-bound", net.k <= std::max(bound, 1LL), "k=" + k + " bound=" + str(bound),
                         "k <= 16(Delta^3 maxL + Delta^4)"));
      break;
    }
    case ProblemKind::kVcSndp: {
      const long long bound = 2 * delta * max_l + 4 * delta * delta + 1;
      out.push_back(make("k-bound", net.k <= bound, "k=" + k + " bound=" + str(bound), "k <= 2 Delta maxL + 4 Delta^2 + 1"));
      break;
    }
    case ProblemKind::kKRouteCut: {
      std::size_t z = 0;
      for (const auto& d : gadget.layout.demands) {
        auto it = d.padding.find("Z");
        if (it != d.padding.end()) z = std::max(z, it->second.size());
      }
      out.push_back(make("k-rule", net.k == static_cast<int>(z) + 1, "k=" + k + " z=" + str(static_cast<long long>(z)), "k = z + 1"));
      break;
    }
  }
  return out;
}

Claim merge_claim(const LabelCoverInstance& source, const MergedInstance& merged) {
  const long long delta = degree_profile(source).max_degree;
  const long long count = static_cast<long long>(merged.classes.size());
  return make("merged-demand-bound", count <= 2 * delta * delta,
              "demands=" + str(count) + " bound=" + str(2 * delta * delta), "|D| <= 2 Delta^2");
}

bool all_pass(const std::vector<Claim>& claims) {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

}  // namespace lcconn
