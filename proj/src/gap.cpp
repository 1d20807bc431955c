#include "lcconn/gap.hpp"

#include <chrono>

#include "lcconn/brute_force.hpp"
#include "lcconn/digest.hpp"
#include "lcconn/gadgets.hpp"
#include "lcconn/rng.hpp"

namespace lcconn {

LabelCoverInstance drop_isolated_vertices(const LabelCoverInstance& instance) {
  std::vector<int> left_map(static_cast<std::size_t>(instance.left_count), -1);
  std::vector<int> right_map(static_cast<std::size_t>(instance.right_count), -1);
  for (const Arc& a : instance.arcs) {
    left_map[static_cast<std::size_t>(a.left)] = 0;
    right_map[static_cast<std::size_t>(a.right)] = 0;
  }
  LabelCoverInstance out = instance;
  out.left_count = 0;
  out.right_count = 0;
  for (int& v : left_map) if (v == 0) v = out.left_count++;
  for (int& v : right_map) if (v == 0) v = out.right_count++;
  for (Arc& a : out.arcs) {
    a.left = left_map[static_cast<std::size_t>(a.left)];
    a.right = right_map[static_cast<std::size_t>(a.right)];
  }
  if (instance.planted) {
    Labeling p;
    for (std::size_t u = 0; u < left_map.size(); ++u) if (left_map[u] >= 0) p.left.push_back(instance.planted->left[u]);
    for (std::size_t w = 0; w < right_map.size(); ++w) if (right_map[w] >= 0) p.right.push_back(instance.planted->right[w]);
    out.planted = p;
  }
  return out;
}

namespace {

GapSide run_side(const GapParams& params, const std::string& name, const Rational& slack, std::uint64_t seed) {
  GapSide side;
  side.name = name;
  side.seed = seed;
  InstanceProfile profile = params.profile;
  profile.planted_slack = slack;
  LabelCoverInstance lc = random_instance(profile, derive_seed(seed, "generate"));
  side.source_digest = digest_of(lc);

  if (params.use_pipeline) {
    PipelineParams pp = params.pipeline;
    pp.seed = derive_seed(seed, "pipeline");
    PipelineResult piped = run_pipeline(lc, pp);
    side.traces = std::move(piped.traces);
    lc = std::move(piped.instance);
  }
  lc = collapse_parallel_arcs(drop_isolated_vertices(lc));
  lc.allow_parallel_arcs = false;
  lc = max_to_min(lc, params.pipeline.epsilon);
  side.instance_digest = digest_of(lc);
  side.profile = degree_profile(lc);
  side.left_count = lc.left_count;
  side.right_count = lc.right_count;
  side.arcs = static_cast<int>(lc.arcs.size());
  side.total_cost = *lc.left_cost * lc.left_count + *lc.right_cost * lc.right_count;

  const MaxCoverResult best = brute_force_max(lc);
  side.max_fraction = best.fraction;
  side.max_covered = best.covered;
  side.label_cover_opt = brute_force_min_cost(lc).cost;

  const GadgetResult gadget = build_gadget(lc, params.kind);
  side.network_digest = digest_of(gadget.network);
  side.k = gadget.network.k;
  side.demands = static_cast<int>(gadget.network.demands.size());
  side.network_opt = brute_force_network_opt(gadget.network, params.cap);
  side.oracles_agree = side.network_opt.feasible && side.network_opt.cost == side.label_cover_opt;

  const MultiLabeling m = solution_to_labeling(gadget.layout, side.network_opt.edges);
  side.rounded_expectation = expected_covered(lc, m);
  side.rounded_covered = covered_count(lc, round_multi_labeling(lc, m));
  side.rounding_consistent = side.rounded_covered <= side.max_covered &&
                             Rational(side.rounded_covered) >= side.rounded_expectation;
  return side;
}

}  // namespace

GapReport gap_experiment(const GapParams& params, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  GapReport report;
  report.params = params;
  report.seed = seed;
  report.yes = run_side(params, "yes", params.yes_slack, derive_seed(seed, "yes"));
  report.no = run_side(params, "no", params.no_slack, derive_seed(seed, "no"));
  report.delta = report.yes.profile.max_degree;
  const Rational yes_opt = report.yes.network_opt.cost;
  if (yes_opt > Rational(0)) {
    report.ratio = report.no.network_opt.cost / yes_opt;
    if (report.no.total_cost > Rational(0)) {
      report.normalized_ratio = (report.no.network_opt.cost / report.no.total_cost) / (yes_opt / report.yes.total_cost);
    }
  }
  report.completeness_holds = yes_opt <= Rational(2) * report.yes.total_cost;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace lcconn
