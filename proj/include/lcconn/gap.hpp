#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcconn/check.hpp"
#include "lcconn/generator.hpp"
#include "lcconn/network.hpp"
#include "lcconn/transforms.hpp"

namespace lcconn {

struct GapParams {
  InstanceProfile profile{2, 2, 2, 2, 2, Rational(0)};  // slack is overridden per side
  Rational yes_slack{0};
  Rational no_slack{1};
  PipelineParams pipeline;  // seed is derived per side
  bool use_pipeline = true;
  ProblemKind kind = ProblemKind::kRootedDirected;
  int cap = kDefaultNetworkCap;
};

struct GapSide {
  std::string name;  // "yes" / "no"
  std::uint64_t seed = 0;
  std::string source_digest;    // generated instance
  std::string instance_digest;  // after pipeline, compaction and costs
  std::string network_digest;
  std::vector<PassTrace> traces;
  DegreeProfile profile;
  int left_count = 0;
  int right_count = 0;
  int arcs = 0;
  Rational total_cost;      // C = c1|U| + c2|W|
  Rational max_fraction;    // best single labeling
  std::int64_t max_covered = 0;
  Rational label_cover_opt;  // min-cost multi-labeling
  NetworkOptResult network_opt;
  int k = 0;
  int demands = 0;
  bool oracles_agree = false;
  std::int64_t rounded_covered = 0;  // rounding of the network optimum
  Rational rounded_expectation;
  bool rounding_consistent = false;  // expectation <= rounded <= max_covered
};

struct GapReport {
  GapParams params;
  std::uint64_t seed = 0;
  GapSide yes;
  GapSide no;
  std::optional<Rational> ratio;  // noOPT / yesOPT when yesOPT > 0
  // (noOPT / noC) / (yesOPT / yesC): the sides may differ in size after the
  // pipeline, so this compares OPT in units of the trivial bound C.
  std::optional<Rational> normalized_ratio;
  bool completeness_holds = false;  // yesOPT <= 2C
  int delta = 0;                     // max degree of the yes gadget source
  double seconds = 0.0;
};

// Planted yes-instance and random no-instance from one seed, each run
// through the pipeline, compacted, costed, reduced to `kind` and solved
// exactly by both oracles.
GapReport gap_experiment(const GapParams& params, std::uint64_t seed);

// Removes vertices without arcs (the planted labeling follows).
LabelCoverInstance drop_isolated_vertices(const LabelCoverInstance& instance);

}  // namespace lcconn
