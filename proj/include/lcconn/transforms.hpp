#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcconn/label_cover.hpp"

namespace lcconn {

struct PassTrace {
  std::string pass;
  DegreeProfile input_profile;
  DegreeProfile output_profile;
  Rational arc_multiplier{1};  // |E_out| / |E_in|
  // Name/value pairs; formula-valued entries carry the formula in the name.
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t seed = 0;
  std::vector<int> provenance;  // output arc -> source arc
  std::vector<std::string> notes;
  bool skipped = false;

  void set(const std::string& name, const std::string& value) { parameters.emplace_back(name, value); }
};

// provenance of (second after first): output arc of `second` -> input arc of `first`.
std::vector<int> compose_provenance(const std::vector<int>& first, const std::vector<int>& second);

struct PipelineParams {
  Rational gamma{1, 2};
  Rational epsilon{0};
  std::optional<int> d;                 // unset: ceil(1/gamma)
  std::optional<Rational> trim;         // unset: 2 * gamma^-1 * ln(max label count)
  std::uint64_t seed = 0;

  int degree() const;
  void validate() const;
};

// `pipeline v1` configuration file.
PipelineParams read_pipeline_params(std::istream& in);
std::string to_text(const PipelineParams& params);

struct PassResult {
  LabelCoverInstance instance;
  PassTrace trace;
};

// Every right vertex w becomes deg(w) copies matched to the vertices of a
// d-regular expander H_w; each expander edge {i, j} yields the arcs
// (u_i, w(j)) and (u_j, w(i)), so every arc is copied exactly d times. When
// no expander fits (deg(w) < d, deg(w)*d odd, or no certified graph) a
// near-complete multigraph with the same row sums is used instead.
PassResult right_degree_reduce(const LabelCoverInstance& instance, int d, std::uint64_t seed,
                               double expander_c = 3.0);

// Splits each left vertex of a (d1, d2)-biregular instance into d1/d2 copies.
PassResult regularize(const LabelCoverInstance& instance);

// rho = gamma^-1 * ln(max{|L1|,|L2|}) / Delta; each arc kept independently
// with probability rho. rho > 1 returns the input unchanged (trace.skipped).
double sparsify_rate(const LabelCoverInstance& instance, const Rational& gamma);
PassResult sparsify(const LabelCoverInstance& instance, const Rational& gamma, std::uint64_t seed);

double default_trim_threshold(const LabelCoverInstance& instance, const Rational& gamma);

struct TrimResult {
  PassResult result;
  std::vector<int> removed_left;
  std::vector<int> removed_right;
  double removed_fraction = 0.0;      // removed vertices / (|U| + |W|)
  double removed_arc_fraction = 0.0;  // removed arcs / input arcs
};

// Removes every vertex whose degree exceeds `threshold` together with its
// arcs, in one sweep. Vertices stay in the index space as isolated vertices
// so labelings remain comparable across the pass.
TrimResult trim_large_degree(const LabelCoverInstance& instance, double threshold);

// Largest removed fraction accepted before sparsification is resampled:
// 2^(1 - gamma^-1 / 3).
double trim_resample_bound(const Rational& gamma);

struct PipelineResult {
  LabelCoverInstance instance;
  std::vector<PassTrace> traces;
  int sparsify_rounds = 0;
};

// right_degree_reduce(d) -> regularize -> (sparsify -> trim) with up to
// ceil(log2 n) + 1 sparsification rounds. Throws RetriesExhaustedError when
// every round removes too much.
PipelineResult run_pipeline(const LabelCoverInstance& instance, const PipelineParams& params);

// Attaches c1 = |W|, c2 = |U| (so c1|U| = c2|W|). Requires
// epsilon_budget * |E| <= min(|U|, |W|).
LabelCoverInstance max_to_min(const LabelCoverInstance& instance, const Rational& epsilon_budget);

// Singleton multi-labeling of `labeling`, plus pi(f1(u)) added to f2(w) for
// every uncovered arc (u, w). Always feasible.
MultiLabeling repair_labeling(const LabelCoverInstance& instance, const Labeling& labeling);

// Expected covered-arc count when every vertex picks uniformly from its set.
// Empty sets count as {0}.
Rational expected_covered(const LabelCoverInstance& instance, const MultiLabeling& m);

// Conditional-expectation rounding: left vertices then right vertices, each
// fixed to the label maximizing the conditional expectation (smallest label
// on ties). The result covers at least expected_covered(instance, m) arcs.
Labeling round_multi_labeling(const LabelCoverInstance& instance, const MultiLabeling& m);

}  // namespace lcconn
