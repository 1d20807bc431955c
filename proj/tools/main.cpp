// lcconn: label-cover to vertex-connectivity reduction workbench.
#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lcconn/brute_force.hpp"
#include "lcconn/check.hpp"
#include "lcconn/claims.hpp"
#include "lcconn/digest.hpp"
#include "lcconn/errors.hpp"
#include "lcconn/gadgets.hpp"
#include "lcconn/gap.hpp"
#include "lcconn/generator.hpp"
#include "lcconn/label_cover_io.hpp"
#include "lcconn/report.hpp"
#include "lcconn/rng.hpp"
#include "lcconn/strong_coloring.hpp"
#include "lcconn/text_util.hpp"
#include "lcconn/transforms.hpp"

using namespace lcconn;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kCap = 3 };

struct Options {
  std::uint64_t seed = 0;
  std::string gamma = "1/2";
  std::string eps = "0";
  std::string d = "auto";
  std::string trim = "auto";
  int cap = -1;
  std::string out;
  std::string report;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes `text` to `path` ("" or "-" means stdout) and records its digest.
void emit(RunReport& report, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
  }
  report.output(path.empty() ? "-" : path, sha256_hex(text));
}

LabelCoverInstance load_lc(RunReport& report, const std::string& path) {
  const std::string text = slurp(path);
  report.input(path, sha256_hex(text));
  std::istringstream in(text);
  return read_label_cover(in);
}

NetworkInstance load_network(RunReport& report, const std::string& path) {
  const std::string text = slurp(path);
  report.input(path, sha256_hex(text));
  std::istringstream in(text);
  return read_network(in);
}

std::optional<int> parse_d(const std::string& text) {
  if (text == "auto") return std::nullopt;
  return text::to_int(text, 0);
}

PipelineParams pipeline_from(const Options& o) {
  PipelineParams p;
  p.gamma = parse_rational(o.gamma);
  p.epsilon = parse_rational(o.eps);
  p.d = parse_d(o.d);
  if (o.trim != "auto") p.trim = parse_rational(o.trim);
  p.seed = o.seed;
  p.validate();
  return p;
}

ProblemKind parse_kind(const std::string& text) {
  if (text == "sndp") return ProblemKind::kVcSndp;
  if (text == "kroute") return ProblemKind::kKRouteCut;
  return parse_problem_kind(text);
}

void add_claims(RunReport& report, const std::vector<Claim>& claims, bool print) {
  for (const Claim& c : claims) {
    report.check(c.name, c.pass, c.measured, c.formula);
    if (print) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  " << c.measured;
      if (!c.formula.empty()) std::cout << "  [" << c.formula << "]";
      std::cout << '\n';
    }
  }
}

// Gadgets need a simple graph; identical parallel arcs are merged (this
// leaves the min-cost optimum unchanged).
LabelCoverInstance simple_source(RunReport& report, const LabelCoverInstance& lc) {
  LabelCoverInstance out = collapse_parallel_arcs(lc);
  out.allow_parallel_arcs = false;
  report.set("collapsedParallelArcs", lc.arcs.size() - out.arcs.size());
  return out;
}

std::vector<std::pair<int, int>> endpoints(const LabelCoverInstance& lc) {
  std::vector<std::pair<int, int>> out;
  for (const Arc& a : lc.arcs) out.emplace_back(a.left, a.right);
  return out;
}

std::vector<int> read_solution(RunReport& report, const std::string& path) {
  const std::string text = slurp(path);
  report.input(path, sha256_hex(text));
  std::istringstream in(text);
  std::vector<int> edges;
  std::vector<std::string> tok;
  int line = 0;
  while (text::next_line(in, tok, line)) {
    for (const auto& t : tok) edges.push_back(text::to_int(t, line));
  }
  return edges;
}

void finish(RunReport& report, const Options& o, const Timer& timer) {
  report.stage("total", timer.seconds());
  if (!o.report.empty()) {
    std::ofstream out(o.report, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + o.report);
    out << report.text();
  }
}

// ---- commands ----

struct GenArgs {
  int left = 0, right = 0, degree = 0;
  std::vector<int> labels;
  std::vector<std::string> costs;
};

int cmd_gen(RunReport& report, const Options& o, const GenArgs& g) {
  InstanceProfile p;
  p.left_count = g.left;
  p.right_count = g.right;
  p.left_labels = g.labels.at(0);
  p.right_labels = g.labels.at(1);
  p.left_degree = g.degree;
  p.planted_slack = parse_rational(o.eps);
  report.seed("generate", o.seed);
  LabelCoverInstance lc = random_instance(p, o.seed);
  if (g.costs.size() == 2) {
    lc.left_cost = parse_rational(g.costs[0]);
    lc.right_cost = parse_rational(g.costs[1]);
  }
  emit(report, o.out, to_text(lc));
  report.set("arcs", lc.arcs.size());
  report.set("plantedFraction", to_json(coverage_fraction(lc, *lc.planted)));
  return kOk;
}

int cmd_transform(RunReport& report, const Options& o, const std::string& pass, const std::string& in,
                  const std::string& config) {
  LabelCoverInstance lc = load_lc(report, in);
  Options opts = o;
  PipelineParams params;
  if (!config.empty()) {
    const std::string text = slurp(config);
    report.input(config, sha256_hex(text));
    std::istringstream cin(text);
    params = read_pipeline_params(cin);
  } else {
    params = pipeline_from(opts);
  }
  report.seed(pass, params.seed);
  LabelCoverInstance result;
  if (pass == "rightdeg") {
    PassResult r = right_degree_reduce(lc, params.degree(), derive_seed(params.seed, "rightdeg"));
    report.trace(r.trace);
    report.check("biregular-output", r.instance.arcs.empty() || degree_profile(r.instance).biregular(),
                 to_json(r.trace.output_profile));
    result = std::move(r.instance);
  } else if (pass == "regularize") {
    PassResult r = regularize(lc);
    report.trace(r.trace);
    result = std::move(r.instance);
  } else if (pass == "sparsify") {
    const double rho = sparsify_rate(lc, params.gamma);
    PassResult r = sparsify(lc, params.gamma, derive_seed(params.seed, "sparsify"));
    report.trace(r.trace);
    report.set("rho", Json{{"formula", "gamma^-1 ln(maxL) / Delta"}, {"value", rho}});
    if (r.trace.skipped) std::cerr << "sparsify skipped: rho = " << rho << " > 1\n";
    result = std::move(r.instance);
  } else if (pass == "trim") {
    const double threshold = params.trim ? to_double(*params.trim) : default_trim_threshold(lc, params.gamma);
    TrimResult r = trim_large_degree(lc, threshold);
    report.trace(r.result.trace);
    report.set("removedFraction", r.removed_fraction);
    report.check("trimmed-degree", degree_profile(r.result.instance).max_degree <= threshold,
                 degree_profile(r.result.instance).max_degree, "Delta <= " + std::to_string(threshold));
    result = std::move(r.result.instance);
  } else if (pass == "pipeline") {
    PipelineResult r = run_pipeline(lc, params);
    for (const auto& t : r.traces) report.trace(t);
    report.set("sparsifyRounds", r.sparsify_rounds);
    report.set("params", to_text(params));
    result = std::move(r.instance);
    // The trim stage bounds the final degree by its threshold.
    const double bound = params.trim ? to_double(*params.trim) : 2.0 / to_double(params.gamma) * std::log(lc.max_label_count());
    const int delta = degree_profile(result).max_degree;
    report.check("pipeline-degree", delta <= bound, delta, "Delta(out) <= 2 gamma^-1 ln(maxL) = " + std::to_string(bound));
  } else {
    throw CLI::ValidationError("transform", "unknown pass '" + pass + "'");
  }
  emit(report, o.out, to_text(result));
  return report.all_checks_pass() ? kOk : kFail;
}

int cmd_costs(RunReport& report, const Options& o, const std::string& in) {
  const LabelCoverInstance lc = load_lc(report, in);
  const LabelCoverInstance out = max_to_min(lc, parse_rational(o.eps));
  report.set("c1", to_json(*out.left_cost));
  report.set("c2", to_json(*out.right_cost));
  emit(report, o.out, to_text(out));
  return kOk;
}

int cmd_reduce(RunReport& report, const Options& o, const std::string& kind_text, const std::string& in,
               const std::string& layout_path) {
  const ProblemKind kind = parse_kind(kind_text);
  const LabelCoverInstance lc = simple_source(report, load_lc(report, in));
  const GadgetResult g = build_gadget(lc, kind);
  report.layout(g.layout);
  report.set("kind", to_string(kind));
  report.set("k", g.network.k);
  report.set("Delta", degree_profile(lc).max_degree);
  if (kind == ProblemKind::kKRouteCut) report.set("z", g.network.k - 1);
  add_claims(report, gadget_claims(lc, g), false);
  emit(report, o.out, to_text(g.network));
  if (!layout_path.empty()) {
    std::ostringstream ss;
    write_layout(ss, g.layout, endpoints(lc));
    emit(report, layout_path, ss.str());
  }
  std::cerr << to_string(kind) << ": k = " << g.network.k << ", demands = " << g.network.demands.size() << '\n';
  return report.all_checks_pass() ? kOk : kFail;
}

int cmd_merge(RunReport& report, const Options& o, const std::string& kind_text, const std::string& in,
              const std::string& layout_path) {
  const ProblemKind kind = parse_kind(kind_text);
  const LabelCoverInstance lc = simple_source(report, load_lc(report, in));
  const StrongColoring coloring = strong_edge_color(lc);
  const MergedInstance m = merge_demands(build_gadget(lc, kind), lc, coloring);
  report.coloring(coloring);
  report.layout(m.layout);
  report.set("kind", to_string(kind));
  report.set("mergedDemands", m.classes.size());
  report.set("kNew", m.k_new);
  add_claims(report, {merge_claim(lc, m)}, false);
  emit(report, o.out, to_text(m.network));
  if (!layout_path.empty()) {
    std::ostringstream ss;
    write_layout(ss, m.layout, endpoints(lc));
    emit(report, layout_path, ss.str());
  }
  std::cerr << "merged demands: " << m.classes.size() << ", k = " << m.k_new << '\n';
  return report.all_checks_pass() ? kOk : kFail;
}

int cmd_color(RunReport& report, const Options& o, const std::string& in, bool exact) {
  const LabelCoverInstance lc = load_lc(report, in);
  const StrongColoring c = exact ? minimum_strong_coloring(lc) : strong_edge_color(lc);
  report.coloring(c);
  const long long delta = degree_profile(lc).max_degree;
  report.check("valid-strong-coloring", is_valid_strong_coloring(lc, c), c.color_count);
  report.check("color-bound", c.color_count <= 2 * delta * delta, c.color_count, "colors <= 2 Delta^2");
  std::ostringstream ss;
  for (std::size_t a = 0; a < c.color_of.size(); ++a) ss << "color " << a << ' ' << c.color_of[a] << '\n';
  emit(report, o.out, ss.str());
  return report.all_checks_pass() ? kOk : kFail;
}

int cmd_verify(RunReport& report, const Options& o, const std::string& net_path, const std::string& sol_path,
               bool claims, bool certs) {
  const NetworkInstance net = load_network(report, net_path);
  std::ostringstream ss;
  int code = kOk;
  if (!sol_path.empty()) {
    const std::vector<int> sol = read_solution(report, sol_path);
    const CheckResult r = check_solution(net, sol);
    ss << "feasible " << (r.feasible ? "yes" : "no") << "\ncost " << format_rational(r.cost) << '\n';
    for (std::size_t d = 0; d < net.demands.size(); ++d) {
      const Demand& dem = net.demands[d];
      ss << "demand " << d << ' ' << dem.s << ' ' << dem.t << " req " << dem.req << " paths " << r.path_counts[d] << '\n';
    }
    report.set("feasible", r.feasible);
    report.set("cost", to_json(r.cost));
    report.set("pathCounts", r.path_counts);
    if (!r.feasible) code = kFail;
  }
  if (certs) {
    for (const Demand& d : net.demands) {
      FlowOptions opt;
      opt.witnesses = opt.cut = true;
      write_flow_certificate(ss, opcount(net, d.s, d.t, opt));
    }
  }
  emit(report, o.out, ss.str());
  if (claims || sol_path.empty()) {
    add_claims(report, network_claims(net), true);
    if (!report.all_checks_pass()) code = kFail;
  }
  return code;
}

int cmd_bruteforce(RunReport& report, const Options& o, const std::string& path) {
  const std::string text = slurp(path);
  report.input(path, sha256_hex(text));
  std::istringstream in(text);
  std::string magic;
  in >> magic;
  in.seekg(0);
  std::ostringstream ss;
  if (magic == "network") {
    const NetworkInstance net = read_network(in);
    const NetworkOptResult r = brute_force_network_opt(net, o.cap > 0 ? o.cap : kDefaultNetworkCap);
    ss << "feasible " << (r.feasible ? "yes" : "no") << "\nopt " << format_rational(r.cost) << "\nedges";
    for (int e : r.edges) ss << ' ' << e;
    ss << '\n';
    report.set("opt", to_json(r.cost));
    report.set("edges", r.edges);
    report.set("variables", r.variables);
    report.set("searchNodes", r.nodes);
  } else {
    const LabelCoverInstance lc = read_label_cover(in);
    const double cap = o.cap > 0 ? static_cast<double>(o.cap) : kDefaultEnumerationCap;
    const MaxCoverResult m = brute_force_max(lc, cap);
    ss << "maxFraction " << format_rational(m.fraction) << "\ncovered " << m.covered << '\n';
    report.set("maxFraction", to_json(m.fraction));
    if (lc.has_costs()) {
      const MinCostResult c = brute_force_min_cost(lc, cap);
      ss << "minCost " << format_rational(c.cost) << '\n';
      report.set("minCost", to_json(c.cost));
    }
  }
  emit(report, o.out, ss.str());
  return kOk;
}

int cmd_gap(RunReport& report, const Options& o, const GenArgs& g, const std::string& kind, bool no_pipeline) {
  GapParams p;
  p.profile.left_count = g.left;
  p.profile.right_count = g.right;
  p.profile.left_labels = g.labels.at(0);
  p.profile.right_labels = g.labels.at(1);
  p.profile.left_degree = g.degree;
  p.pipeline = pipeline_from(o);
  p.use_pipeline = !no_pipeline;
  p.kind = parse_kind(kind);
  if (o.cap > 0) p.cap = o.cap;
  report.seed("gap", o.seed);
  const GapReport r = gap_experiment(p, o.seed);
  report.gap(r);
  report.check("oracles-agree-yes", r.yes.oracles_agree, to_json(r.yes.network_opt.cost), "networkOPT = labelCoverOPT");
  report.check("oracles-agree-no", r.no.oracles_agree, to_json(r.no.network_opt.cost), "networkOPT = labelCoverOPT");
  if (r.normalized_ratio) report.set("normalizedRatio", to_json(*r.normalized_ratio));
  report.check("completeness", r.completeness_holds, to_json(r.yes.network_opt.cost), "yesOPT <= 2C = " + format_rational(Rational(2) * r.yes.total_cost));
  report.check("rounding-yes", r.yes.rounding_consistent, r.yes.rounded_covered, "E[covered] <= rounded <= max covered");
  report.check("rounding-no", r.no.rounding_consistent, r.no.rounded_covered, "E[covered] <= rounded <= max covered");
  std::ostringstream ss;
  ss << "kind " << to_string(p.kind) << "\nyesOPT " << format_rational(r.yes.network_opt.cost) << "\nnoOPT "
     << format_rational(r.no.network_opt.cost) << "\nratio " << (r.ratio ? format_rational(*r.ratio) : "undefined")
     << "\nnormalizedRatio " << (r.normalized_ratio ? format_rational(*r.normalized_ratio) : "undefined")
     << "\nyesDigest " << r.yes.network_digest << "\nnoDigest " << r.no.network_digest << '\n';
  emit(report, o.out, ss.str());
  return report.all_checks_pass() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Label cover to vertex-connectivity reductions"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--out", o.out, "output path (default stdout)");
    sub->add_option("--report", o.report, "JSON run report path");
  };
  auto params = [&](CLI::App* sub) {
    sub->add_option("--gamma", o.gamma, "gamma as n/d");
    sub->add_option("--eps", o.eps, "epsilon as n/d");
    sub->add_option("--d", o.d, "degree d or auto");
    sub->add_option("--trim", o.trim, "trim threshold n/d or auto");
  };

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a random planted instance");
  common(gen);
  gen->add_option("--left", gen_args.left)->required();
  gen->add_option("--right", gen_args.right)->required();
  gen->add_option("--labels", gen_args.labels)->expected(2)->required();
  gen->add_option("--degree", gen_args.degree)->required();
  gen->add_option("--eps", o.eps, "planted slack");
  gen->add_option("--costs", gen_args.costs, "c1 c2")->expected(2);

  std::string pass, in, config, kind = "rootedDirected", layout, solution;
  auto* transform = app.add_subcommand("transform", "run one pass or the full pipeline");
  common(transform);
  params(transform);
  transform->add_option("pass", pass)->required()->check(CLI::IsMember({"rightdeg", "regularize", "sparsify", "trim", "pipeline"}));
  transform->add_option("in", in)->required();
  transform->add_option("--config", config, "pipeline v1 file");

  auto* costs = app.add_subcommand("costs", "attach max-to-min costs");
  common(costs);
  costs->add_option("in", in)->required();
  costs->add_option("--eps", o.eps);

  const std::vector<std::string> kinds{"rootedDirected", "rootedUndirected", "sndp", "vcSndp", "kroute", "kRouteCut"};
  auto* reduce = app.add_subcommand("reduce", "build a gadget");
  common(reduce);
  reduce->add_option("kind", kind)->required()->check(CLI::IsMember(kinds));
  reduce->add_option("in", in)->required();
  reduce->add_option("--layout", layout, "layout output path");

  auto* merge = app.add_subcommand("merge", "build a gadget and merge demands by strong coloring");
  common(merge);
  merge->add_option("in", in)->required();
  merge->add_option("--kind", kind)->check(CLI::IsMember({"rootedDirected", "kroute", "kRouteCut"}));
  merge->add_option("--layout", layout, "layout output path");

  bool exact = false;
  auto* color = app.add_subcommand("color", "strong edge coloring");
  common(color);
  color->add_option("in", in)->required();
  color->add_flag("--exact", exact, "minimum coloring (small graphs)");

  bool claims = false, certs = false;
  auto* verify = app.add_subcommand("verify", "check a solution and/or structural claims");
  common(verify);
  verify->add_option("network", in)->required();
  verify->add_option("solution", solution);
  verify->add_flag("--claims", claims);
  verify->add_flag("--certs", certs, "print flowcert blocks");

  auto* brute = app.add_subcommand("bruteforce", "exact optimum of a label cover or network");
  common(brute);
  brute->add_option("in", in)->required();
  brute->add_option("--cap", o.cap);

  GenArgs gap_args{2, 2, 2, {2, 2}, {}};
  bool no_pipeline = false;
  auto* gap = app.add_subcommand("gap", "yes/no gap experiment");
  common(gap);
  params(gap);
  gap->add_option("--kind", kind)->check(CLI::IsMember(kinds));
  gap->add_option("--left", gap_args.left);
  gap->add_option("--right", gap_args.right);
  gap->add_option("--labels", gap_args.labels)->expected(2);
  gap->add_option("--degree", gap_args.degree);
  gap->add_option("--cap", o.cap);
  gap->add_flag("--no-pipeline", no_pipeline);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  RunReport report(std::vector<std::string>(argv, argv + argc));
  const Timer timer;
  try {
    int code = kOk;
    if (*gen) code = cmd_gen(report, o, gen_args);
    else if (*transform) code = cmd_transform(report, o, pass, in, config);
    else if (*costs) code = cmd_costs(report, o, in);
    else if (*reduce) code = cmd_reduce(report, o, kind, in, layout);
    else if (*merge) code = cmd_merge(report, o, kind, in, layout);
    else if (*color) code = cmd_color(report, o, in, exact);
    else if (*verify) code = cmd_verify(report, o, in, solution, claims, certs);
    else if (*brute) code = cmd_bruteforce(report, o, in);
    else if (*gap) code = cmd_gap(report, o, gap_args, kind, no_pipeline);
    finish(report, o, timer);
    return code;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCap;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}
