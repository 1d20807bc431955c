#include "lcconn/report.hpp"

namespace lcconn {

Json to_json(const Rational& r) { return format_rational(r); }

Json to_json(const DegreeProfile& p) {
  return Json{{"maxLeft", p.max_left},        {"minLeft", p.min_left},   {"avgLeft", to_json(p.avg_left)},
              {"maxRight", p.max_right},      {"minRight", p.min_right}, {"avgRight", to_json(p.avg_right)},
              {"maxDegree", p.max_degree},    {"q1", to_json(p.left_ratio)}, {"q2", to_json(p.right_ratio)}};
}

Json to_json(const PassTrace& t) {
  Json params = Json::object();
  for (const auto& [k, v] : t.parameters) params[k] = v;
  return Json{{"pass", t.pass},
              {"seed", t.seed},
              {"skipped", t.skipped},
              {"arcMultiplier", to_json(t.arc_multiplier)},
              {"input", to_json(t.input_profile)},
              {"output", to_json(t.output_profile)},
              {"parameters", params},
              {"notes", t.notes},
              {"provenance", t.provenance}};
}

Json to_json(const StrongColoring& c) {
  Json lines = Json::array();
  for (std::size_t a = 0; a < c.color_of.size(); ++a) {
    lines.push_back("color " + std::to_string(a) + " " + std::to_string(c.color_of[a]));
  }
  return Json{{"colors", c.color_count}, {"assignment", lines}};
}

Json layout_summary(const GadgetLayout& l) {
  Json demands = Json::array();
  for (const auto& d : l.demands) {
    Json pad = Json::object();
    for (const auto& [name, set] : d.padding) pad[name] = set.size();
    demands.push_back(Json{{"arc", d.arc}, {"padding", pad}, {"pathLength", d.canonical_path.size()}});
  }
  return Json{{"left", l.left_count},
              {"right", l.right_count},
              {"leftLabels", l.left_labels},
              {"rightLabels", l.right_labels},
              {"labelEdges", l.left_label_edge.size() + l.right_label_edge.size()},
              {"demands", demands}};
}

namespace {

Json side_json(const GapSide& s) {
  Json traces = Json::array();
  for (const auto& t : s.traces) traces.push_back(to_json(t));
  return Json{{"name", s.name},
              {"seed", s.seed},
              {"sourceDigest", s.source_digest},
              {"instanceDigest", s.instance_digest},
              {"networkDigest", s.network_digest},
              {"left", s.left_count},
              {"right", s.right_count},
              {"arcs", s.arcs},
              {"profile", to_json(s.profile)},
              {"C", to_json(s.total_cost)},
              {"maxFraction", to_json(s.max_fraction)},
              {"maxCovered", s.max_covered},
              {"labelCoverOpt", to_json(s.label_cover_opt)},
              {"networkOpt", to_json(s.network_opt.cost)},
              {"optEdges", s.network_opt.edges},
              {"variables", s.network_opt.variables},
              {"searchNodes", s.network_opt.nodes},
              {"k", s.k},
              {"demands", s.demands},
              {"oraclesAgree", s.oracles_agree},
              {"roundedCovered", s.rounded_covered},
              {"roundedExpectation", to_json(s.rounded_expectation)},
              {"roundingConsistent", s.rounding_consistent},
              {"traces", traces}};
}

}  // namespace

Json to_json(const GapReport& r) {
  return Json{{"seed", r.seed},
              {"kind", to_string(r.params.kind)},
              {"parameters",
               {{"gamma", to_json(r.params.pipeline.gamma)},
                {"epsilon", to_json(r.params.pipeline.epsilon)},
                {"yesSlack", to_json(r.params.yes_slack)},
                {"noSlack", to_json(r.params.no_slack)},
                {"pipeline", r.params.use_pipeline},
                {"Delta", r.delta},
                {"k", r.yes.k},
                {"demandPairs", r.yes.demands}}},
              {"yes", side_json(r.yes)},
              {"no", side_json(r.no)},
              {"ratio", r.ratio ? to_json(*r.ratio) : Json(nullptr)},
              {"normalizedRatio", r.normalized_ratio ? to_json(*r.normalized_ratio) : Json(nullptr)},
              {"completeness", {{"formula", "yesOPT <= 2C"}, {"pass", r.completeness_holds}}}};
}

RunReport::RunReport(const std::vector<std::string>& argv) {
  doc_["toolVersion"] = kToolVersion;
  doc_["command"] = argv;
  doc_["seeds"] = Json::object();
  doc_["inputs"] = Json::array();
  doc_["outputs"] = Json::array();
  doc_["passTraces"] = Json::array();
  doc_["colorings"] = Json::array();
  doc_["layouts"] = Json::array();
  doc_["checks"] = Json::array();
  doc_["gapReports"] = Json::array();
  doc_["results"] = Json::object();
  doc_["timing"] = Json::object();
}

void RunReport::seed(const std::string& name, std::uint64_t value) { doc_["seeds"][name] = value; }
void RunReport::input(const std::string& path, const std::string& digest) {
  doc_["inputs"].push_back(Json{{"path", path}, {"sha256", digest}});
}
void RunReport::output(const std::string& path, const std::string& digest) {
  doc_["outputs"].push_back(Json{{"path", path}, {"sha256", digest}});
}
void RunReport::trace(const PassTrace& t) { doc_["passTraces"].push_back(to_json(t)); }
void RunReport::coloring(const StrongColoring& c) { doc_["colorings"].push_back(to_json(c)); }
void RunReport::layout(const GadgetLayout& l) { doc_["layouts"].push_back(layout_summary(l)); }
void RunReport::gap(const GapReport& g) {
  doc_["gapReports"].push_back(to_json(g));
  doc_["timing"]["gap"] = g.seconds;
}

void RunReport::check(const std::string& name, bool pass, Json measured, const std::string& formula) {
  Json c{{"name", name}, {"pass", pass}, {"measured", std::move(measured)}};
  if (!formula.empty()) c["formula"] = formula;
  doc_["checks"].push_back(std::move(c));
}

void RunReport::set(const std::string& key, Json value) { doc_["results"][key] = std::move(value); }
void RunReport::stage(const std::string& name, double seconds) { doc_["timing"][name] = seconds; }

bool RunReport::all_checks_pass() const {
  for (const auto& c : doc_["checks"]) {
    if (!c["pass"].get<bool>()) return false;
  }
  return true;
}

}  // namespace lcconn
