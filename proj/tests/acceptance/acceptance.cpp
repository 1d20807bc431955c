// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "lcconn/brute_force.hpp"
#include "lcconn/check.hpp"
#include "lcconn/claims.hpp"
#include "lcconn/digest.hpp"
#include "lcconn/gadgets.hpp"
#include "lcconn/generator.hpp"
#include "lcconn/report.hpp"
#include "lcconn/rng.hpp"
#include "lcconn/spectral.hpp"
#include "lcconn/strong_coloring.hpp"
#include "lcconn/transforms.hpp"

using namespace lcconn;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

const ProblemKind kKinds[] = {ProblemKind::kRootedDirected, ProblemKind::kRootedUndirected, ProblemKind::kVcSndp,
                              ProblemKind::kKRouteCut};

LabelCoverInstance random_costed(std::uint64_t seed, int max_side, int max_labels) {
  Rng rng(derive_seed(seed, "shape"));
  InstanceProfile p;
  p.left_count = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_side - 1)));
  p.right_count = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_side - 1)));
  p.left_labels = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_labels - 1)));
  p.right_labels = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_labels - 1)));
  p.left_degree = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.right_count)));
  const Rational slacks[] = {Rational(0), Rational(1, 3), Rational(1)};
  p.planted_slack = slacks[rng.below(3)];
  LabelCoverInstance lc = random_instance(p, seed);
  lc.left_cost = Rational(1 + static_cast<int>(rng.below(3)));
  lc.right_cost = Rational(1 + static_cast<int>(rng.below(3)));
  return lc;
}

Outcome criterion1() {
  int instances = 0, mismatches = 0, skipped = 0;
  std::string first;
  for (std::uint64_t seed = 0; instances < 60; ++seed) {
    const LabelCoverInstance lc = random_costed(seed, 3, 3);
    if (lc.left_count * lc.left_labels + lc.right_count * lc.right_labels > 24) {
      ++skipped;
      continue;
    }
    ++instances;
    const Rational expect = brute_force_min_cost(lc).cost;
    for (ProblemKind kind : kKinds) {
      const NetworkOptResult opt = brute_force_network_opt(build_gadget(lc, kind).network);
      if (!opt.feasible || opt.cost != expect) {
        ++mismatches;
        if (first.empty()) first = " first: seed " + std::to_string(seed) + " " + to_string(kind);
      }
    }
  }
  return {mismatches == 0, std::to_string(instances) + " instances x 4 gadgets, " + std::to_string(mismatches) +
                               " mismatches" + first};
}

Outcome criterion2() {
  int violations = 0;
  std::string first;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const LabelCoverInstance lc = random_costed(1000 + seed, 4, 3);
    const StrongColoring coloring = strong_edge_color(lc);
    for (ProblemKind kind : kKinds) {
      const GadgetResult g = build_gadget(lc, kind);
      std::vector<Claim> claims = gadget_claims(lc, g);
      if (kind == ProblemKind::kRootedDirected || kind == ProblemKind::kKRouteCut) {
        claims.push_back(merge_claim(lc, merge_demands(g, lc, coloring)));
      }
      for (const Claim& c : claims) {
        if (!c.pass) {
          ++violations;
          if (first.empty()) first = " first: seed " + std::to_string(seed) + " " + c.name + " " + c.measured;
        }
      }
    }
  }
  return {violations == 0, "200 instances, " + std::to_string(violations) + " violations" + first};
}

Outcome criterion3() {
  int violations = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(derive_seed(seed, "rightdeg-shape"));
    InstanceProfile p;
    p.left_count = 3 + static_cast<int>(rng.below(4));
    p.right_count = 3 + static_cast<int>(rng.below(4));
    p.left_labels = 2 + static_cast<int>(rng.below(2));
    p.right_labels = 2;
    p.left_degree = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.right_count)));
    p.planted_slack = Rational(1, 2);
    const LabelCoverInstance lc = random_instance(p, seed);
    const int d = 2 + static_cast<int>(rng.below(2));
    const PassResult r = right_degree_reduce(lc, d, derive_seed(seed, "rightdeg"));
    const DegreeProfile out = degree_profile(r.instance);
    bool ok = out.biregular() && out.max_left == d * p.left_degree && out.max_right == d;
    ok = ok && coverage_fraction(r.instance, *r.instance.planted) == coverage_fraction(lc, *lc.planted);
    std::vector<int> copies(lc.arcs.size(), 0);
    ok = ok && r.trace.provenance.size() == r.instance.arcs.size();
    for (std::size_t e = 0; ok && e < r.trace.provenance.size(); ++e) {
      const int src = r.trace.provenance[e];
      ++copies[static_cast<std::size_t>(src)];
      const Arc& a = r.instance.arcs[e];
      const Arc& b = lc.arcs[static_cast<std::size_t>(src)];
      ok = a.left == b.left && a.projection == b.projection;
    }
    for (int c : copies) ok = ok && c == d;
    violations += !ok;
  }
  return {violations == 0, "100 instances, " + std::to_string(violations) + " violations"};
}

Outcome criterion4() {
  int mismatches = 0, instances = 0;
  for (std::uint64_t seed = 0; instances < 50; ++seed) {
    Rng rng(derive_seed(seed, "regularize-shape"));
    InstanceProfile p;
    p.left_count = 2;
    p.right_count = 2 + static_cast<int>(rng.below(2));
    p.left_labels = 2 + static_cast<int>(rng.below(2));
    p.right_labels = 2;
    p.left_degree = 1 + static_cast<int>(rng.below(2));
    p.planted_slack = Rational(1);
    const LabelCoverInstance biregular = right_degree_reduce(random_instance(p, seed), 2, derive_seed(seed, "rd")).instance;
    const LabelCoverInstance out = regularize(biregular).instance;
    if (max_search_space(out) > kDefaultEnumerationCap) continue;
    ++instances;
    mismatches += brute_force_max(biregular).fraction != brute_force_max(out).fraction;
  }
  return {mismatches == 0, std::to_string(instances) + " instances, " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion5() {
  LabelCoverInstance lc;
  lc.left_count = lc.right_count = 64;
  lc.left_labels = lc.right_labels = 2;
  Rng rng(0xa11ce);
  for (int u = 0; u < 64; ++u) {
    for (int j = 0; j < 16; ++j) {
      lc.arcs.push_back(Arc{u, (u + 4 * j) % 64, {static_cast<int>(rng.below(2)), static_cast<int>(rng.below(2))}});
    }
  }
  const Rational gamma(1, 4);
  const double rho = sparsify_rate(lc, gamma);
  const double mean = rho * 1024.0;
  const double sigma = std::sqrt(1024.0 * rho * (1.0 - rho));
  const double bound = 2.0 * 4.0 * std::log(2.0);
  int inside = 0, degree_violations = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const PassResult s = sparsify(lc, gamma, seed);
    inside += std::abs(static_cast<double>(s.instance.arcs.size()) - mean) <= 3.0 * sigma;
    const TrimResult t = trim_large_degree(s.instance, default_trim_threshold(s.instance, gamma));
    degree_violations += degree_profile(t.result.instance).max_degree > bound;
  }
  std::ostringstream d;
  d << "Delta=" << degree_profile(lc).max_degree << " |E|=" << lc.arcs.size() << " rho=" << rho << ": " << inside
    << "/100 within 3 sigma, " << degree_violations << " trim violations";
  return {inside >= 99 && degree_violations == 0, d.str()};
}

Outcome criterion6() {
  int failures = 0, cases = 0, success = 0, bad_cert = 0;
  for (int n : {24, 50, 100}) {
    for (int d : {4, 6}) {
      int ok = 0;
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        try {
          const ExpanderResult r = build_expander(n, d, kDefaultExpanderConstant, seed, kDefaultExpanderRetries);
          const SpectralCertificate again = second_eigenvalue(r.graph, kDefaultExpanderConstant);
          const bool valid = r.graph.vertex_count == n && r.graph.degree == d && r.graph.is_regular() && again.pass &&
                             std::abs(again.lambda2 - r.certificate.lambda2) < 1e-6;
          bad_cert += !valid;
          ok += valid;
        } catch (const ExpanderNotFoundError&) {
        }
      }
      ++cases;
      success += ok;
      failures += ok < 95;
    }
  }
  return {failures == 0 && bad_cert == 0, std::to_string(success) + "/" + std::to_string(cases * 100) +
                                              " certified, " + std::to_string(bad_cert) + " bad certificates"};
}

Outcome criterion7() {
  int violations = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    InstanceProfile p;
    Rng rng(derive_seed(seed, "color-shape"));
    p.left_count = 2 + static_cast<int>(rng.below(7));
    p.right_count = 2 + static_cast<int>(rng.below(7));
    p.left_labels = p.right_labels = 2;
    p.left_degree = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.right_count)));
    const LabelCoverInstance g = random_instance(p, seed);
    const StrongColoring c = strong_edge_color(g);
    const long long delta = degree_profile(g).max_degree;
    bool ok = c.color_count <= 2 * delta * delta;
    for (const auto& cls : c.classes()) ok = ok && is_induced_matching(g, cls);
    violations += !ok;
  }
  LabelCoverInstance path;
  path.left_count = path.right_count = 2;
  path.left_labels = path.right_labels = 1;
  path.arcs = {{0, 0, {0}}, {1, 0, {0}}, {1, 1, {0}}};
  const int exact = minimum_strong_coloring(path).color_count;
  return {violations == 0 && exact == 3,
          "200 graphs, " + std::to_string(violations) + " violations; path of 3 edges needs " + std::to_string(exact)};
}

std::vector<char> without_vertices(const NetworkInstance& net, const std::set<int>& gone) {
  std::vector<char> present(net.edges.size(), 1);
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    if (gone.count(net.edges[e].u) || gone.count(net.edges[e].v)) present[e] = 0;
  }
  return present;
}

Outcome criterion8() {
  int violations = 0, gadgets = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    ++violations;
    if (first.empty()) first = " first: " + what;
  };
  for (std::uint64_t seed = 0; gadgets < 20; ++seed) {
    const LabelCoverInstance lc = random_costed(500 + seed, 3, 3);
    if (lc.left_count * lc.left_labels + lc.right_count * lc.right_labels > 24) continue;
    ++gadgets;
    const GadgetResult g = to_k_route_cut(lc);
    const NetworkInstance& net = g.network;
    const int k = net.k;
    for (std::size_t d = 0; d < net.demands.size(); ++d) {
      const Demand& dem = net.demands[d];
      const int intact = opcount(net, dem.s, dem.t).path_count;
      if (intact < k || intact > k + 1) fail("intact " + std::to_string(intact) + " k " + std::to_string(k));
      std::set<int> gone;
      for (const char* name : {"Z", "S"}) {
        auto it = g.layout.demands[d].padding.find(name);
        if (it != g.layout.demands[d].padding.end()) gone.insert(it->second.begin(), it->second.end());
      }
      const auto present = without_vertices(net, gone);
      if (opcount(net, dem.s, dem.t, {}, &present).path_count != 2) fail("core count");

      // Zig-zag: drop {b, b'} and every left label edge outside pi^-1(b).
      const Arc& arc = lc.arcs[static_cast<std::size_t>(g.layout.demands[d].arc)];
      for (int b = 0; b < lc.right_labels; ++b) {
        std::vector<int> removed{g.layout.label_edge(lc.left_count + arc.right, b)};
        bool block = false;
        for (int a = 0; a < lc.left_labels; ++a) {
          if (arc.projection[static_cast<std::size_t>(a)] == b) block = true;
          else removed.push_back(g.layout.label_edge(arc.left, a));
        }
        if (!block) continue;
        if (check_cut_solution(net, removed).path_counts[d] < k) fail("zig-zag b=" + std::to_string(b));
      }
    }
    const MinCostResult best = brute_force_min_cost(lc);
    const CheckResult cut = check_cut_solution(net, labeling_to_solution(g.layout, best.witness));
    if (!cut.feasible) fail("feasible labeling does not cut");
    if (lc.planted) {
      const CheckResult repaired = check_cut_solution(net, labeling_to_solution(g.layout, repair_labeling(lc, *lc.planted)));
      if (!repaired.feasible) fail("repaired plant does not cut");
    }
  }
  return {violations == 0, std::to_string(gadgets) + " gadgets, " + std::to_string(violations) + " violations" + first};
}

Outcome criterion9() {
  int violations = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const LabelCoverInstance lc = random_costed(3000 + seed, 6, 4);
    Rng rng(derive_seed(seed, "multi"));
    MultiLabeling m = MultiLabeling::empty(lc.left_count, lc.right_count);
    auto fill = [&](std::vector<int>& set, int labels) {
      for (int l = 0; l < labels; ++l) {
        if (rng.below(2)) set.push_back(l);
      }
    };
    for (auto& s : m.left) fill(s, lc.left_labels);
    for (auto& s : m.right) fill(s, lc.right_labels);
    const Labeling r = round_multi_labeling(lc, m);
    violations += Rational(covered_count(lc, r)) < expected_covered(lc, m);
  }
  return {violations == 0, "100 pairs, " + std::to_string(violations) + " below expectation"};
}

std::string read_all(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Digest of every file in a run directory; reports are compared without
// their timing section.
std::map<std::string, std::string> digests(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    std::string text = read_all(entry.path());
    if (entry.path().extension() == ".json") {
      Json j = Json::parse(text);
      j.erase("timing");
      if (j.contains("gapReports")) {
        for (auto& g : j["gapReports"]) g.erase("seconds");
      }
      text = j.dump();
    }
    out[name] = sha256_hex(text);
  }
  return out;
}

Outcome criterion10() {
  const std::string cli = LCCONN_CLI_PATH;
  const std::vector<std::string> commands = {
      "gen --left 4 --right 4 --labels 2 2 --degree 2 --eps 0 --seed 7 --out a.lc --report gen.json",
      "gen --left 3 --right 3 --labels 2 2 --degree 2 --eps 1/3 --seed 11 --costs 1 2 --out small.lc --report gen2.json",
      "transform rightdeg --d 2 --seed 5 a.lc --out rd.lc --report rd.json",
      "transform regularize rd.lc --out reg.lc --report reg.json",
      "transform sparsify --gamma 1/4 --seed 9 reg.lc --out sp.lc --report sp.json",
      "transform trim --gamma 1/2 sp.lc --out tr.lc --report tr.json",
      "transform pipeline --gamma 1/2 --eps 1/8 --seed 3 a.lc --out pipe.lc --report pipe.json",
      "costs pipe.lc --out costed.lc --report costs.json",
      "reduce rootedDirected small.lc --out rd.nw --layout rd.layout --report red1.json",
      "reduce rootedUndirected small.lc --out ru.nw --layout ru.layout --report red2.json",
      "reduce sndp small.lc --out sndp.nw --layout sndp.layout --report red3.json",
      "reduce kroute small.lc --out kr.nw --layout kr.layout --report red4.json",
      "merge small.lc --out merged.nw --layout merged.layout --report merge.json",
      "merge small.lc --kind kroute --out mergedk.nw --report mergek.json",
      "color small.lc --out colors.txt --report color.json",
      "bruteforce small.lc --out bf_lc.txt --report bf1.json",
      "bruteforce sndp.nw --out bf_nw.txt --report bf2.json",
      "verify --claims kr.nw --out verify_claims.txt --report verify1.json",
      "verify --certs sndp.nw --out certs.txt --report verify2.json",
      "gap --seed 4 --kind rootedDirected --out gap.txt --report gap.json",
      "gap --seed 4 --kind kroute --gamma 1/2 --out gapk.txt --report gapk.json",
  };
  const fs::path base = fs::temp_directory_path() / ("lcconn-acceptance-" + std::to_string(::getpid()));
  std::map<std::string, std::string> runs[2];
  int failures = 0;
  for (int run = 0; run < 2; ++run) {
    const fs::path dir = base / ("run" + std::to_string(run));
    fs::create_directories(dir);
    for (const std::string& cmd : commands) {
      const std::string line = "cd '" + dir.string() + "' && '" + cli + "' " + cmd + " > stdout.txt 2> stderr.txt";
      const int status = std::system(line.c_str());
      failures += status != 0;
      // The solution for the verify step comes from the brute-force output.
      if (cmd.rfind("bruteforce sndp.nw", 0) == 0) {
        std::istringstream in(read_all(dir / "bf_nw.txt"));
        std::string tok, sol;
        while (in >> tok) {
          if (tok == "edges") {
            while (in >> tok) sol += tok + "\n";
          }
        }
        std::ofstream(dir / "sol.edges") << sol;
        const std::string v = "cd '" + dir.string() + "' && '" + cli +
                              "' verify sndp.nw sol.edges --out verify_sol.txt --report verify3.json > stdout.txt";
        failures += std::system(v.c_str()) != 0;
      }
    }
    fs::remove(dir / "stdout.txt");
    fs::remove(dir / "stderr.txt");
    runs[run] = digests(dir);
  }
  int differing = 0;
  for (const auto& [name, digest] : runs[0]) {
    auto it = runs[1].find(name);
    differing += it == runs[1].end() || it->second != digest;
  }
  fs::remove_all(base);
  return {failures == 0 && differing == 0 && runs[0].size() == runs[1].size(),
          std::to_string(commands.size() + 1) + " commands x 2 runs, " + std::to_string(runs[0].size()) +
              " files, " + std::to_string(differing) + " differ, " + std::to_string(failures) + " nonzero exits"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"gadget OPT equivalence", criterion1},   {"parameter formulas", criterion2},
      {"right-degree reduction", criterion3},   {"regularization optimum", criterion4},
      {"sparsification statistics", criterion5}, {"expander certificates", criterion6},
      {"strong coloring", criterion7},          {"k-route structure", criterion8},
      {"rounding bound", criterion9},           {"CLI determinism", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail
              << " [" << static_cast<int>(secs * 1000) / 1000.0 << "s]" << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
