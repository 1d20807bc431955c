#include "lcconn/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>

#include "lcconn/errors.hpp"
#include "lcconn/rng.hpp"
#include "lcconn/spectral.hpp"
#include "lcconn/text_util.hpp"

namespace lcconn {

std::vector<int> compose_provenance(const std::vector<int>& first, const std::vector<int>& second) {
  std::vector<int> out;
  out.reserve(second.size());
  for (int i : second) out.push_back(first.at(static_cast<std::size_t>(i)));
  return out;
}

int PipelineParams::degree() const {
  if (d) return *d;
  // ceil(1 / gamma)
  const auto n = gamma.denominator();
  const auto q = gamma.numerator();
  return static_cast<int>((n + q - 1) / q);
}

void PipelineParams::validate() const {
  if (gamma <= 0 || gamma >= 1) throw PreconditionError("gamma must lie in (0, 1)");
  if (epsilon < 0 || epsilon >= 1) throw PreconditionError("epsilon must lie in [0, 1)");
  if (d && *d < 1) throw PreconditionError("d must be at least 1");
  if (trim && *trim <= 0) throw PreconditionError("trim threshold must be positive");
}

PipelineParams read_pipeline_params(std::istream& in) {
  PipelineParams p;
  std::vector<std::string> tok;
  int line = 0;
  if (!text::next_line(in, tok, line) || tok.size() != 2 || tok[0] != "pipeline" || tok[1] != "v1") {
    throw ParseError("expected 'pipeline v1'", line);
  }
  auto rational = [&](const std::string& s) {
    try {
      return parse_rational(s);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line);
    }
  };
  while (text::next_line(in, tok, line)) {
    if (tok.size() != 2) throw ParseError("expected '<key> <value>'", line);
    const std::string& key = tok[0];
    const std::string& value = tok[1];
    if (key == "gamma") {
      p.gamma = rational(value);
    } else if (key == "epsilon") {
      p.epsilon = rational(value);
    } else if (key == "d") {
      if (value == "auto") p.d.reset();
      else p.d = text::to_int(value, line);
    } else if (key == "seed") {
      try {
        p.seed = std::stoull(value);
      } catch (const std::exception&) {
        throw ParseError("bad seed '" + value + "'", line);
      }
    } else if (key == "trim") {
      if (value == "auto") p.trim.reset();
      else p.trim = rational(value);
    } else {
      throw ParseError("unknown key '" + key + "'", line);
    }
  }
  p.validate();
  return p;
}

std::string to_text(const PipelineParams& p) {
  std::ostringstream out;
  out << "pipeline v1\n";
  out << "gamma " << format_rational(p.gamma) << "\n";
  out << "epsilon " << format_rational(p.epsilon) << "\n";
  out << "d " << (p.d ? std::to_string(*p.d) : "auto") << "\n";
  out << "seed " << p.seed << "\n";
  out << "trim " << (p.trim ? format_rational(*p.trim) : "auto") << "\n";
  return out.str();
}

namespace {

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(10);
  s << x;
  return s.str();
}

PassTrace start_trace(const std::string& name, const LabelCoverInstance& in, std::uint64_t seed) {
  PassTrace t;
  t.pass = name;
  t.input_profile = degree_profile(in);
  t.seed = seed;
  return t;
}

void finish_trace(PassTrace& t, const LabelCoverInstance& in, const LabelCoverInstance& out) {
  t.output_profile = degree_profile(out);
  t.arc_multiplier = in.arcs.empty() ? Rational(1)
                                     : Rational(static_cast<std::int64_t>(out.arcs.size()),
                                                static_cast<std::int64_t>(in.arcs.size()));
}

using Matrix = std::vector<std::vector<int>>;

// Symmetric m x m matrix with row sums d: entry (i, j) is the number of
// copies of the i-th arc at w that attach to w(j).
Matrix copies_from_graph(const RegularGraph& g) {
  const auto m = static_cast<std::size_t>(g.vertex_count);
  Matrix out(m, std::vector<int>(m, 0));
  for (auto [a, b] : g.edges) {
    const auto ia = static_cast<std::size_t>(a);
    const auto ib = static_cast<std::size_t>(b);
    if (a == b) {
      out[ia][ia] += 2;
    } else {
      ++out[ia][ib];
      ++out[ib][ia];
    }
  }
  return out;
}

// q copies of the complete graph with loops plus an r-regular circulant,
// where d = q*m + r. For odd r on an odd cycle length the diagonal takes a
// single copy.
Matrix fallback_copies(int m, int d) {
  const auto sm = static_cast<std::size_t>(m);
  const int q = d / m;
  const int r = d % m;
  Matrix out(sm, std::vector<int>(sm, q));
  for (int i = 0; i < m; ++i) {
    for (int off = 1; off <= r / 2; ++off) {
      ++out[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + off) % m)];
      ++out[static_cast<std::size_t>(i)][static_cast<std::size_t>((i - off + m) % m)];
    }
    if (r % 2 == 1) {
      const int j = (m % 2 == 0) ? (i + m / 2) % m : i;
      ++out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return out;
}

}  // namespace

PassResult right_degree_reduce(const LabelCoverInstance& instance, int d, std::uint64_t seed,
                               double expander_c) {
  require_valid(instance);
  if (d < 1) throw PreconditionError("right-degree reduction needs d >= 1");
  const DegreeProfile profile = degree_profile(instance);
  if (!profile.left_regular()) {
    throw PreconditionError("right-degree reduction needs a left-regular instance (left degrees " +
                            std::to_string(profile.min_left) + ".." +
                            std::to_string(profile.max_left) + ")");
  }

  PassTrace trace = start_trace("rightdeg", instance, seed);
  trace.set("d", std::to_string(d));
  trace.set("expander c", fmt(expander_c));

  std::vector<std::vector<int>> at_right(static_cast<std::size_t>(instance.right_count));
  for (std::size_t i = 0; i < instance.arcs.size(); ++i) {
    at_right[static_cast<std::size_t>(instance.arcs[i].right)].push_back(static_cast<int>(i));
  }

  LabelCoverInstance out;
  out.left_count = instance.left_count;
  out.left_labels = instance.left_labels;
  out.right_labels = instance.right_labels;
  out.left_cost = instance.left_cost;
  out.right_cost = instance.right_cost;
  out.allow_parallel_arcs = true;
  Labeling lifted;
  if (instance.planted) lifted.left = instance.planted->left;

  int fallbacks = 0;
  int expanders = 0;
  int retries = 0;
  int next_right = 0;
  for (int w = 0; w < instance.right_count; ++w) {
    const auto& incident = at_right[static_cast<std::size_t>(w)];
    const int m = static_cast<int>(incident.size());
    if (m == 0) continue;  // isolated right vertices have no copies
    Matrix copies;
    bool use_fallback = m < d || (static_cast<long long>(m) * d) % 2 != 0;
    if (!use_fallback) {
      try {
        auto ex = build_expander(m, d, expander_c, derive_seed(seed, static_cast<std::uint64_t>(w)));
        copies = copies_from_graph(ex.graph);
        retries += ex.retries;
        ++expanders;
      } catch (const ExpanderNotFoundError&) {
        use_fallback = true;
      }
    }
    if (use_fallback) {
      copies = fallback_copies(m, d);
      ++fallbacks;
      trace.notes.push_back("right vertex " + std::to_string(w) + " (degree " + std::to_string(m) +
                            ") uses the complete-multigraph fallback");
    }
    for (int i = 0; i < m; ++i) {
      const int src = incident[static_cast<std::size_t>(i)];
      const Arc& arc = instance.arcs[static_cast<std::size_t>(src)];
      for (int j = 0; j < m; ++j) {
        for (int c = 0; c < copies[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; ++c) {
          out.arcs.push_back(Arc{arc.left, next_right + j, arc.projection});
          trace.provenance.push_back(src);
        }
      }
    }
    if (instance.planted) {
      for (int j = 0; j < m; ++j) lifted.right.push_back(instance.planted->right[static_cast<std::size_t>(w)]);
    }
    next_right += m;
  }
  out.right_count = next_right;
  if (out.right_count == 0) throw PreconditionError("right-degree reduction needs at least one arc");
  if (instance.planted) out.planted = std::move(lifted);

  trace.set("expanders", std::to_string(expanders));
  trace.set("fallbacks", std::to_string(fallbacks));
  trace.set("expander retries", std::to_string(retries));
  finish_trace(trace, instance, out);
  return PassResult{std::move(out), std::move(trace)};
}

PassResult regularize(const LabelCoverInstance& instance) {
  require_valid(instance);
  const DegreeProfile p = degree_profile(instance);
  if (!p.biregular() || p.max_right == 0) {
    throw PreconditionError("regularization needs a biregular instance with arcs");
  }
  if (p.max_left % p.max_right != 0) {
    throw PreconditionError("left degree " + std::to_string(p.max_left) +
                            " is not a multiple of right degree " + std::to_string(p.max_right));
  }
  const int copies = p.max_left / p.max_right;
  PassTrace trace = start_trace("regularize", instance, 0);
  trace.set("D = d1/d2", std::to_string(copies));

  LabelCoverInstance out = instance;
  out.left_count = instance.left_count * copies;
  out.allow_parallel_arcs = instance.allow_parallel_arcs;
  out.arcs.clear();
  for (int i = 0; i < copies; ++i) {
    for (std::size_t e = 0; e < instance.arcs.size(); ++e) {
      const Arc& arc = instance.arcs[e];
      out.arcs.push_back(Arc{arc.left * copies + i, arc.right, arc.projection});
      trace.provenance.push_back(static_cast<int>(e));
    }
  }
  if (instance.planted) {
    Labeling lifted;
    lifted.right = instance.planted->right;
    for (int u = 0; u < instance.left_count; ++u) {
      for (int i = 0; i < copies; ++i) lifted.left.push_back(instance.planted->left[static_cast<std::size_t>(u)]);
    }
    out.planted = std::move(lifted);
  }
  finish_trace(trace, instance, out);
  return PassResult{std::move(out), std::move(trace)};
}

double sparsify_rate(const LabelCoverInstance& instance, const Rational& gamma) {
  const int delta = degree_profile(instance).max_degree;
  if (delta == 0) return INFINITY;
  return std::log(static_cast<double>(instance.max_label_count())) / to_double(gamma) /
         static_cast<double>(delta);
}

PassResult sparsify(const LabelCoverInstance& instance, const Rational& gamma, std::uint64_t seed) {
  require_valid(instance);
  if (gamma <= 0 || gamma >= 1) throw PreconditionError("gamma must lie in (0, 1)");
  const DegreeProfile p = degree_profile(instance);
  if (!p.biregular() || p.max_left != p.max_right) {
    throw PreconditionError("sparsification needs a regular instance (equal left and right degree)");
  }
  const double rho = sparsify_rate(instance, gamma);
  PassTrace trace = start_trace("sparsify", instance, seed);
  trace.set("rho = gamma^-1 ln(maxL) / Delta", fmt(rho));
  trace.set("expected avg degree gamma^-1 ln(maxL)",
            fmt(std::log(static_cast<double>(instance.max_label_count())) / to_double(gamma)));

  LabelCoverInstance out = instance;
  if (rho > 1.0) {
    trace.skipped = true;
    trace.notes.push_back("rho > 1: pass skipped, instance unchanged");
    for (std::size_t e = 0; e < instance.arcs.size(); ++e) trace.provenance.push_back(static_cast<int>(e));
    finish_trace(trace, instance, out);
    return PassResult{std::move(out), std::move(trace)};
  }
  Rng rng(seed);
  out.arcs.clear();
  for (std::size_t e = 0; e < instance.arcs.size(); ++e) {
    if (rng.bernoulli(rho)) {
      out.arcs.push_back(instance.arcs[e]);
      trace.provenance.push_back(static_cast<int>(e));
    }
  }
  trace.set("kept arcs", std::to_string(out.arcs.size()));
  finish_trace(trace, instance, out);
  return PassResult{std::move(out), std::move(trace)};
}

double default_trim_threshold(const LabelCoverInstance& instance, const Rational& gamma) {
  return 2.0 * std::log(static_cast<double>(instance.max_label_count())) / to_double(gamma);
}

double trim_resample_bound(const Rational& gamma) {
  return std::pow(2.0, 1.0 - 1.0 / to_double(gamma) / 3.0);
}

TrimResult trim_large_degree(const LabelCoverInstance& instance, double threshold) {
  require_valid(instance);
  if (!(threshold > 0)) throw PreconditionError("trim threshold must be positive");
  const auto ldeg = left_degrees(instance);
  const auto rdeg = right_degrees(instance);
  TrimResult r;
  for (int u = 0; u < instance.left_count; ++u) {
    if (ldeg[static_cast<std::size_t>(u)] > threshold) r.removed_left.push_back(u);
  }
  for (int w = 0; w < instance.right_count; ++w) {
    if (rdeg[static_cast<std::size_t>(w)] > threshold) r.removed_right.push_back(w);
  }
  PassTrace trace = start_trace("trim", instance, 0);
  trace.set("threshold", fmt(threshold));

  LabelCoverInstance out = instance;
  out.arcs.clear();
  for (std::size_t e = 0; e < instance.arcs.size(); ++e) {
    const Arc& arc = instance.arcs[e];
    if (ldeg[static_cast<std::size_t>(arc.left)] > threshold ||
        rdeg[static_cast<std::size_t>(arc.right)] > threshold) {
      continue;
    }
    out.arcs.push_back(arc);
    trace.provenance.push_back(static_cast<int>(e));
  }
  const auto removed = r.removed_left.size() + r.removed_right.size();
  r.removed_fraction = static_cast<double>(removed) /
                       static_cast<double>(instance.left_count + instance.right_count);
  r.removed_arc_fraction =
      instance.arcs.empty() ? 0.0
                            : 1.0 - static_cast<double>(out.arcs.size()) / static_cast<double>(instance.arcs.size());
  trace.set("removed vertices", std::to_string(removed));
  trace.set("removed fraction", fmt(r.removed_fraction));
  trace.set("removed arc fraction", fmt(r.removed_arc_fraction));
  finish_trace(trace, instance, out);
  r.result = PassResult{std::move(out), std::move(trace)};
  return r;
}

PipelineResult run_pipeline(const LabelCoverInstance& instance, const PipelineParams& params) {
  params.validate();
  PipelineResult res;
  PassResult rd = right_degree_reduce(instance, params.degree(), derive_seed(params.seed, "rightdeg"));
  rd.trace.set("d = ceil(1/gamma)", std::to_string(params.degree()));
  PassResult reg = regularize(rd.instance);

  const int n = reg.instance.left_count + reg.instance.right_count;
  const int budget = static_cast<int>(std::ceil(std::log2(static_cast<double>(std::max(n, 2))))) + 1;
  const double threshold =
      params.trim ? to_double(*params.trim) : default_trim_threshold(reg.instance, params.gamma);
  const double bound = trim_resample_bound(params.gamma);
  const std::uint64_t sparsify_seed = derive_seed(params.seed, "sparsify");

  for (int round = 0; round < budget; ++round) {
    PassResult sp = sparsify(reg.instance, params.gamma, derive_seed(sparsify_seed, static_cast<std::uint64_t>(round)));
    TrimResult tr = trim_large_degree(sp.instance, threshold);
    tr.result.trace.set("resample bound 2^(1 - gamma^-1/3)", fmt(bound));
    if (tr.removed_fraction <= bound) {
      tr.result.trace.set("sparsify rounds", std::to_string(round + 1));
      res.sparsify_rounds = round + 1;
      res.instance = std::move(tr.result.instance);
      res.traces = {std::move(rd.trace), std::move(reg.trace), std::move(sp.trace), std::move(tr.result.trace)};
      return res;
    }
  }
  throw RetriesExhaustedError("trimming removed more than " + fmt(bound) + " of the vertices in all " +
                              std::to_string(budget) + " sparsification rounds");
}

LabelCoverInstance max_to_min(const LabelCoverInstance& instance, const Rational& epsilon_budget) {
  require_valid(instance);
  const Rational lhs = epsilon_budget * static_cast<std::int64_t>(instance.arcs.size());
  if (epsilon_budget < 0 || lhs > std::min(instance.left_count, instance.right_count)) {
    throw PreconditionError("max-to-min needs epsilon*|E| <= min(|U|, |W|), got " + format_rational(lhs));
  }
  LabelCoverInstance out = instance;
  out.left_cost = Rational(instance.right_count);
  out.right_cost = Rational(instance.left_count);
  return out;
}

MultiLabeling repair_labeling(const LabelCoverInstance& instance, const Labeling& labeling) {
  MultiLabeling m = MultiLabeling::from_labeling(labeling);
  for (const Arc& arc : instance.arcs) {
    if (covers(arc, labeling)) continue;
    auto& set = m.right[static_cast<std::size_t>(arc.right)];
    const int b = arc.projection[static_cast<std::size_t>(labeling.left[static_cast<std::size_t>(arc.left)])];
    if (std::find(set.begin(), set.end(), b) == set.end()) {
      set.push_back(b);
      std::sort(set.begin(), set.end());
    }
  }
  return m;
}

namespace {

std::vector<int> or_zero(std::vector<int> s) {
  if (s.empty()) return {0};
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Rational arc_probability(const Arc& arc, const std::vector<int>& a_set, const std::vector<int>& b_set) {
  std::int64_t hits = 0;
  for (int a : a_set) {
    const int b = arc.projection[static_cast<std::size_t>(a)];
    if (std::binary_search(b_set.begin(), b_set.end(), b)) ++hits;
  }
  return Rational(hits, static_cast<std::int64_t>(a_set.size() * b_set.size()));
}

}  // namespace

Rational expected_covered(const LabelCoverInstance& instance, const MultiLabeling& m) {
  Rational total(0);
  for (const Arc& arc : instance.arcs) {
    total += arc_probability(arc, or_zero(m.left[static_cast<std::size_t>(arc.left)]),
                             or_zero(m.right[static_cast<std::size_t>(arc.right)]));
  }
  return total;
}

Labeling round_multi_labeling(const LabelCoverInstance& instance, const MultiLabeling& m) {
  if (static_cast<int>(m.left.size()) != instance.left_count ||
      static_cast<int>(m.right.size()) != instance.right_count) {
    throw DomainError("multi-labeling shape does not match the instance");
  }
  std::vector<std::vector<int>> left, right;
  for (const auto& s : m.left) left.push_back(or_zero(s));
  for (const auto& s : m.right) right.push_back(or_zero(s));

  std::vector<std::vector<int>> at_left(static_cast<std::size_t>(instance.left_count));
  std::vector<std::vector<int>> at_right(static_cast<std::size_t>(instance.right_count));
  for (std::size_t e = 0; e < instance.arcs.size(); ++e) {
    at_left[static_cast<std::size_t>(instance.arcs[e].left)].push_back(static_cast<int>(e));
    at_right[static_cast<std::size_t>(instance.arcs[e].right)].push_back(static_cast<int>(e));
  }

  // Only the arcs at the vertex being fixed change their expectation.
  auto fix = [&](std::vector<int>& own, const std::vector<int>& incident, bool is_left) {
    int best_label = own.front();
    Rational best(-1);
    for (int candidate : own) {
      Rational sum(0);
      for (int e : incident) {
        const Arc& arc = instance.arcs[static_cast<std::size_t>(e)];
        sum += is_left ? arc_probability(arc, {candidate}, right[static_cast<std::size_t>(arc.right)])
                       : arc_probability(arc, left[static_cast<std::size_t>(arc.left)], {candidate});
      }
      if (sum > best) {
        best = sum;
        best_label = candidate;
      }
    }
    own = {best_label};
  };
  for (int u = 0; u < instance.left_count; ++u) {
    fix(left[static_cast<std::size_t>(u)], at_left[static_cast<std::size_t>(u)], true);
  }
  for (int w = 0; w < instance.right_count; ++w) {
    fix(right[static_cast<std::size_t>(w)], at_right[static_cast<std::size_t>(w)], false);
  }
  Labeling out;
  for (const auto& s : left) out.left.push_back(s.front());
  for (const auto& s : right) out.right.push_back(s.front());
  return out;
}

}  // namespace lcconn
