#include "lcconn/network.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "lcconn/errors.hpp"
#include "lcconn/text_util.hpp"

namespace lcconn {

namespace {

constexpr std::pair<ProblemKind, const char*> kKindNames[] = {
    {ProblemKind::kRootedDirected, "rootedDirected"},
    {ProblemKind::kRootedUndirected, "rootedUndirected"},
    {ProblemKind::kVcSndp, "vcSndp"},
    {ProblemKind::kKRouteCut, "kRouteCut"},
};

constexpr std::pair<VertexRole, const char*> kRoleNames[] = {
    {VertexRole::kPlain, "plain"},         {VertexRole::kRoot, "root"},
    {VertexRole::kTerminal, "terminal"},   {VertexRole::kSource, "source"},
    {VertexRole::kSink, "sink"},           {VertexRole::kLeft, "left"},
    {VertexRole::kRight, "right"},         {VertexRole::kLabelA, "labelA"},
    {VertexRole::kLabelAPrime, "labelA2"}, {VertexRole::kLabelB, "labelB"},
    {VertexRole::kLabelBPrime, "labelB2"}, {VertexRole::kClique, "clique"},
    {VertexRole::kSeparator, "separator"}, {VertexRole::kAuxQ, "auxQ"},
    {VertexRole::kAuxS, "auxS"},
};

}  // namespace

std::string to_string(ProblemKind kind) {
  for (auto [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

ProblemKind parse_problem_kind(const std::string& text) {
  for (auto [k, name] : kKindNames) {
    if (text == name) return k;
  }
  throw std::invalid_argument("unknown problem kind '" + text + "'");
}

bool is_design_problem(ProblemKind kind) { return kind != ProblemKind::kKRouteCut; }

std::string to_string(VertexRole role) {
  for (auto [r, name] : kRoleNames) {
    if (r == role) return name;
  }
  return "?";
}

VertexRole parse_vertex_role(const std::string& text) {
  for (auto [r, name] : kRoleNames) {
    if (text == name) return r;
  }
  throw std::invalid_argument("unknown vertex role '" + text + "'");
}

std::string format_cost(const Cost& c) {
  if (c.infinite) return "inf";
  if (c.value == Rational(0)) return "0";
  return format_rational(c.value);
}

Cost parse_cost(const std::string& text) {
  if (text == "inf") return Cost::inf();
  return Cost::of(parse_rational(text));
}

std::vector<int> NetworkInstance::terminals() const {
  std::vector<int> out;
  for (const Demand& d : demands) out.push_back(d.t);
  return out;
}

std::vector<std::string> validate(const NetworkInstance& net) {
  std::vector<std::string> out;
  const int n = net.vertex_count();
  auto in_range = [n](int v) { return v >= 0 && v < n; };
  if (net.k < 1) out.push_back("k must be at least 1");
  for (std::size_t i = 0; i < net.edges.size(); ++i) {
    const Edge& e = net.edges[i];
    const std::string where = "edge " + std::to_string(i);
    if (!in_range(e.u) || !in_range(e.v)) out.push_back(where + " has an endpoint out of range");
    if (e.u == e.v) out.push_back(where + " is a self-loop");
    if (e.mult < 1) out.push_back(where + " has multiplicity below 1");
    if (!e.cost.infinite && e.cost.value < Rational(0)) out.push_back(where + " has negative cost");
    if (e.cost.infinite && is_design_problem(net.kind)) {
      out.push_back(where + " has infinite cost in a design instance");
    }
  }
  const bool rooted = net.kind == ProblemKind::kRootedDirected || net.kind == ProblemKind::kRootedUndirected;
  if (rooted && !net.root) out.push_back("rooted instance without a root");
  if (rooted && net.root && !in_range(*net.root)) out.push_back("root out of range");
  if (net.directed != (net.kind == ProblemKind::kRootedDirected)) {
    out.push_back("directedness does not match kind " + to_string(net.kind));
  }
  for (std::size_t i = 0; i < net.demands.size(); ++i) {
    const Demand& d = net.demands[i];
    const std::string where = "demand " + std::to_string(i);
    if (!in_range(d.s) || !in_range(d.t)) out.push_back(where + " has an endpoint out of range");
    if (d.s == d.t) out.push_back(where + " has equal endpoints");
    if (d.req < 1) out.push_back(where + " has requirement below 1");
    if (rooted && net.root && d.s != *net.root) out.push_back(where + " does not start at the root");
  }
  return out;
}

void require_valid(const NetworkInstance& net) {
  const auto v = validate(net);
  if (!v.empty()) throw PreconditionError("invalid network: " + v.front());
}

std::vector<int> priced_edges(const NetworkInstance& net) {
  std::vector<int> out;
  for (std::size_t i = 0; i < net.edges.size(); ++i) {
    if (net.edges[i].cost.is_finite_positive()) out.push_back(static_cast<int>(i));
  }
  return out;
}

NetworkInstance read_network(std::istream& in) {
  NetworkInstance net;
  std::vector<std::string> tok;
  int line = 0;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw ParseError(what, line);
  };
  need(text::next_line(in, tok, line) && tok.size() == 2 && tok[0] == "network" && tok[1] == "v1",
       "expected 'network v1'");
  need(text::next_line(in, tok, line) && tok.size() == 1 && (tok[0] == "directed" || tok[0] == "undirected"),
       "expected 'directed' or 'undirected'");
  net.directed = tok[0] == "directed";
  std::vector<int> terminal_lines;
  bool have_kind = false;
  bool have_k = false;
  while (text::next_line(in, tok, line)) {
    const std::string& key = tok[0];
    try {
      if (key == "kind" && tok.size() == 2) {
        net.kind = parse_problem_kind(tok[1]);
        have_kind = true;
      } else if (key == "k" && tok.size() == 2) {
        net.k = text::to_int(tok[1], line);
        have_k = true;
      } else if (key == "vertex" && tok.size() == 3) {
        need(text::to_int(tok[1], line) == net.vertex_count(), "vertices must be listed in index order");
        net.add_vertex(parse_vertex_role(tok[2]));
      } else if (key == "edge" && tok.size() == 7 && tok[3] == "cost" && tok[5] == "mult") {
        net.add_edge(text::to_int(tok[1], line), text::to_int(tok[2], line), parse_cost(tok[4]),
                     text::to_int(tok[6], line));
      } else if (key == "root" && tok.size() == 2) {
        net.root = text::to_int(tok[1], line);
      } else if (key == "terminal" && tok.size() == 2) {
        terminal_lines.push_back(text::to_int(tok[1], line));
      } else if (key == "demand" && tok.size() == 5 && tok[3] == "req") {
        net.demands.push_back(Demand{text::to_int(tok[1], line), text::to_int(tok[2], line),
                                     text::to_int(tok[4], line)});
      } else {
        throw ParseError("unrecognized line '" + key + "'", line);
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line);
    }
  }
  need(have_kind && have_k, "missing 'kind' or 'k'");
  if (!terminal_lines.empty()) {
    need(net.root.has_value(), "terminals given without a root");
    for (int t : terminal_lines) net.demands.push_back(Demand{*net.root, t, net.k});
  }
  require_valid(net);
  return net;
}

NetworkInstance read_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_network(in);
}

void write_network(std::ostream& out, const NetworkInstance& net) {
  out << "network v1\n" << (net.directed ? "directed" : "undirected") << "\n";
  out << "kind " << to_string(net.kind) << "\n";
  out << "k " << net.k << "\n";
  for (int v = 0; v < net.vertex_count(); ++v) {
    out << "vertex " << v << " " << to_string(net.roles[static_cast<std::size_t>(v)]) << "\n";
  }
  for (const Edge& e : net.edges) {
    out << "edge " << e.u << " " << e.v << " cost " << format_cost(e.cost) << " mult " << e.mult << "\n";
  }
  // Terminal lines carry the uniform requirement k; anything else is a demand line.
  const bool rooted_uniform =
      net.root && std::all_of(net.demands.begin(), net.demands.end(),
                              [&](const Demand& d) { return d.s == *net.root && d.req == net.k; });
  if (net.root) out << "root " << *net.root << "\n";
  for (const Demand& d : net.demands) {
    if (rooted_uniform) out << "terminal " << d.t << "\n";
    else out << "demand " << d.s << " " << d.t << " req " << d.req << "\n";
  }
}

std::string to_text(const NetworkInstance& net) {
  std::ostringstream out;
  write_network(out, net);
  return out.str();
}

int GadgetLayout::label_edge(int global_vertex, int label) const {
  if (global_vertex < 0 || global_vertex >= left_count + right_count) {
    throw DomainError("label-cover vertex " + std::to_string(global_vertex) + " out of range");
  }
  if (global_vertex < left_count) {
    if (label < 0 || label >= left_labels) throw DomainError("left label out of range");
    return left_label_edge[static_cast<std::size_t>(global_vertex * left_labels + label)];
  }
  if (label < 0 || label >= right_labels) throw DomainError("right label out of range");
  return right_label_edge[static_cast<std::size_t>((global_vertex - left_count) * right_labels + label)];
}

void write_layout(std::ostream& out, const GadgetLayout& layout,
                  const std::vector<std::pair<int, int>>& arc_endpoints) {
  out << "layout v1\n";
  out << "shape " << layout.left_count << " " << layout.right_count << " " << layout.left_labels << " "
      << layout.right_labels << "\n";
  for (int u = 0; u < layout.left_count; ++u) {
    for (int a = 0; a < layout.left_labels; ++a) out << "labeledge " << u << " " << a << " " << layout.label_edge(u, a) << "\n";
  }
  for (int w = 0; w < layout.right_count; ++w) {
    const int g = layout.left_count + w;
    for (int b = 0; b < layout.right_labels; ++b) out << "labeledge " << g << " " << b << " " << layout.label_edge(g, b) << "\n";
  }
  for (std::size_t e = 0; e < layout.demand_of_arc.size(); ++e) {
    out << "demandarc " << arc_endpoints[e].first << " " << arc_endpoints[e].second << " "
        << layout.demand_of_arc[e] << "\n";
  }
  for (std::size_t d = 0; d < layout.demands.size(); ++d) {
    const DemandLayout& dl = layout.demands[d];
    for (const auto& [name, set] : dl.padding) {
      out << "padding " << d << " " << name;
      for (int v : set) out << " " << v;
      out << "\n";
    }
    out << "path " << d;
    for (int v : dl.canonical_path) out << " " << v;
    out << "\n";
  }
}

GadgetLayout read_layout(std::istream& in) {
  GadgetLayout layout;
  std::vector<std::string> tok;
  int line = 0;
  if (!text::next_line(in, tok, line) || tok.size() != 2 || tok[0] != "layout" || tok[1] != "v1") {
    throw ParseError("expected 'layout v1'", line);
  }
  auto demand = [&](int d) -> DemandLayout& {
    if (d < 0) throw ParseError("negative demand id", line);
    if (static_cast<std::size_t>(d) >= layout.demands.size()) layout.demands.resize(static_cast<std::size_t>(d) + 1);
    return layout.demands[static_cast<std::size_t>(d)];
  };
  while (text::next_line(in, tok, line)) {
    const std::string& key = tok[0];
    if (key == "shape" && tok.size() == 5) {
      layout.left_count = text::to_int(tok[1], line);
      layout.right_count = text::to_int(tok[2], line);
      layout.left_labels = text::to_int(tok[3], line);
      layout.right_labels = text::to_int(tok[4], line);
      layout.left_label_edge.assign(static_cast<std::size_t>(layout.left_count * layout.left_labels), -1);
      layout.right_label_edge.assign(static_cast<std::size_t>(layout.right_count * layout.right_labels), -1);
    } else if (key == "labeledge" && tok.size() == 4) {
      const int v = text::to_int(tok[1], line);
      const int l = text::to_int(tok[2], line);
      const int e = text::to_int(tok[3], line);
      if (v < 0 || v >= layout.left_count + layout.right_count) throw ParseError("vertex out of range", line);
      if (v < layout.left_count) {
        if (l < 0 || l >= layout.left_labels) throw ParseError("label out of range", line);
        layout.left_label_edge[static_cast<std::size_t>(v * layout.left_labels + l)] = e;
      } else {
        if (l < 0 || l >= layout.right_labels) throw ParseError("label out of range", line);
        layout.right_label_edge[static_cast<std::size_t>((v - layout.left_count) * layout.right_labels + l)] = e;
      }
    } else if (key == "demandarc" && tok.size() == 4) {
      const int d = text::to_int(tok[3], line);
      demand(d).arc = static_cast<int>(layout.demand_of_arc.size());
      layout.demand_of_arc.push_back(d);
    } else if (key == "padding" && tok.size() >= 3) {
      auto& set = demand(text::to_int(tok[1], line)).padding[tok[2]];
      for (std::size_t i = 3; i < tok.size(); ++i) set.push_back(text::to_int(tok[i], line));
    } else if (key == "path" && tok.size() >= 2) {
      auto& path = demand(text::to_int(tok[1], line)).canonical_path;
      for (std::size_t i = 2; i < tok.size(); ++i) path.push_back(text::to_int(tok[i], line));
    } else {
      throw ParseError("unrecognized line '" + key + "'", line);
    }
  }
  return layout;
}

}  // namespace lcconn
