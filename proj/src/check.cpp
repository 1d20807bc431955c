#include "lcconn/check.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "lcconn/errors.hpp"

namespace lcconn {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

void check_indices(const NetworkInstance& net, const std::vector<int>& edges) {
  for (int e : edges) {
    if (e < 0 || idx(e) >= net.edges.size()) throw DomainError("edge index " + std::to_string(e) + " out of range");
  }
}

Rational sum_costs(const NetworkInstance& net, const std::vector<int>& edges) {
  Rational total(0);
  std::vector<int> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int e : sorted) total += net.edges[idx(e)].cost.value;
  return total;
}

std::vector<int> all_counts(const NetworkInstance& net, const std::vector<char>& present) {
  std::vector<int> out;
  for (const Demand& d : net.demands) out.push_back(opcount(net, d.s, d.t, {}, &present).path_count);
  return out;
}

}  // namespace

CheckResult check_design_solution(const NetworkInstance& net, const std::vector<int>& chosen) {
  if (!is_design_problem(net.kind)) throw PreconditionError("design check on a cut instance");
  check_indices(net, chosen);
  std::vector<char> present(net.edges.size(), 0);
  for (std::size_t e = 0; e < net.edges.size(); ++e) present[e] = net.edges[e].cost.is_zero();
  for (int e : chosen) {
    if (net.edges[idx(e)].cost.infinite) throw PreconditionError("infinite-cost edge chosen in a design instance");
    present[idx(e)] = 1;
  }
  CheckResult r;
  r.cost = sum_costs(net, chosen);
  r.path_counts = all_counts(net, present);
  r.feasible = true;
  for (std::size_t d = 0; d < net.demands.size(); ++d) r.feasible = r.feasible && r.path_counts[d] >= net.demands[d].req;
  return r;
}

CheckResult check_cut_solution(const NetworkInstance& net, const std::vector<int>& removed) {
  if (net.kind != ProblemKind::kKRouteCut) throw PreconditionError("cut check on a design instance");
  check_indices(net, removed);
  std::vector<char> present(net.edges.size(), 1);
  for (int e : removed) {
    if (net.edges[idx(e)].cost.infinite) throw PreconditionError("edge " + std::to_string(e) + " has infinite cost and cannot be removed");
    present[idx(e)] = 0;
  }
  CheckResult r;
  r.cost = sum_costs(net, removed);
  r.path_counts = all_counts(net, present);
  r.feasible = true;
  for (std::size_t d = 0; d < net.demands.size(); ++d) r.feasible = r.feasible && r.path_counts[d] < net.demands[d].req;
  return r;
}

CheckResult check_solution(const NetworkInstance& net, const std::vector<int>& edges) {
  return is_design_problem(net.kind) ? check_design_solution(net, edges) : check_cut_solution(net, edges);
}

namespace {

// Monotone search: selecting more variable edges never hurts feasibility
// (design: edges added; cut: edges removed).
class Search {
 public:
  Search(const NetworkInstance& net, std::vector<int> vars) : net_(net), vars_(std::move(vars)) {
    design_ = is_design_problem(net.kind);
    base_.assign(net.edges.size(), design_ ? 0 : 1);
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
      if (net.edges[e].cost.is_zero()) base_[e] = design_ ? 1 : 0;
    }
    suffix_min_.assign(vars_.size() + 1, Rational(-1));
    for (std::size_t i = vars_.size(); i-- > 0;) {
      const Rational c = cost(i);
      suffix_min_[i] = (suffix_min_[i + 1] < Rational(0) || c < suffix_min_[i + 1]) ? c : suffix_min_[i + 1];
    }
  }

  NetworkOptResult run() {
    NetworkOptResult out;
    out.variables = static_cast<int>(vars_.size());
    std::vector<char> all(vars_.size(), 1);
    if (!feasible(all, vars_.size())) return out;

    // Greedy upper bound: drop the most expensive edges first while
    // feasibility holds.
    std::vector<std::size_t> order(vars_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cost(b) < cost(a); });
    std::vector<char> greedy = all;
    for (std::size_t i : order) {
      greedy[i] = 0;
      if (!feasible(greedy, vars_.size())) greedy[i] = 1;
    }
    bound_ = total(greedy);

    std::vector<char> sel(vars_.size(), 0);
    dfs(0, sel, Rational(0));
    out.nodes = nodes_;
    out.feasible = true;
    const std::vector<char>& pick = found_ ? best_ : greedy;
    out.cost = total(pick);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (pick[i]) out.edges.push_back(vars_[i]);
    }
    return out;
  }

 private:
  Rational cost(std::size_t i) const { return net_.edges[idx(vars_[i])].cost.value; }

  Rational total(const std::vector<char>& sel) const {
    Rational t(0);
    for (std::size_t i = 0; i < sel.size(); ++i) {
      if (sel[i]) t += cost(i);
    }
    return t;
  }

  // Selection of vars[0..decided) from `sel`, every later variable selected.
  bool feasible(const std::vector<char>& sel, std::size_t decided) {
    std::vector<char> present = base_;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const bool chosen = i >= decided || sel[i];
      if (chosen) present[idx(vars_[i])] = design_ ? 1 : 0;
    }
    const std::size_t n = net_.demands.size();
    for (std::size_t step = 0; step < n; ++step) {
      const std::size_t d = (last_fail_ + step) % n;
      const Demand& dem = net_.demands[d];
      FlowOptions opt;
      opt.limit = dem.req;
      const bool met = opcount(net_, dem.s, dem.t, opt, &present).path_count >= dem.req;
      if (met != design_) {
        last_fail_ = d;
        return false;
      }
    }
    return true;
  }

  bool beyond(const Rational& c) const { return found_ ? c >= bound_ : c > bound_; }

  void dfs(std::size_t i, std::vector<char>& sel, const Rational& spent) {
    ++nodes_;
    // Undecided variables are still 0 in `sel`.
    if (feasible(sel, vars_.size())) {
      if (!found_ || spent < bound_) {
        found_ = true;
        bound_ = spent;
        best_ = sel;
      }
      return;
    }
    if (i == vars_.size()) return;
    if (beyond(spent + suffix_min_[i])) return;
    if (!feasible(sel, i)) return;
    const Rational with = spent + cost(i);
    if (!beyond(with)) {
      sel[i] = 1;
      dfs(i + 1, sel, with);
      sel[i] = 0;
    }
    dfs(i + 1, sel, spent);
  }

  const NetworkInstance& net_;
  std::vector<int> vars_;
  bool design_ = true;
  std::vector<char> base_;
  std::vector<Rational> suffix_min_;
  std::size_t last_fail_ = 0;
  bool found_ = false;
  Rational bound_;
  std::vector<char> best_;
  std::int64_t nodes_ = 0;
};

}  // namespace

NetworkOptResult brute_force_network_opt(const NetworkInstance& net, int cap) {
  require_valid(net);
  const std::vector<int> vars = priced_edges(net);
  if (static_cast<int>(vars.size()) > cap) {
    throw CapExceededError("network has " + std::to_string(vars.size()) + " priced edges, cap is " + std::to_string(cap),
                           std::ldexp(1.0, static_cast<int>(vars.size())));
  }
  return Search(net, vars).run();
}

void write_flow_certificate(std::ostream& out, const FlowCertificate& cert) {
  out << "flowcert " << cert.s << ' ' << cert.t << ' ' << cert.path_count << '\n';
  for (const auto& path : cert.witness_paths) {
    out << "path";
    for (int v : path) out << ' ' << v;
    out << '\n';
  }
  if (cert.has_cut) {
    out << "cut";
    for (int v : cert.cut_vertices) out << ' ' << v;
    out << '\n';
  }
  out << "end\n";
}

}  // namespace lcconn
