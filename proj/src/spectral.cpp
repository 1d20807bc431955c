#include "lcconn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lcconn/rng.hpp"

namespace lcconn {

std::vector<int> RegularGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(vertex_count), 0);
  for (auto [a, b] : edges) {
    ++deg[static_cast<std::size_t>(a)];
    ++deg[static_cast<std::size_t>(b)];
  }
  return deg;
}

bool RegularGraph::is_regular() const {
  const auto deg = degrees();
  return std::all_of(deg.begin(), deg.end(), [this](int x) { return x == degree; });
}

RegularGraph random_regular(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 1) throw PreconditionError("random_regular needs n >= 1 and d >= 1");
  if ((static_cast<long long>(n) * d) % 2 != 0) {
    throw PreconditionError("random_regular needs n*d even, got n=" + std::to_string(n) +
                            " d=" + std::to_string(d));
  }
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < d; ++i) stubs.push_back(v);
  }
  Rng rng(seed);
  rng.shuffle(stubs);
  RegularGraph g{n, d, {}};
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    g.edges.emplace_back(std::min(stubs[i], stubs[i + 1]), std::max(stubs[i], stubs[i + 1]));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

namespace {

void apply_adjacency(const RegularGraph& g, const std::vector<double>& x, std::vector<double>& y) {
  std::fill(y.begin(), y.end(), 0.0);
  for (auto [a, b] : g.edges) {
    const auto ia = static_cast<std::size_t>(a);
    const auto ib = static_cast<std::size_t>(b);
    if (a == b) {
      y[ia] += 2.0 * x[ia];
    } else {
      y[ia] += x[ib];
      y[ib] += x[ia];
    }
  }
}

void remove_mean(std::vector<double>& x) {
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  for (double& v : x) v -= mean;
}

double norm(const std::vector<double>& x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

}  // namespace

SpectralCertificate second_eigenvalue(const RegularGraph& g, double c, double tol) {
  if (!g.is_regular()) throw PreconditionError("second_eigenvalue needs a regular graph");
  SpectralCertificate cert;
  cert.c = c;
  cert.bound = c * std::sqrt(static_cast<double>(g.degree));

  const auto n = static_cast<std::size_t>(g.vertex_count);
  if (n < 2) {
    cert.pass = true;
    return cert;
  }

  // Fixed start vector so certificates are reproducible.
  Rng rng(0x5eedULL);
  std::vector<double> x(n);
  for (double& v : x) v = rng.unit() - 0.5;
  remove_mean(x);
  double len = norm(x);
  if (len == 0.0) {
    x[0] = 1.0;
    x[1] = -1.0;
    len = std::sqrt(2.0);
  }
  for (double& v : x) v /= len;

  const double ln = std::log(static_cast<double>(n));
  const int cap = std::max(20000, static_cast<int>(10.0 * static_cast<double>(n) * std::max(ln, 1.0)));

  std::vector<double> ax(n);
  std::vector<double> bx(n);
  double mu = 0.0;
  double residual = 0.0;
  int it = 0;
  for (; it < cap; ++it) {
    apply_adjacency(g, x, ax);
    apply_adjacency(g, ax, bx);
    remove_mean(bx);
    mu = std::inner_product(x.begin(), x.end(), bx.begin(), 0.0);
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) r2 += (bx[i] - mu * x[i]) * (bx[i] - mu * x[i]);
    residual = std::sqrt(r2);
    const double bn = norm(bx);
    if (bn == 0.0) {
      mu = 0.0;
      residual = 0.0;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = bx[i] / bn;
    if (residual <= tol * std::max(1.0, mu)) break;
  }
  cert.iterations = it + 1;
  cert.residual = residual;
  cert.lambda2 = std::sqrt(std::max(0.0, mu));
  cert.pass = cert.lambda2 <= cert.bound + tol;
  return cert;
}

ExpanderResult build_expander(int n, int d, double c, std::uint64_t seed, int max_retries) {
  SpectralCertificate best;
  best.lambda2 = INFINITY;
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    RegularGraph g = random_regular(n, d, derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    SpectralCertificate cert = second_eigenvalue(g, c);
    if (cert.pass) return ExpanderResult{std::move(g), cert, attempt};
    if (cert.lambda2 < best.lambda2) best = cert;
  }
  throw ExpanderNotFoundError("no expander with lambda2 <= " + std::to_string(c) + "*sqrt(" +
                                  std::to_string(d) + ") on " + std::to_string(n) +
                                  " vertices within " + std::to_string(max_retries) + " retries",
                              best);
}

}  // namespace lcconn
