#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lcconn/errors.hpp"

namespace lcconn {

// d-regular multigraph. A self-loop {v, v} adds 2 to the degree of v;
// parallel edges are separate entries.
struct RegularGraph {
  int vertex_count = 0;
  int degree = 0;
  std::vector<std::pair<int, int>> edges;

  // Degree of each vertex recomputed from the edge list.
  std::vector<int> degrees() const;
  bool is_regular() const;

  friend bool operator==(const RegularGraph&, const RegularGraph&) = default;
};

struct SpectralCertificate {
  double lambda2 = 0.0;  // largest |eigenvalue| orthogonal to the all-ones vector
  double c = 0.0;
  double bound = 0.0;  // c * sqrt(d)
  bool pass = false;
  int iterations = 0;
  double residual = 0.0;
};

inline constexpr double kDefaultExpanderConstant = 3.0;
inline constexpr double kDefaultEigenTolerance = 1e-9;
inline constexpr int kDefaultExpanderRetries = 32;

// Configuration model: the n*d half-edges are paired by a uniformly random
// perfect matching. Loops and parallel edges are kept. Throws
// PreconditionError if n*d is odd or d < 1.
RegularGraph random_regular(int n, int d, std::uint64_t seed);

// Power iteration on A^2 restricted to the complement of the all-ones
// vector; the square captures eigenvalues of both signs. `c` only sets the
// pass bound. Throws PreconditionError on a non-regular graph.
SpectralCertificate second_eigenvalue(const RegularGraph& g, double c = kDefaultExpanderConstant,
                                      double tol = kDefaultEigenTolerance);

struct ExpanderResult {
  RegularGraph graph;
  SpectralCertificate certificate;
  int retries = 0;  // failed attempts before the returned graph
};

class ExpanderNotFoundError : public RetriesExhaustedError {
 public:
  ExpanderNotFoundError(const std::string& what, SpectralCertificate best)
      : RetriesExhaustedError(what), best_(best) {}
  const SpectralCertificate& best() const { return best_; }

 private:
  SpectralCertificate best_;
};

// First graph of the seed chain random_regular(n, d, derive_seed(seed, i)),
// i = 0, 1, ..., whose certificate passes lambda2 <= c * sqrt(d).
ExpanderResult build_expander(int n, int d, double c, std::uint64_t seed,
                              int max_retries = kDefaultExpanderRetries);

}  // namespace lcconn
