#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace lcconn {

// splitmix64 finalizer; used to derive independent seeds.
std::uint64_t mix64(std::uint64_t x);

// Seed of the named substream `name` under `seed`. Stages draw from their
// own substream so adding a stage never perturbs another stage's draws.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view name);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Deterministic random source. The engine is fully specified by the
// standard; the bounded draws below are implemented here rather than with
// <random> distributions, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double unit();

  bool bernoulli(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lcconn
