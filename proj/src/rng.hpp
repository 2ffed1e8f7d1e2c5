#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace fedvb {

// splitmix64 finalizer; used both for seeding and for deriving substreams.
std::uint64_t mix64(std::uint64_t x);

// Derives an independent stream seed from (master, a, b), e.g. (seed, round,
// client). Client-level results must not depend on execution order, so every
// concurrent unit gets its own stream.
std::uint64_t derive_stream(std::uint64_t master, std::uint64_t a, std::uint64_t b);

// Deterministic random source with pinned distribution algorithms. The
// standard distributions are implementation-defined, which would make the
// byte-identical reproducibility contract depend on the standard library, so
// the transforms live here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi);

  // Uniform integer on [0, n); n must be positive. Lemire's method.
  std::size_t uniform_index(std::size_t n);

  // Standard normal via Box-Muller (second draw cached).
  double normal();

  // Gamma(shape, 1) via Marsaglia-Tsang; shape must be positive.
  double gamma(double shape);

  // Dirichlet(alpha * 1_k) over k components.
  std::vector<double> dirichlet(double alpha, std::size_t k);

  std::vector<double> normal_vector(std::size_t n);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[uniform_index(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace fedvb
