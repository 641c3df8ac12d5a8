#pragma once

#include <cstdint>

#include "liegeo/linalg.hpp"

namespace liegeo {

class InnerProduct;

/// SplitMix64 stream. Hand-rolled so sampled values are identical across
/// platforms and standard-library versions; seeded searches must reproduce
/// byte-for-byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Standard normal via Box-Muller.
  double normal();

  /// Derive an independent stream seed from a parent seed and an index.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0x632BE59BD9B4E019ULL * (index + 1)));
    return r.next_u64();
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Vector of independent standard normals.
Vec random_normal_vector(Rng& rng, int n);

/// Unit vector under the given metric.
Vec random_unit_vector(Rng& rng, const InnerProduct& metric);

/// Random symmetric positive-definite Gram matrix with eigenvalues in
/// [1/2, 2]: Q diag(exp u) Q^T with Q from orthonormalizing a normal matrix.
Mat random_spd_gram(Rng& rng, int n);

/// Random matrix with exactly zero trace (normal entries, diagonal recentered).
Mat random_traceless(Rng& rng, int n);

}  // namespace liegeo
