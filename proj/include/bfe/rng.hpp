#pragma once

#include <cstdint>
#include <random>

namespace bfe {

/// Seeded random source. Every stochastic routine takes one of these explicitly,
/// so independent trials own independent streams and a run is reproducible from
/// its seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal(double mean, double stddev) {
    return std::normal_distribution<double>(mean, stddev)(engine_);
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  /// Binomial draw, used by the exact quantum-projection-noise oracle.
  long binomial(long trials, double p) {
    return std::binomial_distribution<long>(trials, p)(engine_);
  }

  std::uint64_t next_u64() { return engine_(); }

  std::mt19937_64& engine() { return engine_; }

  /// Counter-based sub-seed derivation (splitmix64), so trial k of a run with
  /// master seed s is reproducible in isolation as Rng(derive_stream(s, k)).
  static std::uint64_t derive_stream(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bfe
