#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace minviol {

/// SplitMix64 generator. Chosen over std::mt19937_64 because every draw is a
/// handful of integer ops and the stream is identical on every platform,
/// which the reproducibility contract (byte-identical outputs for a fixed
/// seed) depends on.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Exponential(1) variate.
  double exponential() {
    double u = uniform();
    // uniform() can return exactly 0; clamp away from log(0).
    if (u <= 0.0) u = 0x1.0p-53;
    return -std::log(u);
  }

  /// Index into a nonnegative weight vector proportional to its entries.
  /// Weights need not be normalized. Falls back to the last positive entry
  /// on accumulated rounding.
  size_t discrete(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double u = uniform() * total;
    double acc = 0.0;
    size_t last = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] <= 0.0) continue;
      acc += weights[i];
      last = i;
      if (u < acc) return i;
    }
    return last;
  }
};

/// Derives an independent stream seed from a base seed, stable across runs.
inline uint64_t derive_seed(uint64_t base, uint64_t stream) {
  SplitMix64 g(base ^ (0x632be59bd9b4e019ULL * (stream + 1)));
  g.next();
  return g.next();
}

}  // namespace minviol
