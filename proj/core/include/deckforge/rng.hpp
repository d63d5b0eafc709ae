#pragma once

#include <cstdint>
#include <random>

namespace deckforge {

/// Deterministic random source. The engine (mt19937_64) has a
/// standard-specified output sequence, and all sampling on top of it is
/// implemented here rather than via std distributions, whose output is
/// implementation-defined. Identical seeds therefore produce identical
/// draws on every platform, which the reproducibility tests rely on.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  /// Unbiased integer in [0, n). n must be >= 1.
  uint64_t uniform_u64(uint64_t n);

  size_t uniform_index(size_t n) { return static_cast<size_t>(uniform_u64(n)); }

  /// Inclusive integer range.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(uniform_u64(static_cast<uint64_t>(hi - lo) + 1));
  }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform_range(double lo, double hi) { return lo + (hi - lo) * uniform_real(); }

  /// Box-Muller; consumes exactly two draws per call.
  double normal(double mean, double sigma);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to derive independent per-slide and
/// per-round rng streams from one master seed.
uint64_t mix64(uint64_t x);

uint64_t hash64(uint64_t a, uint64_t b);
uint64_t hash64(uint64_t a, uint64_t b, uint64_t c);

}  // namespace deckforge
