#include "deckforge/rng.hpp"

#include <cmath>
#include <limits>

namespace deckforge {

uint64_t Rng::uniform_u64(uint64_t n) {
  // Rejection sampling over the largest multiple of n below 2^64.
  const uint64_t rem = std::numeric_limits<uint64_t>::max() % n;
  if (rem == n - 1) return next_u64() % n;  // n divides 2^64
  const uint64_t limit = std::numeric_limits<uint64_t>::max() - rem;
  for (;;) {
    const uint64_t r = next_u64();
    if (r < limit) return r % n;
  }
}

double Rng::normal(double mean, double sigma) {
  // u1 in (0,1] so the log is finite.
  const double u1 = 1.0 - uniform_real();
  const double u2 = uniform_real();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  return mean + sigma * mag * std::cos(2.0 * M_PI * u2);
}

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t hash64(uint64_t a, uint64_t b) { return mix64(mix64(a) ^ b); }

uint64_t hash64(uint64_t a, uint64_t b, uint64_t c) { return mix64(hash64(a, b) ^ c); }

}  // namespace deckforge
