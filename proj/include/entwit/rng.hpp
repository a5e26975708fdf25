#pragma once

#include <cstdint>
#include <random>

namespace entwit {

// Seedable, splittable randomness with pinned bit-level conversions so
// seeded runs are byte-identical everywhere. Never reach for std
// distributions here: their output is implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

  // Independent child stream; deterministic in (seed, stream).
  Rng split(uint64_t stream) const {
    return Rng(splitmix64(seed_ ^ (0x9e3779b97f4a7c15ull + stream)));
  }

  uint64_t next_u64() { return eng_(); }
  // 53 uniform mantissa bits in [0,1).
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return next_double() < p; }
  bool next_bit() { return next_u64() >> 63; }
  // Uniform in [0, bound) by rejection; exact, no modulo bias.
  uint64_t next_below(uint64_t bound);

  uint64_t seed() const { return seed_; }

 private:
  static uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  uint64_t seed_;
  std::mt19937_64 eng_;
};

inline uint64_t Rng::next_below(uint64_t bound) {
  if (bound == 0) return 0;
  const uint64_t limit = ~uint64_t(0) - ~uint64_t(0) % bound;
  uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % bound;
}

}  // namespace entwit
