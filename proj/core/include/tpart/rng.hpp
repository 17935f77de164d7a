#pragma once

#include <cstdint>

namespace tpart {

// SplitMix64. A fixed, self-contained generator so that seeded outputs are
// stable across platforms and standard-library versions.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic sub-stream key: hash of (seed, index). Used to make
/// per-pair / per-round randomness independent of iteration order.
inline uint64_t substream(uint64_t seed, uint64_t index) { return splitmix64(seed ^ splitmix64(index)); }

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  bool coin() { return next() & 1; }

  /// Uniform in [0, m); m > 0. Rejection-free modulo is fine here: m is
  /// tiny relative to 2^64 in every use, so the bias is negligible and,
  /// more importantly, deterministic.
  uint64_t below(uint64_t m) { return next() % m; }

  double uniform() { return (next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

}  // namespace tpart
