#pragma once

#include <cstdint>
#include <optional>

#include "tpart/tournament.hpp"

namespace tpart {

/// Each unordered pair oriented by an independent fair coin drawn from a
/// per-pair sub-stream of `seed`; output is independent of iteration order.
Tournament random_tournament(int n, uint64_t seed);

/// i -> i+j (mod n) for j = 1..(n-1)/2; n must be odd.
Tournament rotational_tournament(int n);

struct RejectionResult {
  std::optional<Tournament> tournament;
  int tries = 0;  // attempts consumed (also set when exhausted)
};

/// Rejection sampling filtered by is_k_connected. Requires n >= k+1.
RejectionResult random_k_connected(int n, int k, uint64_t seed, int max_tries);

}  // namespace tpart
