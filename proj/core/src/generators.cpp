#include "tpart/generators.hpp"

#include <stdexcept>

#include "tpart/connectivity.hpp"
#include "tpart/rng.hpp"

namespace tpart {

Tournament random_tournament(int n, uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_tournament: negative n");
  Tournament t(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      uint64_t idx = static_cast<uint64_t>(u) * static_cast<uint64_t>(n) + static_cast<uint64_t>(v);
      if (substream(seed, idx) & 1)
        t.orient(u, v);
      else
        t.orient(v, u);
    }
  return t;
}

Tournament rotational_tournament(int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("rotational_tournament: n must be odd and positive");
  Tournament t(n);
  for (Vertex i = 0; i < n; ++i)
    for (int j = 1; j <= (n - 1) / 2; ++j) t.orient(i, (i + j) % n);
  return t;
}

RejectionResult random_k_connected(int n, int k, uint64_t seed, int max_tries) {
  if (n < k + 1) throw std::invalid_argument("random_k_connected: n < k+1");
  if (max_tries < 1) throw std::invalid_argument("random_k_connected: max_tries < 1");
  RejectionResult r;
  for (int i = 0; i < max_tries; ++i) {
    r.tries = i + 1;
    Tournament t = random_tournament(n, substream(seed, static_cast<uint64_t>(i)));
    if (is_k_connected(t, k)) {
      r.tournament = std::move(t);
      return r;
    }
  }
  return r;
}

}  // namespace tpart
