// Wall-clock timings for the hot paths: connectivity queries, generation,
// connector construction and the exhaustive oracle. Prints one line per
// benchmark; not a pass/fail gate.

#include <chrono>
#include <cstdio>
#include <functional>

#include "tpart/connectivity.hpp"
#include "tpart/gadgets.hpp"
#include "tpart/generators.hpp"
#include "tpart/oracle.hpp"
#include "tpart/profile.hpp"

using namespace tpart;
using Clock = std::chrono::steady_clock;

namespace {

void bench(const char* name, int reps, const std::function<void()>& fn) {
  auto start = Clock::now();
  for (int i = 0; i < reps; ++i) fn();
  double total_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  std::printf("%-40s %8.2f ms/op  (%d reps)\n", name, total_ms / reps, reps);
}

}  // namespace

int main() {
  Tournament small = random_tournament(100, 1);
  Tournament mid = random_tournament(300, 2);
  Tournament big = random_tournament(4000, 3);
  ConstantsProfile desk = ConstantsProfile::desk();

  bench("random_tournament n=4000", 5, [] { random_tournament(4000, 4); });
  bench("is_k_connected k=3 n=300", 3, [&] { is_k_connected(mid, 3); });
  bench("local_connectivity all pairs n=100", 1, [&] {
    for (Vertex u = 0; u < 100; ++u)
      for (Vertex v = 0; v < 100; ++v)
        if (u != v && small.arc(v, u)) local_connectivity(small, u, v);
  });
  bench("build_gadget_family n=4000", 3, [&] { build_gadget_family(big, 1, 2, desk, 0); });
  bench("bruteforce_partition n=14", 3, [] {
    Tournament t = random_tournament(14, 7);
    bruteforce_partition(t, 1, 2, 60000);
  });
  return 0;
}
