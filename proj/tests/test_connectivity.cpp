#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "tpart/connectivity.hpp"
#include "tpart/generators.hpp"
#include "tpart/oracle.hpp"
#include "tpart/path_system.hpp"

using namespace tpart;

TEST_CASE("local connectivity on the 3-cycle") {
  Tournament t = helpers::three_cycle();
  CHECK(local_connectivity(t, 1, 0) == 1);  // only path 1 -> 2 -> 0
  CHECK(local_connectivity(t, 0, 1) == 2);  // direct arc: n - 1
}

TEST_CASE("rotational-7 local cut agrees with subset enumeration") {
  Tournament t = rotational_tournament(7);
  CHECK(local_connectivity(t, 1, 0) == bruteforce_local_cut(t, 1, 0));  // arc 0 -> 1 makes (1,0) separable
}

TEST_CASE("local min cut really separates") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Tournament t = random_tournament(11, seed);
    for (Vertex u = 0; u < 11; ++u)
      for (Vertex v = 0; v < 11; ++v) {
        if (u == v || t.arc(u, v)) continue;
        VertexSet cut = local_min_cut(t, u, v);
        CHECK(static_cast<int>(cut.count()) == local_connectivity(t, u, v));
        VertexSet within = cut.complement();
        REQUIRE(within.contains(u));
        REQUIRE(within.contains(v));
        CHECK_FALSE(reach_forward(t, u, within).contains(v));
      }
  }
}

TEST_CASE("k-connectivity basics") {
  Tournament c = helpers::three_cycle();
  CHECK(is_k_connected(c, 1));
  CutWitness w;
  CHECK_FALSE(is_k_connected(c, 2, &w));
  if (w.kind == CutWitness::Kind::separator) CHECK(w.separator.count() == 1);
}

TEST_CASE("rotational-7 golden value matches exhaustive separator enumeration") {
  Tournament t = rotational_tournament(7);
  CHECK(connectivity(t) == 3);
  // exhaustive: removing any 2 vertices keeps it strongly connected
  for (Vertex a = 0; a < 7; ++a)
    for (Vertex b = a + 1; b < 7; ++b) {
      VertexSet rest(7);
      rest.fill_all();
      rest.remove(a);
      rest.remove(b);
      CHECK(strongly_connected_subset(t, rest));
    }
}

TEST_CASE("connectivity of tiny tournaments") {
  CHECK(connectivity(helpers::transitive(3)) == 0);
  CHECK(connectivity(helpers::three_cycle()) == 1);
  // rotational-9 against exhaustive separator enumeration
  Tournament t = rotational_tournament(9);
  int brute = 9 - 1;
  for (int mask = 0; mask < (1 << 9) && brute > 0; ++mask) {
    VertexSet rest(9);
    for (Vertex v = 0; v < 9; ++v)
      if (!(mask >> v & 1)) rest.add(v);
    if (rest.count() >= 2 && !strongly_connected_subset(t, rest))
      brute = std::min(brute, static_cast<int>(9 - rest.count()));
  }
  CHECK(connectivity(t) == brute);
}

TEST_CASE("verify_partition on the doubled cycle") {
  Tournament t = helpers::two_cycles_across();
  std::vector<VertexSet> parts = {helpers::vs(6, {0, 1, 2}), helpers::vs(6, {3, 4, 5})};
  CHECK(verify_partition(t, parts, 1).valid);

  PartitionReport bad = verify_partition(t, parts, 2);
  CHECK_FALSE(bad.valid);
  CHECK(bad.failures.size() == 2);

  std::vector<VertexSet> missing = {helpers::vs(6, {0, 1, 2}), helpers::vs(6, {3, 4})};
  PartitionReport rep = verify_partition(t, missing, 1);
  CHECK_FALSE(rep.valid);
  CHECK_FALSE(rep.covers);
  REQUIRE(rep.uncovered.size() == 1);
  CHECK(rep.uncovered[0] == 5);
}

TEST_CASE("max_disjoint_paths basics") {
  Tournament t = helpers::three_cycle();
  auto r = max_disjoint_paths(t, helpers::vs(3, {0}), helpers::vs(3, {2}), VertexSet(3), 1);
  REQUIRE(r.feasible);
  CHECK(r.system.paths == std::vector<std::vector<Vertex>>{{0, 1, 2}});

  auto two = max_disjoint_paths(t, helpers::vs(3, {0}), helpers::vs(3, {2}), VertexSet(3), 2);
  CHECK_FALSE(two.feasible);
  CHECK(two.achieved == 1);
}

TEST_CASE("disjoint path systems are valid and respect forbidden sets") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Tournament t = random_tournament(30, seed);
    VertexSet sources = helpers::vs(30, {0, 1, 2});
    VertexSet sinks = helpers::vs(30, {27, 28, 29});
    VertexSet forbidden = helpers::vs(30, {10, 11, 12, 13});
    auto r = max_disjoint_paths(t, sources, sinks, forbidden, 3);
    if (!r.feasible) continue;
    CHECK(verify_path_system(t, r.system));
    for (const auto& p : r.system.paths)
      for (size_t i = 1; i + 1 < p.size(); ++i) CHECK_FALSE(forbidden.contains(p[i]));
  }
}
