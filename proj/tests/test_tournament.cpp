#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "helpers.hpp"
#include "tpart/generators.hpp"
#include "tpart/tournament.hpp"

using namespace tpart;

TEST_CASE("build accepts a 3-cycle") {
  Tournament t = helpers::three_cycle();
  CHECK(t.size() == 3);
  CHECK(t.arc(0, 1));
  CHECK(t.arc(1, 2));
  CHECK(t.arc(2, 0));
  CHECK_FALSE(t.arc(1, 0));
}

TEST_CASE("build rejects a duplicated pair naming it") {
  try {
    Tournament::build(3, {{0, 1}, {1, 0}, {2, 0}});
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    CHECK(msg.find("0") != std::string::npos);
    CHECK(msg.find("1") != std::string::npos);
  }
}

TEST_CASE("build rejects a missing pair") {
  CHECK_THROWS_AS(Tournament::build(3, {{0, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("degrees") {
  Tournament c = helpers::three_cycle();
  CHECK(c.out_degree(0) == 1);
  CHECK(c.in_degree(0) == 1);
  Tournament tr = helpers::transitive(3);
  CHECK(tr.out_degree(0) == 2);
  CHECK(tr.in_degree(2) == 2);
}

TEST_CASE("induced subtournament") {
  Tournament t = helpers::three_cycle();
  auto [whole, ids] = t.induced(helpers::vs(3, {0, 1, 2}));
  CHECK(whole == t);
  CHECK(ids == std::vector<Vertex>{0, 1, 2});

  auto [sub, map] = t.induced(helpers::vs(3, {0, 1}));
  CHECK(sub.size() == 2);
  CHECK(sub.arc(0, 1));  // the single arc 0 -> 1 survives relabeling
}

TEST_CASE("reversed flips every arc") {
  Tournament t = random_tournament(17, 5);
  Tournament r = t.reversed();
  for (Vertex u = 0; u < 17; ++u)
    for (Vertex v = 0; v < 17; ++v)
      if (u != v) CHECK(t.arc(u, v) == r.arc(v, u));
  CHECK(r.reversed() == t);
}

TEST_CASE("strong connectivity predicate") {
  CHECK(is_strongly_connected(helpers::three_cycle()));
  CHECK_FALSE(is_strongly_connected(helpers::transitive(3)));
}

TEST_CASE("reachability within a subset") {
  Tournament t = helpers::two_cycles_across();
  VertexSet first = helpers::vs(6, {0, 1, 2});
  CHECK(reach_forward(t, 0, first) == first);
  VertexSet all(6);
  all.fill_all();
  // nothing in the second cycle reaches back
  CHECK((reach_forward(t, 3, all) & first).empty());
}

TEST_CASE("trn round-trip") {
  for (uint64_t seed : {1u, 2u, 3u}) {
    Tournament t = random_tournament(23, seed);
    std::istringstream in(to_trn(t));
    CHECK(from_trn(in) == t);
  }
}

TEST_CASE("neighbour set counting matches arcs") {
  Tournament t = random_tournament(40, 9);
  VertexSet s = helpers::vs(40, {3, 7, 11, 25, 39});
  for (Vertex u = 0; u < 40; ++u) {
    int expect = 0;
    for (Vertex v = s.first(); v >= 0; v = s.next(v))
      if (v != u && t.arc(u, v)) ++expect;
    CHECK(t.out_count_in(u, s) == expect);
    CHECK(t.has_out_neighbour_in(u, s) == (expect > 0));
  }
}
