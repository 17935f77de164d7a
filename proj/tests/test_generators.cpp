#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "tpart/connectivity.hpp"
#include "tpart/generators.hpp"

using namespace tpart;

TEST_CASE("random tournament determinism and completeness") {
  CHECK(random_tournament(1, 7).size() == 1);
  CHECK(random_tournament(5, 42) == random_tournament(5, 42));
  CHECK_FALSE(random_tournament(20, 1) == random_tournament(20, 2));

  Tournament t = random_tournament(20, 3);
  for (Vertex u = 0; u < 20; ++u)
    for (Vertex v = u + 1; v < 20; ++v) CHECK(t.arc(u, v) != t.arc(v, u));
}

TEST_CASE("mean out-degree is centered") {
  const int n = 201;
  double sum = 0;
  long long cnt = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    Tournament t = random_tournament(n, seed);
    for (Vertex v = 0; v < n; ++v) {
      sum += t.out_degree(v);
      ++cnt;
    }
  }
  double mean = sum / cnt;
  CHECK(mean > (n - 1) / 2.0 - 3);
  CHECK(mean < (n - 1) / 2.0 + 3);
}

TEST_CASE("rotational tournaments") {
  CHECK(rotational_tournament(3) == helpers::three_cycle());
  Tournament t = rotational_tournament(7);
  for (Vertex v = 0; v < 7; ++v) CHECK(t.out_degree(v) == 3);
  CHECK_THROWS_AS(rotational_tournament(6), std::invalid_argument);
}

TEST_CASE("rejection sampling towards k-connectivity") {
  auto easy = random_k_connected(3, 1, 1, 64);
  REQUIRE(easy.tournament.has_value());
  CHECK(is_k_connected(*easy.tournament, 1));

  auto mid = random_k_connected(16, 2, 1, 256);
  REQUIRE(mid.tournament.has_value());
  CHECK(is_k_connected(*mid.tournament, 2));

  CHECK_THROWS_AS(random_k_connected(2, 2, 1, 8), std::invalid_argument);
}
