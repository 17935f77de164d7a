#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "helpers.hpp"
#include "tpart/connectivity.hpp"
#include "tpart/generators.hpp"
#include "tpart/oracle.hpp"

using namespace tpart;

TEST_CASE("bruteforce local cut matches the flow computation on hand cases") {
  Tournament t = helpers::three_cycle();
  CHECK(bruteforce_local_cut(t, 1, 0) == 1);
  CHECK(bruteforce_local_cut(t, 1, 0) == local_connectivity(t, 1, 0));
}

TEST_CASE("bruteforce local cut rejects inseparable pairs and oversized inputs") {
  Tournament t = helpers::three_cycle();
  CHECK_THROWS_AS(bruteforce_local_cut(t, 0, 1), std::invalid_argument);  // arc 0->1 present
  Tournament big = random_tournament(13, 5);
  Vertex u = -1, v = -1;
  for (Vertex a = 0; a < 13 && u < 0; ++a)
    for (Vertex b = 0; b < 13; ++b)
      if (a != b && big.arc(b, a)) {
        u = a;
        v = b;
        break;
      }
  CHECK_THROWS_AS(bruteforce_local_cut(big, u, v), std::invalid_argument);
}

TEST_CASE("bruteforce local cut agrees with the flow oracle on random tournaments") {
  for (uint64_t seed = 0; seed < 8; ++seed) {
    Tournament t = random_tournament(9, 100 + seed);
    for (Vertex u = 0; u < 9; ++u)
      for (Vertex v = 0; v < 9; ++v)
        if (u != v && t.arc(v, u)) CHECK(bruteforce_local_cut(t, u, v) == local_connectivity(t, u, v));
  }
}

TEST_CASE("bruteforce partition finds the obvious split of two cycles") {
  Tournament t = helpers::two_cycles_across();
  OracleResult r = bruteforce_partition(t, 1, 2);
  REQUIRE(r.status == OracleResult::Status::found);
  REQUIRE(r.parts.size() == 2);
  PartitionReport rep = verify_partition(t, r.parts, 1);
  CHECK(rep.valid);
}

TEST_CASE("bruteforce partition proves nonexistence on a transitive tournament") {
  Tournament t = helpers::transitive(6);
  OracleResult r = bruteforce_partition(t, 1, 2);
  CHECK(r.status == OracleResult::Status::none);
  CHECK(r.searched_fraction == doctest::Approx(1.0));
}

TEST_CASE("strongly 2-connected sixteen-vertex tournaments split into two strong parts") {
  int tried = 0;
  for (uint64_t seed = 0; tried < 3 && seed < 200; ++seed) {
    Tournament t = random_tournament(16, 700 + seed);
    if (!is_k_connected(t, 2)) continue;
    ++tried;
    OracleResult r = bruteforce_partition(t, 1, 2, 60000);
    REQUIRE(r.status == OracleResult::Status::found);
    CHECK(verify_partition(t, r.parts, 1).valid);
  }
  CHECK(tried == 3);
}

TEST_CASE("mixed-target search handles asymmetric targets and orderings") {
  Tournament t = helpers::two_cycles_across();
  OracleResult r = bruteforce_partition_mixed(t, {1, 1});
  REQUIRE(r.status == OracleResult::Status::found);
  CHECK(verify_partition(t, r.parts, 1).valid);

  // Parts of six vertices can never both be strongly 2-connected.
  OracleResult none = bruteforce_partition_mixed(t, {2, 1});
  CHECK(none.status == OracleResult::Status::none);
  CHECK_THROWS_AS(bruteforce_partition_mixed(t, {}), std::invalid_argument);
}

TEST_CASE("timeout is reported distinctly from nonexistence") {
  Tournament t = random_tournament(18, 3);
  OracleResult r = bruteforce_partition(t, 5, 2, 0);  // impossible budget
  CHECK(r.status == OracleResult::Status::timeout);
  CHECK(r.searched_fraction < 1.0);
}

TEST_CASE("threshold experiment shapes and CSV header") {
  CHECK(threshold_experiment(8, 1, 2, 0, 1000, 1).empty());
  auto rows = threshold_experiment(8, 1, 2, 50, 2000, 42);
  REQUIRE(rows.size() == 50);
  for (const auto& row : rows) {
    CHECK(row.n == 8);
    CHECK(row.k == 1);
    CHECK(row.t == 2);
    if (row.connectivity == 0) CHECK(row.result != "found");
    CHECK((row.result == "found" || row.result == "none" || row.result == "timeout"));
  }
  std::string csv = experiment_csv(rows);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "seed,n,k,t,connectivity,result,elapsed_ms");
  int lines = 0;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) ++lines;
  CHECK(lines == 50);
}

TEST_CASE("threshold experiment is deterministic in its seed") {
  auto a = threshold_experiment(7, 1, 2, 10, 2000, 9);
  auto b = threshold_experiment(7, 1, 2, 10, 2000, 9);
  REQUIRE(a.size() == b.size());
  CHECK(experiment_csv(a) == experiment_csv(b));
}
