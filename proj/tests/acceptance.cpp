// Acceptance gate: one self-contained check per release criterion, each
// printing a single PASS/FAIL line. Exit status is nonzero if any check
// fails. argv[1] is the path to the command-line binary (used by the
// reproducibility check).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tpart/availability.hpp"
#include "tpart/completion.hpp"
#include "tpart/connectivity.hpp"
#include "tpart/gadgets.hpp"
#include "tpart/generators.hpp"
#include "tpart/oracle.hpp"
#include "tpart/path_system.hpp"
#include "tpart/prob_bounds.hpp"
#include "tpart/profile.hpp"
#include "tpart/rng.hpp"
#include "tpart/tournament.hpp"

using namespace tpart;
using Clock = std::chrono::steady_clock;

namespace {

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// All tournaments on n vertices, one orientation bit per unordered pair.
std::vector<Tournament> all_tournaments(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Tournament> out;
  out.reserve(uint64_t{1} << pairs.size());
  for (uint64_t mask = 0; mask < (uint64_t{1} << pairs.size()); ++mask) {
    Tournament t(n);
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (mask & (uint64_t{1} << i))
        t.orient(pairs[i].first, pairs[i].second);
      else
        t.orient(pairs[i].second, pairs[i].first);
    }
    out.push_back(std::move(t));
  }
  return out;
}

bool flow_matches_bruteforce(const Tournament& t) {
  const int n = t.size();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || t.arc(u, v)) continue;  // separable pairs only (arc v->u)
      if (local_connectivity(t, u, v) != bruteforce_local_cut(t, u, v, 16)) return false;
    }
  return true;
}

// 1. Flow-based local connectivity equals exhaustive minimum cuts: every
//    tournament on up to 6 vertices plus 500 random ones on 7..10 vertices.
bool crit_local_connectivity() {
  auto start = Clock::now();
  for (int n = 2; n <= 6; ++n)
    for (const Tournament& t : all_tournaments(n))
      if (!flow_matches_bruteforce(t)) return false;
  for (uint64_t seed = 0; seed < 500; ++seed) {
    int n = 7 + static_cast<int>(seed % 4);
    if (!flow_matches_bruteforce(random_tournament(n, 1000 + seed))) return false;
  }
  return ms_since(start) <= 5 * 60 * 1000;
}

// Exhaustive definition check: n >= k+1 and no (k-1)-subset disconnects.
bool kconn_by_separators(const Tournament& t, int k) {
  const int n = t.size();
  if (n < k + 1) return false;
  // enumerate all subsets of size k-1
  std::vector<int> idx(k - 1);
  for (int i = 0; i < k - 1; ++i) idx[i] = i;
  VertexSet all(n);
  all.fill_all();
  if (k == 1) return strongly_connected_subset(t, all);
  while (true) {
    VertexSet rest = all;
    for (int i : idx) rest.remove(i);
    if (!strongly_connected_subset(t, rest)) return false;
    int pos = k - 2;
    while (pos >= 0 && idx[pos] == n - (k - 1) + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k - 1; ++i) idx[i] = idx[i - 1] + 1;
  }
  return true;
}

// 2. is_k_connected agrees with the separator-enumeration definition.
bool crit_definition_equivalence() {
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    int n = 3 + static_cast<int>(seed % 6);  // 3..8
    Tournament t = random_tournament(n, 2000 + seed);
    for (int k = 1; k <= 3; ++k)
      if (is_k_connected(t, k) != kconn_by_separators(t, k)) return false;
  }
  return true;
}

// 3. Every strongly 2-connected 16-vertex tournament splits into two
//    strongly connected parts (100 filtered random instances, < 60 s each).
bool crit_two_connected_split() {
  int done = 0;
  for (uint64_t seed = 0; done < 100; ++seed) {
    if (seed > 5000) return false;  // filter failed to produce instances
    Tournament t = random_tournament(16, 3000 + seed);
    if (!is_k_connected(t, 2)) continue;
    ++done;
    auto start = Clock::now();
    OracleResult r = bruteforce_partition(t, 1, 2, 60000);
    if (r.status != OracleResult::Status::found) return false;
    if (!verify_partition(t, r.parts, 1).valid) return false;
    if (ms_since(start) >= 60000) return false;
  }
  return true;
}

// 4. Mixed-target search with targets (1,1) succeeds on 100 random
//    4-connected tournaments, 11..14 vertices.
bool crit_mixed_targets() {
  int done = 0;
  for (uint64_t seed = 0; done < 100; ++seed) {
    if (seed > 2000) return false;
    int n = 11 + static_cast<int>(seed % 4);
    auto gen = random_k_connected(n, 4, 4000 + seed, 5000);
    if (!gen.tournament) continue;
    ++done;
    OracleResult r = bruteforce_partition_mixed(*gen.tournament, {1, 1}, 60000);
    if (r.status != OracleResult::Status::found) return false;
    if (!verify_partition(*gen.tournament, r.parts, 1).valid) return false;
  }
  return true;
}

// 5. Monte Carlo failure frequency stays within each analytic bound plus
//    three binomial standard deviations (1e5 trials per scenario).
bool crit_concentration() {
  const long long trials = 100000;
  std::vector<Scenario> scenarios = {
      Scenario::make_hoeffding(std::vector<double>(100, 1.0), 1, 8, 1),
      Scenario::make_hoeffding(std::vector<double>(100, 1.0), 1, 24, 1),
      Scenario::make_hoeffding(std::vector<double>(50, 2.0), 2, 20, 2),
      Scenario::make_markov(1000, 0.1),
      Scenario::make_markov(500, 0.3),
      Scenario::make_chernoff(100, 0.5, 0.3, Tail::lower),
      Scenario::make_chernoff(100, 0.5, 0.3, Tail::upper),
      Scenario::make_chernoff(400, 0.25, 0.3, Tail::lower),
      Scenario::make_chernoff(400, 0.25, 0.3, Tail::upper),
  };
  uint64_t seed = 5000;
  for (const Scenario& sc : scenarios) {
    double bound = std::min(1.0, sc.analytic().bound);
    double freq = monte_carlo_validate(sc, trials, seed++);
    double sigma = std::sqrt(bound * (1 - bound) / static_cast<double>(trials));
    if (freq > bound + 3 * sigma + 1e-12) return false;
  }
  return true;
}

// 6. Structural guarantees of the connector construction: disjointness and
//    size budgets (G1-G4), backward chords on every path, and the greedy
//    dominating-sequence halving bound, on 20 desk-scale builds.
bool crit_gadget_structure() {
  ConstantsProfile prof = ConstantsProfile::desk();
  int successes = 0;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Tournament t = random_tournament(4000, 6000 + seed);
    auto res = build_gadget_family(t, 1, 2, prof, seed);
    if (!res.ok()) continue;
    ++successes;
    const GadgetFamily& fam = *res.value;
    Tournament oriented = fam.reversed ? t.reversed() : t;
    GadgetReport rep = verify_gadget_properties(oriented, fam, prof);
    if (!rep.g1_to_g4()) return false;
    for (const Gadget& g : fam.gadgets) {
      PathSystem ps;
      ps.paths = {g.path};
      ps.terminals = {{g.path.front(), g.path.back()}};
      ps.forbidden = VertexSet(oriented.size());
      if (!verify_backward_chords(oriented, ps)) return false;
    }
    // Halving bound, exercised with a real cap on each hub of the build.
    for (const Gadget& g : fam.gadgets) {
      std::vector<int> trace;
      build_dominating_seq(oriented, g.hub_in, oriented.in_set(g.hub_in), 12, SeqDirection::in, &trace);
      double budget = oriented.in_degree(g.hub_in);
      for (size_t j = 0; j < trace.size(); ++j, budget /= 2)
        if (trace[j] > budget) return false;
      trace.clear();
      build_dominating_seq(oriented, g.hub_out, oriented.out_set(g.hub_out), 12, SeqDirection::out, &trace);
      budget = oriented.out_degree(g.hub_out);
      for (size_t j = 0; j < trace.size(); ++j, budget /= 2)
        if (trace[j] > budget) return false;
    }
  }
  return successes > 0;
}

PathSystem random_path_system(const Tournament& t, Rng& rng) {
  const int n = t.size();
  PathSystem ps;
  ps.forbidden = VertexSet(n);
  VertexSet used(n);
  int paths = 1 + static_cast<int>(rng.below(4));
  for (int p = 0; p < paths; ++p) {
    Vertex start = static_cast<Vertex>(rng.below(n));
    if (used.contains(start)) continue;
    std::vector<Vertex> path{start};
    used.add(start);
    int len = 1 + static_cast<int>(rng.below(12));
    for (int step = 0; step < len; ++step) {
      VertexSet cand = t.out_set(path.back()) - used;
      if (cand.empty()) break;
      // pick a pseudo-random element
      int pick = static_cast<int>(rng.below(cand.count()));
      Vertex v = cand.first();
      while (pick-- > 0) v = cand.next(v);
      path.push_back(v);
      used.add(v);
    }
    ps.paths.push_back(path);
    ps.terminals.emplace_back(path.front(), path.back());
  }
  return ps;
}

// 7. Path-system minimization never grows the covered set and is idempotent.
bool crit_minimization() {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    int n = 20 + static_cast<int>((seed * 7) % 181);  // up to 200
    Tournament t = random_tournament(n, 7000 + seed);
    Rng rng(7500 + seed);
    PathSystem ps = random_path_system(t, rng);
    if (!verify_path_system(t, ps)) return false;
    int before = covered_vertices(ps);
    PathSystem min1 = minimize_path_system(t, ps);
    if (!verify_path_system(t, min1)) return false;
    if (covered_vertices(min1) > before) return false;
    PathSystem min2 = minimize_path_system(t, min1);
    if (covered_vertices(min2) != covered_vertices(min1)) return false;
    if (min2.paths != min1.paths) return false;
  }
  return true;
}

// 8. Pipeline soundness: every issued certificate verifies; every failure
//    carries a stage transcript. The success rate is reported, not asserted.
bool crit_pipeline_soundness() {
  ConstantsProfile prof = ConstantsProfile::desk();
  int issued = 0, verified = 0, failures_with_transcript = 0, failures = 0;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    int n = 2000 + static_cast<int>((seed * 61) % 3001);  // 2000..5000
    Tournament t = random_tournament(n, 8000 + seed);
    StageLog log;
    auto res = partition_tournament(t, 1, 2, prof, seed, 8, &log);
    if (res.ok()) {
      ++issued;
      if (verify_partition(t, res.value->parts, 1).valid) ++verified;
    } else {
      ++failures;
      if (!res.failure.stage.empty() && !log.empty()) ++failures_with_transcript;
    }
  }
  std::printf("    pipeline issue rate: %d/50 issued, %d verified, %d/%d failures carry a transcript\n", issued,
              verified, failures_with_transcript, failures);
  return issued == verified && failures == failures_with_transcript;
}

// 9. Whenever the pipeline issues a certificate on a small instance the
//    exhaustive oracle must agree a partition exists.
bool crit_cross_oracle() {
  ConstantsProfile prof = ConstantsProfile::desk();
  int issued = 0;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    int n = 6 + static_cast<int>(seed % 15);  // 6..20
    Tournament t = random_tournament(n, 9000 + seed);
    auto res = partition_tournament(t, 1, 2, prof, seed, 4);
    if (!res.ok()) continue;
    ++issued;
    OracleResult oracle = bruteforce_partition(t, 1, 2, 60000);
    if (oracle.status == OracleResult::Status::none) return false;
  }
  std::printf("    cross-oracle: %d/200 small instances issued a certificate\n", issued);
  return true;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 10. Byte-identical reruns: each command run twice with the same seed must
//     produce identical stdout, stderr and output files.
bool crit_reproducibility(const std::string& cli) {
  if (std::system("rm -rf accept_tmp && mkdir -p accept_tmp") != 0) return false;
  for (uint64_t seed : {1ull, 2ull, 3ull}) {
    // seeded inputs shared by the file-consuming commands
    std::string s = std::to_string(seed);
    std::string strong = "accept_tmp/strong" + s + ".trn";
    std::string plain = "accept_tmp/plain" + s + ".trn";
    write_trn_file(*random_k_connected(15, 1, 900 + seed, 1000).tournament, strong);
    write_trn_file(random_tournament(40, 950 + seed), plain);
    std::vector<std::string> commands = {
        "gen --model uniform --n 25 --seed " + s + " -o accept_tmp/g1.trn",
        "gen --model uniform --n 130 --seed " + s + " -o accept_tmp/g2.trn",
        "gen --model kconn --n 10 --k 1 --seed " + s + " -o accept_tmp/g3.trn",
        "gen --model kconn --n 14 --k 2 --seed " + s + " --max-tries 5000 -o accept_tmp/g4.trn",
        "partition " + plain + " --k 1 --t 2 --seed " + s + " -o accept_tmp/cert_fail.json",
        "partition " + strong + " --k 1 --t 1 --seed " + s + " -o accept_tmp/cert_ok.json",
        "conn " + strong,
        "conn " + plain + " --k 2 --witness",
        "verify accept_tmp/cert_ok.json " + strong,
        "bounds chernoff --mu 50 --delta 0.3 --tail upper",
    };
    for (const std::string& cmd : commands) {
      std::string out1, out2, err1, err2, file1, file2;
      bool writes_file = cmd.find("-o accept_tmp/") != std::string::npos;
      std::string target = writes_file ? cmd.substr(cmd.rfind(' ') + 1) : "";
      for (int run = 0; run < 2; ++run) {
        std::string full = cli + " " + cmd + " > accept_tmp/out.txt 2> accept_tmp/err.txt";
        int rc = std::system(full.c_str());
        (void)rc;  // several commands exit nonzero by design (failed partition, witness)
        (run ? out2 : out1) = slurp("accept_tmp/out.txt");
        (run ? err2 : err1) = slurp("accept_tmp/err.txt");
        if (writes_file) (run ? file2 : file1) = slurp(target);
      }
      if (out1 != out2 || err1 != err2 || file1 != file2) {
        std::printf("    non-reproducible: %s\n", cmd.c_str());
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-cli>\n");
    return 2;
  }
  const std::string cli = argv[1];
  struct Criterion {
    const char* name;
    bool pass;
  };
  std::vector<Criterion> results;
  auto run = [&](const char* name, bool pass) {
    results.push_back({name, pass});
    std::printf("[%s] %s\n", pass ? "PASS" : "FAIL", name);
    std::fflush(stdout);
  };

  run("01 local connectivity matches exhaustive minimum cuts", crit_local_connectivity());
  run("02 k-connectivity matches the separator-enumeration definition", crit_definition_equivalence());
  run("03 strongly 2-connected 16-vertex tournaments split into two strong parts", crit_two_connected_split());
  run("04 mixed-target search (1,1) succeeds on 4-connected tournaments", crit_mixed_targets());
  run("05 concentration bounds hold within Monte Carlo slack", crit_concentration());
  run("06 connector builds satisfy structural guarantees", crit_gadget_structure());
  run("07 path-system minimization is sound and idempotent", crit_minimization());
  run("08 pipeline issues only verified certificates", crit_pipeline_soundness());
  run("09 issued certificates never contradict the exhaustive oracle", crit_cross_oracle());
  run("10 randomized commands are byte-identical across reruns", crit_reproducibility(cli));

  int failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
