#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tpart/profile.hpp"
#include "tpart/tournament.hpp"

namespace tpart {

/// Exact minimum u->v vertex cut by subset enumeration (smallest first).
/// Requires n <= max_n and the pair to be separable (arc v->u); throws
/// std::invalid_argument otherwise.
int bruteforce_local_cut(const Tournament& t, Vertex u, Vertex v, int max_n = 12);

struct OracleResult {
  enum class Status { found, none, timeout };
  Status status = Status::none;
  std::vector<VertexSet> parts;     // populated when status == found
  double searched_fraction = 1;     // < 1 only on timeout
  long long elapsed_ms = 0;
};

/// Exhaustive search for a partition into t strongly k-connected parts.
/// Vertex 0 is pinned to the first part (symmetry pruning); `none` is
/// returned only after the whole space is exhausted, otherwise `timeout`
/// reports the searched fraction.
OracleResult bruteforce_partition(const Tournament& t, int k, int tparts, long long budget_ms = 10000);

/// Same search with a per-part connectivity target; all distinct orderings
/// of the targets are tried (the pinned vertex may belong to any of them).
OracleResult bruteforce_partition_mixed(const Tournament& t, const std::vector<int>& targets,
                                        long long budget_ms = 10000);

struct ExperimentRow {
  uint64_t seed = 0;
  int n = 0, k = 0, t = 0;
  int connectivity = 0;
  std::string result;  // found | none | timeout
  long long elapsed_ms = 0;
};

enum class ExperimentMode { exact, pipeline };

/// One random tournament per seed; records its connectivity and whether a
/// valid partition was found (by the oracle, or by the pipeline in
/// heuristic mode).
std::vector<ExperimentRow> threshold_experiment(int n, int k, int t, int seeds, long long budget_ms,
                                                uint64_t base_seed, ExperimentMode mode = ExperimentMode::exact,
                                                const ConstantsProfile& prof = ConstantsProfile::desk());

std::string experiment_csv(const std::vector<ExperimentRow>& rows);

}  // namespace tpart
