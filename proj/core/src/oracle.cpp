#include "tpart/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "tpart/completion.hpp"
#include "tpart/connectivity.hpp"
#include "tpart/generators.hpp"
#include "tpart/rng.hpp"

namespace tpart {

namespace {

using Clock = std::chrono::steady_clock;

bool reaches(const Tournament& t, Vertex u, Vertex v, uint32_t removed) {
  // BFS from u to v avoiding `removed` (bitmask over vertices; n <= 12).
  uint32_t seen = 1u << u;
  uint32_t frontier = seen;
  while (frontier) {
    uint32_t next = 0;
    for (int w = 0; w < t.size(); ++w) {
      if (!(frontier & (1u << w))) continue;
      for (int x = 0; x < t.size(); ++x)
        if (t.arc(w, x) && !(removed & (1u << x))) next |= 1u << x;
    }
    next &= ~seen;
    if (next & (1u << v)) return true;
    seen |= next;
    frontier = next;
  }
  return (seen >> v) & 1;
}

}  // namespace

int bruteforce_local_cut(const Tournament& t, Vertex u, Vertex v, int max_n) {
  const int n = t.size();
  if (u == v) throw std::invalid_argument("bruteforce_local_cut: u and v must differ");
  if (n > max_n) throw std::invalid_argument("bruteforce_local_cut: instance exceeds the oracle size limit");
  if (t.arc(u, v)) throw std::invalid_argument("bruteforce_local_cut: pair is inseparable (direct arc present)");

  std::vector<int> others;
  for (int w = 0; w < n; ++w)
    if (w != u && w != v) others.push_back(w);
  const int m = static_cast<int>(others.size());
  int best = m;
  for (uint32_t sub = 0; sub < (1u << m); ++sub) {
    int size = __builtin_popcount(sub);
    if (size >= best) continue;
    uint32_t removed = 0;
    for (int i = 0; i < m; ++i)
      if (sub & (1u << i)) removed |= 1u << others[i];
    if (!reaches(t, u, v, removed)) best = size;
  }
  return best;
}

namespace {

struct Search {
  const Tournament& t;
  std::vector<int> targets;  // per-part k, size tparts
  Clock::time_point deadline;
  bool timed_out = false;
  uint64_t visited = 0, pruneable = 0;

  bool part_ok(const VertexSet& s, int k) {
    if (s.count() < k + 1) return false;
    auto [sub, map] = t.induced(s);
    return is_k_connected(sub, k);
  }

  // Enumerates the part containing the smallest remaining vertex, recursing
  // on the rest. `depth` indexes targets.
  bool solve(const VertexSet& remaining, size_t depth, std::vector<VertexSet>& parts) {
    if (Clock::now() > deadline) {
      timed_out = true;
      return false;
    }
    const int left = static_cast<int>(targets.size() - depth);
    if (left == 1) {
      if (part_ok(remaining, targets[depth])) {
        parts.push_back(remaining);
        return true;
      }
      return false;
    }
    Vertex pin = remaining.first();
    std::vector<Vertex> rest;
    for (Vertex v = remaining.next(pin); v >= 0; v = remaining.next(v)) rest.push_back(v);
    const int m = static_cast<int>(rest.size());
    // Subsets of `rest` joined with the pinned vertex form the candidate part.
    for (uint64_t sub = 0; sub < (uint64_t{1} << m); ++sub) {
      ++visited;
      if ((visited & 0x3ff) == 0 && Clock::now() > deadline) {
        timed_out = true;
        return false;
      }
      VertexSet part(t.size());
      part.add(pin);
      for (int i = 0; i < m; ++i)
        if (sub & (uint64_t{1} << i)) part.add(rest[i]);
      if (part.count() == remaining.count()) continue;  // leave room for the rest
      if (!part_ok(part, targets[depth])) continue;
      VertexSet next = remaining - part;
      parts.push_back(part);
      if (solve(next, depth + 1, parts)) return true;
      parts.pop_back();
      if (timed_out) return false;
    }
    return false;
  }
};

OracleResult run_search(const Tournament& t, const std::vector<std::vector<int>>& orderings, long long budget_ms) {
  auto start = Clock::now();
  OracleResult out;
  bool timed_out = false;
  uint64_t visited = 0;
  const int n = t.size();
  double total = static_cast<double>(orderings.size()) * std::pow(2.0, std::max(0, n - 1));
  for (const auto& ord : orderings) {
    Search s{t, ord, start + std::chrono::milliseconds(budget_ms)};
    VertexSet all(t.size());
    all.fill_all();
    std::vector<VertexSet> parts;
    bool found = s.solve(all, 0, parts);
    visited += s.visited;
    if (found) {
      out.status = OracleResult::Status::found;
      out.parts = std::move(parts);
      out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
      return out;
    }
    if (s.timed_out) {
      timed_out = true;
      break;
    }
  }
  out.status = timed_out ? OracleResult::Status::timeout : OracleResult::Status::none;
  out.searched_fraction = timed_out ? std::min(1.0, static_cast<double>(visited) / std::max(1.0, total)) : 1.0;
  out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return out;
}

}  // namespace

OracleResult bruteforce_partition(const Tournament& t, int k, int tparts, long long budget_ms) {
  if (tparts < 1) throw std::invalid_argument("bruteforce_partition: t must be positive");
  return run_search(t, {std::vector<int>(tparts, k)}, budget_ms);
}

OracleResult bruteforce_partition_mixed(const Tournament& t, const std::vector<int>& targets, long long budget_ms) {
  if (targets.empty()) throw std::invalid_argument("bruteforce_partition_mixed: need at least one target");
  std::vector<int> ord = targets;
  std::sort(ord.begin(), ord.end());
  std::vector<std::vector<int>> orderings;
  do {
    orderings.push_back(ord);
  } while (std::next_permutation(ord.begin(), ord.end()));
  return run_search(t, orderings, budget_ms);
}

std::vector<ExperimentRow> threshold_experiment(int n, int k, int t, int seeds, long long budget_ms,
                                                uint64_t base_seed, ExperimentMode mode,
                                                const ConstantsProfile& prof) {
  std::vector<ExperimentRow> rows;
  for (int i = 0; i < seeds; ++i) {
    uint64_t seed = substream(base_seed, i);
    Tournament trn = random_tournament(n, seed);
    ExperimentRow row;
    row.seed = seed;
    row.n = n;
    row.k = k;
    row.t = t;
    row.connectivity = connectivity(trn);
    auto start = Clock::now();
    if (mode == ExperimentMode::exact) {
      OracleResult r = bruteforce_partition(trn, k, t, budget_ms);
      row.result = r.status == OracleResult::Status::found  ? "found"
                   : r.status == OracleResult::Status::none ? "none"
                                                            : "timeout";
    } else {
      auto r = partition_tournament(trn, k, t, prof, seed);
      row.result = r.ok() ? "found" : "none";
    }
    row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    rows.push_back(row);
  }
  return rows;
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << "seed,n,k,t,connectivity,result,elapsed_ms\n";
  for (const ExperimentRow& r : rows)
    out << r.seed << ',' << r.n << ',' << r.k << ',' << r.t << ',' << r.connectivity << ',' << r.result << ','
        << r.elapsed_ms << '\n';
  return out.str();
}

}  // namespace tpart
