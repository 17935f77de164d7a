#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tpart/tournament.hpp"

namespace tpart {

/// Falsification witness for a k-connectivity claim.
struct CutWitness {
  enum class Kind { too_few_vertices, separator };
  Kind kind = Kind::too_few_vertices;
  VertexSet separator;                        // empty when kind == too_few_vertices
  std::pair<Vertex, Vertex> separated_pair{-1, -1};  // (u,v): no u->v path after removal
};

/// Minimum number of vertices (excluding u, v) whose removal destroys all
/// directed u->v paths. Returns n-1 when the arc u->v is present (u cannot
/// be separated from v). Computed by unit-capacity vertex-split flow.
/// `limit`: stop early once this many disjoint paths are found (then the
/// returned value is min(true value, limit)).
int local_connectivity(const Tournament& t, Vertex u, Vertex v, int limit = -1);

/// Minimum vertex cut for a separable pair (arc v->u present).
VertexSet local_min_cut(const Tournament& t, Vertex u, Vertex v);

/// Strong k-connectivity: n >= k+1 and every separable ordered pair has
/// local connectivity >= k. On failure returns a CutWitness.
bool is_k_connected(const Tournament& t, int k, CutWitness* witness = nullptr);

/// Largest k with is_k_connected(t, k); 0 when not strongly connected.
int connectivity(const Tournament& t);

struct PartitionReport {
  bool valid = false;
  bool disjoint = true;
  bool covers = true;
  std::vector<Vertex> uncovered;       // vertices missing from every part
  std::vector<Vertex> overlapping;     // vertices in more than one part
  struct PartFailure {
    int part_index;
    CutWitness witness;  // in the part's local ids
  };
  std::vector<PartFailure> failures;
};

/// Checks that `parts` partition V(t) and that every induced part is
/// strongly k-connected. Failures are report content, not exceptions.
PartitionReport verify_partition(const Tournament& t, const std::vector<VertexSet>& parts, int k);

/// A collection of pairwise vertex-disjoint directed paths.
struct PathSystem {
  std::vector<std::vector<Vertex>> paths;
  std::vector<std::pair<Vertex, Vertex>> terminals;  // (start, end) per path
  VertexSet forbidden;                               // vertices the system avoided
};

struct DisjointPathsResult {
  bool feasible = false;
  int achieved = 0;       // maximum number of disjoint paths found
  PathSystem system;      // `want` paths when feasible
  VertexSet cut;          // a vertex cut certificate when infeasible
};

/// Exactly `want` pairwise vertex-disjoint source->sink paths whose internal
/// vertices avoid `forbidden`; endpoints are capacitated (no two paths share
/// a source or a sink vertex). When fewer exist, reports the achievable
/// maximum and a cut certificate.
DisjointPathsResult max_disjoint_paths(const Tournament& t, const VertexSet& sources, const VertexSet& sinks,
                                       const VertexSet& forbidden, int want);

}  // namespace tpart
