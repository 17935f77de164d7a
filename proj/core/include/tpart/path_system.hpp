#pragma once

#include "tpart/connectivity.hpp"

namespace tpart {

/// Arcs followed, pairwise vertex-disjointness, internal forbidden-avoidance.
bool verify_path_system(const Tournament& t, const PathSystem& ps);

int covered_vertices(const PathSystem& ps);

/// Local fixpoint of three covered-count-decreasing replacements:
///   R1 intra-path shortcut across a forward chord;
///   R2 start-bypass s,y,u via an uncovered vertex y;
///   R3 cross-pair exchange dropping one of three out-neighbours of a
///      start vertex on another path.
/// Endpoint multiset, disjointness and forbidden-avoidance are preserved;
/// covered vertices never increase; the result is idempotent under reapplication.
PathSystem minimize_path_system(const Tournament& t, PathSystem ps);

/// Within each path x_1..x_m, every non-path chord (i < j-1) points
/// backwards: the arc x_j -> x_i is present.
bool verify_backward_chords(const Tournament& t, const PathSystem& ps);

}  // namespace tpart
