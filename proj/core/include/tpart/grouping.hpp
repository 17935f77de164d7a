#pragma once

#include <cstdint>
#include <vector>

#include "tpart/gadgets.hpp"
#include "tpart/profile.hpp"
#include "tpart/stage.hpp"

namespace tpart {

/// Blocks of gadget indices (10k each) whose fan vertices keep many eligible
/// neighbours, plus the per-block reservoir of eligible good vertices.
struct GroupPlan {
  VertexSet A3;                                // union of the blocks
  std::vector<VertexSet> blocks;               // sigma3*t blocks of exactly 10k indices
  std::vector<VertexSet> eligible_reservoir;   // eligible V_good vertices in W(A3), per block
};

/// A block of gadgets linked into one k-connected vertex set.
struct LinkedPart {
  int block_id = -1;
  VertexSet members;
  VertexSet contains_gadgets;
};

struct ConnectedParts {
  std::vector<LinkedPart> parts;  // exactly t of them
  VertexSet leftover;             // Z = V minus all part members
  VertexSet reserved;             // the coin-flip half of W kept out of the blocks
};

/// Layered eligibility (E1-E4): membership classes as for availability, but
/// misses are counted per block (at most k missed fan sets) and neighbour
/// thresholds are tau3*k*t.
bool is_eligible(const Tournament& t, const GadgetFamily& fam, const VertexSet& A, const VertexSet& W, Vertex u,
                 int k, const ConstantsProfile& prof);
VertexSet eligible_set(const Tournament& t, const GadgetFamily& fam, const VertexSet& A, const VertexSet& W, int k,
                       const ConstantsProfile& prof);

/// Layered helpfulness (H1-H4): same shape with every threshold equal to k.
bool is_helpful(const Tournament& t, const GadgetFamily& fam, const VertexSet& A, const VertexSet& W, Vertex u,
                int k);
VertexSet helpful_set(const Tournament& t, const GadgetFamily& fam, const VertexSet& A, const VertexSet& W, int k);

/// Randomly classes the surviving gadgets, keeps the classes passing the
/// eligibility checks, and trims the best sigma3*t of them into blocks of
/// exactly 10k gadgets. Las Vegas: the resulting plan is rechecked directly.
StageResult<GroupPlan> group_gadgets(const Tournament& t, const GadgetFamily& fam, const VertexSet& A2,
                                     const ConstantsProfile& prof, uint64_t seed, int max_rounds = 16,
                                     StageLog* log = nullptr);

/// Joins one block with the helpful vertices of W_i into a single set and
/// verifies k-connectivity directly. Throws when |block| < 3k.
StageResult<LinkedPart> link_group(const Tournament& t, const GadgetFamily& fam, const VertexSet& block,
                                   const VertexSet& W_i, int k);

/// Splits W(A3) into a reserve and per-block pools, links every block, and
/// keeps t parts with 2k <= |V_i| <= n/t; all guarantees (sizes, block
/// containment, leftover reservoir) are rechecked before returning.
StageResult<ConnectedParts> build_connected_parts(const Tournament& t, const GadgetFamily& fam,
                                                  const GroupPlan& plan, const ConstantsProfile& prof, uint64_t seed,
                                                  int max_rounds = 16, StageLog* log = nullptr);

}  // namespace tpart
