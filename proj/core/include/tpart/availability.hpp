#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tpart/gadgets.hpp"
#include "tpart/profile.hpp"
#include "tpart/stage.hpp"

namespace tpart {

/// Outcome of an index-trimming stage. `kept` lives in the gadget-index
/// universe; verified means the stage postcondition was rechecked directly.
struct FilterOutcome {
  VertexSet kept;
  int rounds_used = 0;
  bool verified = false;
};

/// The layered neighbour predicate (thresholds tau2*k*t):
///  A1  u in V_good & W;
///  A2  u in (V_good_plus \ V_good_minus) & W with enough A1 in-neighbours;
///  A3  u in (V_good_minus \ V_good_plus) & W with enough A1|A2 out-neighbours;
///  A4  u in V_bad & W with enough A1|A2 out- and A1 in-neighbours;
/// where W = W(A \ {alpha}) = (V \ U(A)) | U(alpha). Throws when alpha is
/// not in A.
bool is_available(const Tournament& t, const GadgetFamily& fam, const VertexSet& A, int alpha, Vertex u,
                  const ConstantsProfile& prof);

/// All vertices available for alpha w.r.t. A, as one set.
VertexSet available_set(const Tournament& t, const GadgetFamily& fam, const VertexSet& A, int alpha,
                        const ConstantsProfile& prof);

/// Claim-style double sieve. Forward pass over `order`: each unclaimed
/// index alpha joins X1, then for each of its slots the trigger may claim
/// one still-unclaimed witness into Y1. Backward pass repeats over X1.
/// Returns X2; |X2| >= |C0| / (2*max_slots+1)^2.
VertexSet two_pass_filter(
    const VertexSet& C0, const std::vector<Vertex>& order, const std::function<int(int)>& slot_count,
    const std::function<std::optional<int>(int alpha, int slot, const VertexSet& candidates)>& trigger);

/// Three-stage trimming of the gadget index set so that every fan vertex of
/// every surviving gadget keeps tau2*k*t available out- and in-neighbours.
/// Each randomized stage resamples with fresh coins up to max_rounds and
/// accepts only on direct verification; the final postcondition is rechecked
/// via is_available before verified is set.
StageResult<FilterOutcome> refine_available(const Tournament& t, const GadgetFamily& fam, const VertexSet& A1,
                                            const ConstantsProfile& prof, uint64_t seed, int max_rounds = 64,
                                            StageLog* log = nullptr);

}  // namespace tpart
