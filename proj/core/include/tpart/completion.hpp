#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tpart/grouping.hpp"
#include "tpart/profile.hpp"
#include "tpart/stage.hpp"

namespace tpart {

/// Proof object for a finished partition: issued only after every part was
/// rechecked k-connected by the core verifier.
struct PartitionCertificate {
  int n = 0, k = 0, t = 0;
  uint64_t seed = 0;
  ConstantsProfile profile;
  std::vector<VertexSet> parts;
  StageLog stage_log;
};

/// Absorbs Y (well-connected leftovers) and Z (the rest) into the existing
/// parts: the five input guarantees are verified first, each y joins a
/// uniformly random part among those it is k-linked to, each z greedily
/// joins a part it is k-linked to (retrying the whole round when stuck), and
/// every grown part is rechecked k-connected.
StageResult<std::vector<VertexSet>> extend_partition(const Tournament& t, const VertexSet& Z, const VertexSet& Y,
                                                     const std::vector<VertexSet>& parts, int k, int tparts,
                                                     const ConstantsProfile& prof, uint64_t seed,
                                                     int max_rounds = 16, StageLog* log = nullptr);

/// End-to-end pipeline: gadget construction, availability trimming,
/// grouping, linking, then four extension stages over the leftover classes.
/// t = 1 degenerates to a direct k-connectivity check. The certificate is
/// issued only after a full verify_partition pass.
StageResult<PartitionCertificate> partition_tournament(const Tournament& t, int k, int tparts,
                                                       const ConstantsProfile& prof, uint64_t seed,
                                                       int max_rounds = 16, StageLog* log = nullptr);

nlohmann::json certificate_to_json(const PartitionCertificate& cert);

}  // namespace tpart
