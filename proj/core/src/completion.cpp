#include "tpart/completion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "tpart/availability.hpp"
#include "tpart/connectivity.hpp"
#include "tpart/rng.hpp"

namespace tpart {

namespace {

void note(StageLog* log, const std::string& stage, int round, const std::string& status, const std::string& detail) {
  if (log) log->push_back({stage, round, status, detail});
}

int linked_parts_count(const Tournament& t, Vertex v, const std::vector<VertexSet>& parts, int k, bool out) {
  int c = 0;
  for (const VertexSet& p : parts)
    if ((out ? t.out_count_in(v, p) : t.in_count_in(v, p)) >= k) ++c;
  return c;
}

}  // namespace

StageResult<std::vector<VertexSet>> extend_partition(const Tournament& t, const VertexSet& Z, const VertexSet& Y,
                                                     const std::vector<VertexSet>& parts, int k, int tparts,
                                                     const ConstantsProfile& prof, uint64_t seed, int max_rounds,
                                                     StageLog* log) {
  using R = StageResult<std::vector<VertexSet>>;
  const int n = t.size();
  if (static_cast<int>(parts.size()) != tparts)
    throw std::invalid_argument("extend_partition: parts count does not match t");

  auto fail_hyp = [&](long long needed, long long got, const std::string& detail) {
    return R::fail({"extension-hypothesis", needed, got, 0, detail});
  };

  // Disjointness of Z, Y and the parts.
  {
    VertexSet seen = Z;
    if (seen.intersects(Y)) return fail_hyp(0, 1, "Z and Y overlap");
    seen |= Y;
    for (const VertexSet& p : parts) {
      if (seen.intersects(p)) return fail_hyp(0, 1, "a part overlaps Z, Y or an earlier part");
      seen |= p;
    }
  }

  if (Z.empty() && Y.empty()) return R::success(std::vector<VertexSet>(parts));

  const int quorum = (3 * tparts + 3) / 4;  // ceil(3t/4)
  // Part sizes and connectivity.
  for (size_t i = 0; i < parts.size(); ++i) {
    int sz = parts[i].count();
    if (sz < 2 * k || sz > n / tparts)
      return fail_hyp(2 * k, sz, "part " + std::to_string(i) + " size outside [2k, n/t]");
    auto [sub, map] = t.induced(parts[i]);
    if (!is_k_connected(sub, k))
      return fail_hyp(k, 0, "part " + std::to_string(i) + " is not k-connected on input");
  }
  // Every y is k-linked to at least 3t/4 parts.
  for (Vertex y = Y.first(); y >= 0; y = Y.next(y)) {
    int c = 0;
    for (const VertexSet& p : parts)
      if (t.out_count_in(y, p) >= k && t.in_count_in(y, p) >= k) ++c;
    if (c < quorum) return fail_hyp(quorum, c, "vertex " + std::to_string(y) + " is linked to too few parts");
  }
  // Per-part reservoir inside Y (vacuous for z-only stages: the reservoir
  // exists to feed the y-assignments).
  const int reservoir = Y.empty() ? 0 : count_threshold(n / prof.extend_reservoir_div);
  for (size_t i = 0; !Y.empty() && i < parts.size(); ++i) {
    int c = 0;
    for (Vertex y = Y.first(); y >= 0; y = Y.next(y))
      if (t.out_count_in(y, parts[i]) >= k && t.in_count_in(y, parts[i]) >= k) ++c;
    if (c < reservoir)
      return fail_hyp(reservoir, c, "part " + std::to_string(i) + " has too small a Y-reservoir");
  }
  // Every z has spread-out out- and in-degrees.
  {
    VertexSet pool = Y;
    for (const VertexSet& p : parts) pool |= p;
    const long long bulk = std::max<long long>(count_threshold(prof.z_set_mult * Z.count()),
                                               count_threshold(prof.z_degree_mult * k * tparts));
    for (Vertex z = Z.first(); z >= 0; z = Z.next(z)) {
      bool out_ok = linked_parts_count(t, z, parts, k, true) >= quorum || t.out_count_in(z, pool) >= bulk;
      bool in_ok = linked_parts_count(t, z, parts, k, false) >= quorum || t.in_count_in(z, pool) >= bulk;
      if (!out_ok || !in_ok)
        return fail_hyp(bulk, out_ok ? t.in_count_in(z, pool) : t.out_count_in(z, pool),
                        "vertex " + std::to_string(z) + " fails the degree alternative");
    }
  }

  // Las Vegas rounds: random Y assignment, greedy Z placement, recheck.
  for (int round = 1; round <= max_rounds; ++round) {
    Rng rng(substream(seed, 13000 + round));
    std::vector<VertexSet> grown = parts;
    bool stuck = false;
    for (Vertex y = Y.first(); y >= 0; y = Y.next(y)) {
      std::vector<int> idx;
      for (int i = 0; i < tparts; ++i)
        if (t.out_count_in(y, parts[i]) >= k && t.in_count_in(y, parts[i]) >= k) idx.push_back(i);
      grown[idx[rng.below(static_cast<uint64_t>(idx.size()))]].add(y);
    }
    for (Vertex z = Z.first(); z >= 0; z = Z.next(z)) {
      int home = -1;
      for (int i = 0; i < tparts; ++i)
        if (t.out_count_in(z, grown[i]) >= k && t.in_count_in(z, grown[i]) >= k) {
          home = i;
          break;
        }
      if (home < 0) {
        note(log, "extension", round, "retry", "vertex " + std::to_string(z) + " fits no part");
        stuck = true;
        break;
      }
      grown[home].add(z);
    }
    if (stuck) continue;

    bool ok = true;
    for (size_t i = 0; ok && i < grown.size(); ++i) {
      auto [sub, map] = t.induced(grown[i]);
      if (!is_k_connected(sub, k)) {
        note(log, "extension", round, "retry", "grown part " + std::to_string(i) + " lost k-connectivity");
        ok = false;
      }
    }
    if (!ok) continue;
    note(log, "extension", round, "ok", "absorbed " + std::to_string(Y.count() + Z.count()) + " vertices");
    return R::success(std::move(grown));
  }
  return R::fail({"extension", Z.count() + Y.count(), 0, max_rounds, "no round produced a valid assignment"});
}

StageResult<PartitionCertificate> partition_tournament(const Tournament& t, int k, int tparts,
                                                       const ConstantsProfile& prof, uint64_t seed, int max_rounds,
                                                       StageLog* log) {
  using R = StageResult<PartitionCertificate>;
  const int n = t.size();
  if (k < 1 || tparts < 1) throw std::invalid_argument("partition_tournament: k and t must be positive");
  if (n < k + 1) return R::fail({"input", k + 1, n, 0, "tournament too small for k-connected parts"});

  StageLog local;
  StageLog* lg = log ? log : &local;

  PartitionCertificate cert;
  cert.n = n;
  cert.k = k;
  cert.t = tparts;
  cert.seed = seed;
  cert.profile = prof;

  if (tparts == 1) {
    CutWitness w;
    if (!is_k_connected(t, k, &w))
      return R::fail({"single-part", k, 0, 0, "tournament itself is not k-connected"});
    VertexSet all(n);
    all.fill_all();
    cert.parts = {all};
    note(lg, "single-part", 1, "ok", "whole tournament verified");
    cert.stage_log = *lg;
    return R::success(std::move(cert));
  }

  auto fam_r = build_gadget_family(t, k, tparts, prof, seed, lg);
  if (!fam_r.ok()) {
    fam_r.failure.detail += " (gadget stage)";
    return R::fail(fam_r.failure);
  }
  const GadgetFamily& fam = *fam_r.value;

  auto ref_r = refine_available(t, fam, all_indices(fam), prof, seed, max_rounds, lg);
  if (!ref_r.ok()) return R::fail(ref_r.failure);

  auto plan_r = group_gadgets(t, fam, ref_r.value->kept, prof, seed, max_rounds, lg);
  if (!plan_r.ok()) return R::fail(plan_r.failure);

  auto parts_r = build_connected_parts(t, fam, *plan_r.value, prof, seed, max_rounds, lg);
  if (!parts_r.ok()) return R::fail(parts_r.failure);

  std::vector<VertexSet> parts;
  for (const LinkedPart& p : parts_r.value->parts) parts.push_back(p.members);

  // Leftover classification and the four absorption stages.
  VertexSet Z = parts_r.value->leftover;
  VertexSet Y = Z & fam.V_good;
  std::vector<VertexSet> zs = {Z & (fam.V_good_plus - fam.V_good_minus), Z & (fam.V_good_minus - fam.V_good_plus),
                               Z & fam.V_bad, (Z - fam.V_okay) - fam.V_good};
  std::vector<VertexSet> ys(4, VertexSet(n));
  {
    Rng rng(substream(seed, 17));
    for (Vertex y = Y.first(); y >= 0; y = Y.next(y)) ys[rng.below(4)].add(y);
  }
  for (int stage = 0; stage < 4; ++stage) {
    auto ext = extend_partition(t, zs[stage], ys[stage], parts, k, tparts, prof, substream(seed, 23 + stage),
                                max_rounds, lg);
    if (!ext.ok()) {
      ext.failure.detail += " (absorption stage " + std::to_string(stage + 1) + ")";
      return R::fail(ext.failure);
    }
    parts = std::move(*ext.value);
  }

  PartitionReport rep = verify_partition(t, parts, k);
  if (!rep.valid) return R::fail({"final-verify", k, 0, 0, "assembled parts fail the partition verifier"});

  cert.parts = std::move(parts);
  note(lg, "certificate", 1, "ok", "partition verified");
  cert.stage_log = *lg;
  return R::success(std::move(cert));
}

nlohmann::json certificate_to_json(const PartitionCertificate& cert) {
  nlohmann::json j;
  j["version"] = 1;
  j["n"] = cert.n;
  j["k"] = cert.k;
  j["t"] = cert.t;
  j["seed"] = cert.seed;
  j["profile"] = cert.profile;
  j["parts"] = nlohmann::json::array();
  for (const VertexSet& p : cert.parts) j["parts"].push_back(p.to_vector());
  j["stage_log"] = nlohmann::json::array();
  for (const StageLogEntry& e : cert.stage_log)
    j["stage_log"].push_back({{"stage", e.stage}, {"round", e.round}, {"status", e.status}, {"detail", e.detail}});
  return j;
}

}  // namespace tpart
