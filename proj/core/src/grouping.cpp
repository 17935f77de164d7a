#include "tpart/grouping.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tpart/connectivity.hpp"
#include "tpart/rng.hpp"

namespace tpart {

namespace {

Tournament orient(const Tournament& t, const GadgetFamily& fam) {
  return fam.reversed ? t.reversed() : t;
}

// Vertices missing an out-neighbour in more than k fan sets S_minus(alpha),
// alpha in A (respectively in-neighbour / S_plus).
void miss_masks(const Tournament& tv, const GadgetFamily& fam, const VertexSet& A, int k, VertexSet& out_ok,
                VertexSet& in_ok) {
  const int n = tv.size();
  out_ok = VertexSet(n);
  in_ok = VertexSet(n);
  std::vector<int> out_miss(n, 0), in_miss(n, 0);
  VertexSet hit(n), scratch(n);
  for (Vertex a = A.first(); a >= 0; a = A.next(a)) {
    const Gadget& g = fam.gadgets[a];
    // hit = vertices with an out-neighbour in S_minus = union of in-sets.
    hit = VertexSet(n);
    for (Vertex w = g.S_minus.first(); w >= 0; w = g.S_minus.next(w)) {
      tv.in_set(w, scratch);
      hit |= scratch;
    }
    VertexSet missed = hit.complement();
    for (Vertex u = missed.first(); u >= 0; u = missed.next(u)) ++out_miss[u];
    hit = VertexSet(n);
    for (Vertex w = g.S_plus.first(); w >= 0; w = g.S_plus.next(w)) {
      tv.out_set(w, scratch);
      hit |= scratch;
    }
    missed = hit.complement();
    for (Vertex u = missed.first(); u >= 0; u = missed.next(u)) ++in_miss[u];
  }
  for (Vertex u = 0; u < n; ++u) {
    if (out_miss[u] <= k) out_ok.add(u);
    if (in_miss[u] <= k) in_ok.add(u);
  }
}

// Shared layered evaluation for eligibility (threshold = tau3*k*t) and
// helpfulness (threshold = k), given precomputed miss masks for A.
VertexSet layered_with_masks(const Tournament& tv, const GadgetFamily& fam, const VertexSet& W, int threshold,
                             const VertexSet& out_ok, const VertexSet& in_ok) {
  const int n = tv.size();

  VertexSet l1 = fam.V_good & W & out_ok & in_ok;
  VertexSet l2(n);
  VertexSet plus_only = (fam.V_good_plus - fam.V_good_minus) & W & out_ok;
  for (Vertex u = plus_only.first(); u >= 0; u = plus_only.next(u))
    if (tv.in_count_in(u, l1) >= threshold) l2.add(u);
  VertexSet l12 = l1 | l2;
  VertexSet l3(n);
  VertexSet minus_only = (fam.V_good_minus - fam.V_good_plus) & W & in_ok;
  for (Vertex u = minus_only.first(); u >= 0; u = minus_only.next(u))
    if (tv.out_count_in(u, l12) >= threshold) l3.add(u);
  VertexSet l4(n);
  VertexSet bad = fam.V_bad & W;
  for (Vertex u = bad.first(); u >= 0; u = bad.next(u))
    if (tv.in_count_in(u, l1) >= threshold && tv.out_count_in(u, l12) >= threshold) l4.add(u);

  return l12 | l3 | l4;
}

VertexSet layered_set(const Tournament& tv, const GadgetFamily& fam, const VertexSet& A, const VertexSet& W, int k,
                      int threshold) {
  VertexSet out_ok, in_ok;
  miss_masks(tv, fam, A, k, out_ok, in_ok);
  return layered_with_masks(tv, fam, W, threshold, out_ok, in_ok);
}

void note(StageLog* log, const std::string& stage, int round, const std::string& status, const std::string& detail) {
  if (log) log->push_back({stage, round, status, detail});
}

}  // namespace

VertexSet eligible_set(const Tournament& t, const GadgetFamily& fam, const VertexSet& A, const VertexSet& W, int k,
                       const ConstantsProfile& prof) {
  return layered_set(orient(t, fam), fam, A, W, k, count_threshold(prof.tau3 * fam.k * fam.t));
}

bool is_eligible(const Tournament& t, const GadgetFamily& fam, const VertexSet& A, const VertexSet& W, Vertex u,
                 int k, const ConstantsProfile& prof) {
  return eligible_set(t, fam, A, W, k, prof).contains(u);
}

VertexSet helpful_set(const Tournament& t, const GadgetFamily& fam, const VertexSet& A, const VertexSet& W, int k) {
  return layered_set(orient(t, fam), fam, A, W, k, k);
}

bool is_helpful(const Tournament& t, const GadgetFamily& fam, const VertexSet& A, const VertexSet& W, Vertex u,
                int k) {
  return helpful_set(t, fam, A, W, k).contains(u);
}

StageResult<GroupPlan> group_gadgets(const Tournament& torig, const GadgetFamily& fam, const VertexSet& A2,
                                     const ConstantsProfile& prof, uint64_t seed, int max_rounds, StageLog* log) {
  using R = StageResult<GroupPlan>;
  const Tournament tv = orient(torig, fam);
  const int n = tv.size();
  const int k = fam.k, t = fam.t;
  if (t < 1) throw std::invalid_argument("group_gadgets: t must be positive");
  const int kt = k * t;
  const int block_size = 10 * k;
  const int want_blocks = count_threshold(prof.sigma3 * t);
  const int classes = count_threshold(prof.phi() * t);
  const int c_tau3 = count_threshold(prof.tau3 * kt);

  if (A2.count() < static_cast<long long>(block_size) * want_blocks)
    return R::fail({"grouping-input", static_cast<long long>(block_size) * want_blocks, A2.count(), 0,
                    "too few gadgets to fill the blocks"});

  // Checks one candidate block: every fan vertex keeps c_tau3 eligible
  // neighbours in w_base minus its own exception set.
  auto block_neighbours_ok = [&](const VertexSet& blk, const VertexSet& w_base, std::string* why) {
    VertexSet out_ok, in_ok;
    miss_masks(tv, fam, blk, k, out_ok, in_ok);
    for (Vertex a = blk.first(); a >= 0; a = blk.next(a)) {
      const Gadget& g = fam.gadgets[a];
      VertexSet w = w_base - g.X;
      VertexSet elig = layered_with_masks(tv, fam, w, c_tau3, out_ok, in_ok);
      for (Vertex s = g.S.first(); s >= 0; s = g.S.next(s)) {
        if (tv.out_count_in(s, elig) < c_tau3 || tv.in_count_in(s, elig) < c_tau3) {
          if (why)
            *why = "gadget " + std::to_string(a) + " fan vertex " + std::to_string(s) +
                   " lacks eligible neighbours";
          return false;
        }
      }
    }
    return true;
  };
  const int reservoir_class = count_threshold(n / prof.class_reservoir_div);
  const int reservoir_block = count_threshold(n / prof.block_reservoir_div);

  long long best = -1;
  for (int round = 1; round <= max_rounds; ++round) {
    Rng rng(substream(seed, 7000 + round));
    std::vector<VertexSet> cls(classes, VertexSet(fam.size()));
    for (Vertex a = A2.first(); a >= 0; a = A2.next(a)) cls[rng.below(classes)].add(a);

    // I: classes passing (a) eligible fan neighbours, (b) size, (c) reservoir.
    std::vector<int> passing;
    for (int i = 0; i < classes; ++i) {
      if (cls[i].count() < block_size) continue;
      VertexSet rest = A2 - cls[i];
      VertexSet w_base = W_of(fam, rest, n);
      if (!block_neighbours_ok(cls[i], w_base, nullptr)) continue;
      VertexSet w_own = W_of(fam, cls[i], n);
      if ((layered_set(tv, fam, cls[i], w_own, k, c_tau3) & fam.V_good).count() < reservoir_class) continue;
      passing.push_back(i);
    }
    best = std::max<long long>(best, static_cast<long long>(passing.size()));
    const int j_size = static_cast<int>(passing.size()) / 8;
    if (j_size < want_blocks) {
      note(log, "grouping", round, "retry",
           std::to_string(passing.size()) + " classes pass, block quota unmet");
      continue;
    }

    // J: the classes with the smallest footprint, ties by class index.
    std::stable_sort(passing.begin(), passing.end(), [&](int a, int b) {
      return union_U(fam, cls[a]).count() < union_U(fam, cls[b]).count();
    });
    GroupPlan plan;
    plan.A3 = VertexSet(fam.size());
    for (int j = 0; j < want_blocks; ++j) {
      VertexSet blk(fam.size());
      VertexSet src = cls[passing[j]];
      for (Vertex a = src.first(); a >= 0 && blk.count() < block_size; a = src.next(a)) blk.add(a);
      plan.blocks.push_back(blk);
      plan.A3 |= blk;
    }

    // Direct recheck of the plan's three guarantees.
    bool ok = true;
    std::string why;
    VertexSet w_a3 = W_of(fam, plan.A3, n);
    for (const VertexSet& blk : plan.blocks) {
      if (blk.count() != block_size) {
        ok = false;
        why = "block size mismatch";
        break;
      }
      VertexSet w_base = W_of(fam, plan.A3 - blk, n);
      if (!block_neighbours_ok(blk, w_base, &why)) {
        ok = false;
        break;
      }
      VertexSet reservoir = layered_set(tv, fam, blk, w_a3, k, c_tau3) & fam.V_good;
      if (reservoir.count() < reservoir_block) {
        ok = false;
        why = "eligible reservoir has " + std::to_string(reservoir.count()) + " vertices";
        break;
      }
      plan.eligible_reservoir.push_back(reservoir);
    }
    if (!ok) {
      note(log, "grouping", round, "retry", why);
      continue;
    }
    note(log, "grouping", round, "ok", std::to_string(want_blocks) + " blocks verified");
    return R::success(std::move(plan));
  }
  return R::fail({"grouping", 8LL * want_blocks, best, max_rounds, "no round produced enough passing classes"});
}

StageResult<LinkedPart> link_group(const Tournament& torig, const GadgetFamily& fam, const VertexSet& block,
                                   const VertexSet& W_i, int k) {
  using R = StageResult<LinkedPart>;
  if (block.count() < 3 * k) throw std::invalid_argument("link_group: block must contain at least 3k gadgets");
  const Tournament tv = orient(torig, fam);
  const int n = tv.size();

  // Hypothesis: every fan vertex keeps k helpful out- and in-neighbours in
  // (W_i | U(alpha)) minus its exception set.
  VertexSet out_ok, in_ok;
  miss_masks(tv, fam, block, k, out_ok, in_ok);
  for (Vertex a = block.first(); a >= 0; a = block.next(a)) {
    const Gadget& g = fam.gadgets[a];
    VertexSet w = (W_i | g.U) - g.X;
    VertexSet helpful = layered_with_masks(tv, fam, w, k, out_ok, in_ok);
    for (Vertex s = g.S.first(); s >= 0; s = g.S.next(s)) {
      int outc = tv.out_count_in(s, helpful);
      int inc = tv.in_count_in(s, helpful);
      if (outc < k || inc < k)
        return R::fail({"linking-hypothesis", k, std::min(outc, inc), 1,
                        "gadget " + std::to_string(a) + " fan vertex " + std::to_string(s) +
                            " lacks helpful neighbours"});
    }
  }

  LinkedPart part;
  part.contains_gadgets = block;
  part.members = layered_set(tv, fam, block, W_i, k, k) | union_U(fam, block);
  (void)n;

  auto [sub, map] = tv.induced(part.members);
  CutWitness w;
  if (!is_k_connected(sub, k, &w)) {
    std::string detail = w.kind == CutWitness::Kind::too_few_vertices
                             ? "part too small"
                             : "separator of size " + std::to_string(w.separator.count());
    return R::fail({"linking-connectivity", k, w.kind == CutWitness::Kind::separator ? w.separator.count() : 0, 1,
                    detail});
  }
  return R::success(std::move(part));
}

StageResult<ConnectedParts> build_connected_parts(const Tournament& torig, const GadgetFamily& fam,
                                                  const GroupPlan& plan, const ConstantsProfile& prof, uint64_t seed,
                                                  int max_rounds, StageLog* log) {
  using R = StageResult<ConnectedParts>;
  const Tournament tv = orient(torig, fam);
  const int n = tv.size();
  const int k = fam.k, t = fam.t;
  const int nblocks = static_cast<int>(plan.blocks.size());
  if (2 * k > n / t) return R::fail({"parts-size", n / t, 2 * k, 0, "2k exceeds n/t; no valid part size exists"});

  VertexSet w_a3 = W_of(fam, plan.A3, n);
  const int reservoir_part = count_threshold(n / prof.part_reservoir_div);

  long long best = -1;
  for (int round = 1; round <= max_rounds; ++round) {
    Rng rng(substream(seed, 11000 + round));
    VertexSet reserve(n);
    std::vector<VertexSet> pools(nblocks, VertexSet(n));
    for (Vertex v = w_a3.first(); v >= 0; v = w_a3.next(v)) {
      if (rng.coin())
        reserve.add(v);
      else
        pools[rng.below(nblocks)].add(v);
    }

    std::vector<LinkedPart> linked;
    for (int i = 0; i < nblocks && static_cast<int>(linked.size()) < t; ++i) {
      auto part = link_group(torig, fam, plan.blocks[i], pools[i], k);
      if (!part.ok()) {
        note(log, "parts-link", round, "retry", "block " + std::to_string(i) + ": " + part.failure.detail);
        continue;
      }
      int sz = part.value->members.count();
      if (sz < 2 * k || sz > n / t) {
        note(log, "parts-link", round, "retry",
             "block " + std::to_string(i) + " linked into " + std::to_string(sz) + " vertices, outside [2k, n/t]");
        continue;
      }
      part.value->block_id = i;
      linked.push_back(std::move(*part.value));
    }
    best = std::max<long long>(best, static_cast<long long>(linked.size()));
    if (static_cast<int>(linked.size()) < t) {
      note(log, "parts", round, "retry", std::to_string(linked.size()) + " of " + std::to_string(t) + " parts");
      continue;
    }

    ConnectedParts result;
    result.parts = std::move(linked);
    result.leftover = VertexSet(n);
    result.leftover.fill_all();
    for (const LinkedPart& p : result.parts) result.leftover -= p.members;
    result.reserved = reserve & result.leftover;

    // Recheck: block containment and the leftover good-vertex reservoir.
    bool ok = true;
    std::string why;
    for (const LinkedPart& p : result.parts) {
      if (!union_U(fam, p.contains_gadgets).is_subset_of(p.members)) {
        ok = false;
        why = "part misses its own gadget vertices";
        break;
      }
      int supply = 0;
      VertexSet zgood = result.leftover & fam.V_good;
      for (Vertex v = zgood.first(); v >= 0; v = zgood.next(v))
        if (tv.out_count_in(v, p.members) >= k && tv.in_count_in(v, p.members) >= k) ++supply;
      if (supply < reservoir_part) {
        ok = false;
        why = "leftover reservoir for block " + std::to_string(p.block_id) + " has " + std::to_string(supply) +
              " vertices";
        break;
      }
    }
    if (!ok) {
      note(log, "parts", round, "retry", why);
      continue;
    }
    note(log, "parts", round, "ok", std::to_string(t) + " parts linked and rechecked");
    return R::success(std::move(result));
  }
  return R::fail({"parts", t, best, max_rounds, "could not link enough blocks into valid parts"});
}

}  // namespace tpart
