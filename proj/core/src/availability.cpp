#include "tpart/availability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tpart/rng.hpp"

namespace tpart {

namespace {

Tournament orient(const Tournament& t, const GadgetFamily& fam) {
  return fam.reversed ? t.reversed() : t;
}

VertexSet available_set_oriented(const Tournament& tv, const GadgetFamily& fam, const VertexSet& A, int alpha,
                                 const ConstantsProfile& prof) {
  const int n = tv.size();
  const int need = count_threshold(prof.tau2 * fam.k * fam.t);

  VertexSet w = union_U(fam, A).complement();
  w |= fam.gadgets[alpha].U;

  VertexSet a1 = fam.V_good & w;
  VertexSet a2(n);
  VertexSet plus_only = (fam.V_good_plus - fam.V_good_minus) & w;
  for (Vertex u = plus_only.first(); u >= 0; u = plus_only.next(u))
    if (tv.in_count_in(u, a1) >= need) a2.add(u);
  VertexSet a12 = a1 | a2;
  VertexSet a3(n);
  VertexSet minus_only = (fam.V_good_minus - fam.V_good_plus) & w;
  for (Vertex u = minus_only.first(); u >= 0; u = minus_only.next(u))
    if (tv.out_count_in(u, a12) >= need) a3.add(u);
  VertexSet a4(n);
  VertexSet bad = fam.V_bad & w;
  for (Vertex u = bad.first(); u >= 0; u = bad.next(u))
    if (tv.out_count_in(u, a12) >= need && tv.in_count_in(u, a1) >= need) a4.add(u);

  return a12 | a3 | a4;
}

}  // namespace

bool is_available(const Tournament& t, const GadgetFamily& fam, const VertexSet& A, int alpha, Vertex u,
                  const ConstantsProfile& prof) {
  if (!A.contains(alpha)) throw std::invalid_argument("is_available: alpha not in the index set");
  return available_set(t, fam, A, alpha, prof).contains(u);
}

VertexSet available_set(const Tournament& t, const GadgetFamily& fam, const VertexSet& A, int alpha,
                        const ConstantsProfile& prof) {
  if (!A.contains(alpha)) throw std::invalid_argument("available_set: alpha not in the index set");
  return available_set_oriented(orient(t, fam), fam, A, alpha, prof);
}

VertexSet two_pass_filter(
    const VertexSet& C0, const std::vector<Vertex>& order, const std::function<int(int)>& slot_count,
    const std::function<std::optional<int>(int alpha, int slot, const VertexSet& candidates)>& trigger) {
  auto pass = [&](const VertexSet& pool, const std::vector<Vertex>& scan) {
    VertexSet x(pool.universe()), y(pool.universe());
    for (Vertex alpha : scan) {
      if (!pool.contains(alpha) || x.contains(alpha) || y.contains(alpha)) continue;
      x.add(alpha);
      for (int slot = 0; slot < slot_count(alpha); ++slot) {
        VertexSet candidates = pool;
        candidates -= x;
        candidates -= y;
        candidates.remove(alpha);
        if (candidates.empty()) continue;
        if (auto beta = trigger(alpha, slot, candidates)) y.add(*beta);
      }
    }
    return x;
  };

  VertexSet x1 = pass(C0, order);
  std::vector<Vertex> back(order.rbegin(), order.rend());
  return pass(x1, back);
}

namespace {

// Caches shared by every refine stage: good-neighbourhood sets per vertex
// and element lists per gadget (intersections against a sparse U(beta) are
// done by iterating its members).
struct RefineCtx {
  const Tournament& tv;
  const GadgetFamily& fam;
  const ConstantsProfile& prof;
  int kt;
  StageLog* log;

  std::vector<std::vector<Vertex>> fans;     // S(alpha) as a vector, per gadget
  std::vector<std::vector<Vertex>> u_elems;  // U(alpha) as a vector, per gadget
  std::vector<VertexSet> good_out;           // N+(u) & V_good_plus
  std::vector<VertexSet> good_in;            // N-(u) & V_good
  std::vector<bool> u_touches_good;          // U(alpha) intersects V_good

  RefineCtx(const Tournament& tv_, const GadgetFamily& fam_, const ConstantsProfile& prof_, StageLog* log_)
      : tv(tv_), fam(fam_), prof(prof_), kt(fam_.k * fam_.t), log(log_) {
    const int n = tv.size();
    fans.resize(fam.size());
    u_elems.resize(fam.size());
    u_touches_good.resize(fam.size());
    for (int a = 0; a < fam.size(); ++a) {
      fans[a] = fam.gadgets[a].S.to_vector();
      u_elems[a] = fam.gadgets[a].U.to_vector();
      u_touches_good[a] = fam.gadgets[a].U.intersects(fam.V_good);
    }
    good_out.reserve(n);
    good_in.reserve(n);
    for (Vertex u = 0; u < n; ++u) {
      good_out.push_back(tv.out_set(u) & fam.V_good_plus);
      good_in.push_back(tv.in_set(u) & fam.V_good);
    }
  }

  const VertexSet& good(Vertex u, bool plus) const { return plus ? good_out[u] : good_in[u]; }

  void note(const std::string& stage, int round, const std::string& status, const std::string& detail) const {
    if (log) log->push_back({stage, round, status, detail});
  }

  int slots(int alpha) const { return 2 * static_cast<int>(fans[alpha].size()); }
  VertexSet n_okay(int alpha, int slot) const {
    Vertex s = fans[alpha][slot / 2];
    return (slot % 2 == 0 ? tv.out_set(s) : tv.in_set(s)) & fam.V_okay;
  }
  VertexSet w_base(const VertexSet& C) const { return union_U(fam, C).complement(); }
  VertexSet w_minus(const VertexSet& base, const VertexSet& C, int alpha) const {
    VertexSet w = base;
    if (C.contains(alpha)) w |= fam.gadgets[alpha].U;
    return w;
  }

  int count_in_u(const VertexSet& s, int beta, int stop_at) const {
    int c = 0;
    for (Vertex w : u_elems[beta])
      if (s.contains(w) && ++c >= stop_at) break;
    return c;
  }

  VertexSet coin_sample(const VertexSet& C, Rng& rng) const {
    VertexSet out(C.universe());
    for (Vertex a = C.first(); a >= 0; a = C.next(a))
      if (rng.coin()) out.add(a);
    return out;
  }
};

// Per-(alpha, slot) candidate-vertex sets, computed once per stage.
using SlotSets = std::vector<std::vector<VertexSet>>;

long long stage_target(const VertexSet& in, double fraction, const ConstantsProfile& prof, int kt) {
  double floor_frac = std::ceil(in.count() / fraction);
  return std::max<long long>(static_cast<long long>(floor_frac), count_threshold(prof.sigma2 * kt));
}

// One sampling loop: coin-1/2 subset, keep the indices whose every slot
// passes `accept` against the sampled W, stop at `target`.
StageResult<VertexSet> sample_until(
    const RefineCtx& ctx, const std::string& stage, const VertexSet& Cp, long long target, uint64_t seed,
    uint64_t stream, int max_rounds,
    const std::function<void(const VertexSet& base, const VertexSet& sample)>& per_round,
    const std::function<bool(int alpha, int slot, const VertexSet& w_alpha)>& accept, int* rounds_used) {
  long long best = -1;
  for (int round = 1; round <= max_rounds; ++round) {
    Rng rng(substream(seed, stream + round));
    VertexSet Cpp = ctx.coin_sample(Cp, rng);
    VertexSet base = ctx.w_base(Cpp);
    if (per_round) per_round(base, Cpp);
    VertexSet kept(Cp.universe());
    for (Vertex a = Cpp.first(); a >= 0; a = Cpp.next(a)) {
      VertexSet w = ctx.w_minus(base, Cpp, a);
      bool ok = true;
      for (int slot = 0; ok && slot < ctx.slots(a); ++slot) ok = accept(a, slot, w);
      if (ok) kept.add(a);
    }
    best = std::max<long long>(best, kept.count());
    if (rounds_used) *rounds_used += 1;
    if (kept.count() >= target) {
      ctx.note(stage, round, "ok", std::to_string(kept.count()) + " indices kept");
      return StageResult<VertexSet>::success(std::move(kept));
    }
    ctx.note(stage, round, "retry", std::to_string(kept.count()) + " of " + std::to_string(target));
  }
  return StageResult<VertexSet>::fail({stage, target, best, max_rounds, "sampling never reached the stage target"});
}

}  // namespace

StageResult<FilterOutcome> refine_available(const Tournament& torig, const GadgetFamily& fam, const VertexSet& A1,
                                            const ConstantsProfile& prof, uint64_t seed, int max_rounds,
                                            StageLog* log) {
  using R = StageResult<FilterOutcome>;
  const Tournament tv = orient(torig, fam);
  const int n = tv.size();
  RefineCtx ctx(tv, fam, prof, log);
  const int kt = ctx.kt;
  const double rho = prof.rho;
  const long long want_final = count_threshold(prof.sigma2 * kt);

  if (A1.count() < want_final)
    return R::fail({"availability-input", want_final, A1.count(), 0, "too few gadgets survive the build"});
  if (max_rounds < 1) return R::fail({"availability-stage1", want_final, 0, 0, "no rounds allowed"});

  int rounds_used = 0;
  std::vector<Vertex> order = A1.to_vector();
  auto slot_count = [&](int a) { return ctx.slots(a); };

  // Stage 1: okay-neighbourhoods meet the phi1 bound outside surviving U's.
  const int c1 = count_threshold(prof.phi1() * kt);
  auto fires1 = [&](int alpha, int slot, const VertexSet& cand) -> std::optional<int> {
    VertexSet nset = ctx.n_okay(alpha, slot);
    for (Vertex b = cand.first(); b >= 0; b = cand.next(b))
      if (ctx.count_in_u(nset, b, c1) >= c1) return b;
    return std::nullopt;
  };
  VertexSet C1p = two_pass_filter(A1, order, slot_count, fires1);
  auto s1 = sample_until(
      ctx, "availability-stage1", C1p, stage_target(A1, 36 * rho * rho, prof, kt), seed, 1000, max_rounds, nullptr,
      [&](int alpha, int slot, const VertexSet& w) { return ctx.n_okay(alpha, slot).intersection_count(w) >= c1; },
      &rounds_used);
  if (!s1.ok()) return R::fail(s1.failure);
  VertexSet C1 = *s1.value;

  // Generic first-order application: keep alpha when, for each slot, at
  // least ct2 vertices of M(alpha, slot) retain ct2 good neighbours in the
  // sampled leftover region.
  auto apply_mod2 = [&](const VertexSet& D1, bool mu_plus, int ct2, uint64_t stream, const std::string& stage,
                        const SlotSets& m_sets) -> StageResult<VertexSet> {
    // Witness sets per beta: vertices with ct2 good mu-neighbours in U(beta).
    std::vector<VertexSet> q(fam.size());
    for (Vertex b = D1.first(); b >= 0; b = D1.next(b)) {
      q[b] = VertexSet(n);
      for (Vertex u = 0; u < n; ++u)
        if (ctx.count_in_u(ctx.good(u, mu_plus), b, ct2) >= ct2) q[b].add(u);
    }
    auto fires = [&](int alpha, int slot, const VertexSet& cand) -> std::optional<int> {
      const VertexSet& m = m_sets[alpha][slot];
      for (Vertex b = cand.first(); b >= 0; b = cand.next(b))
        if (m.intersection_count(q[b]) >= ct2) return b;
      return std::nullopt;
    };
    VertexSet D2p = two_pass_filter(D1, D1.to_vector(), slot_count, fires);
    return sample_until(
        ctx, stage, D2p, stage_target(D1, 36 * rho * rho, prof, kt), seed, stream, max_rounds, nullptr,
        [&](int alpha, int slot, const VertexSet& w) {
          int hits = 0;
          const VertexSet& m = m_sets[alpha][slot];
          for (Vertex u = m.first(); u >= 0; u = m.next(u))
            if (ctx.good(u, mu_plus).intersection_count(w) >= ct2 && ++hits >= ct2) return true;
          return false;
        },
        &rounds_used);
  };

  // Stage 2, first application: mu = +, theta1 = phi1.
  const int c2a2 = count_threshold(prof.phi1() / (128 * rho) * kt);
  VertexSet w_c1_base = ctx.w_base(C1);
  SlotSets m2a(fam.size());
  for (Vertex a = C1.first(); a >= 0; a = C1.next(a)) {
    VertexSet w = ctx.w_minus(w_c1_base, C1, a);
    for (int slot = 0; slot < ctx.slots(a); ++slot) m2a[a].push_back(ctx.n_okay(a, slot) & w);
  }
  auto s2a = apply_mod2(C1, true, c2a2, 2000, "availability-stage2a", m2a);
  if (!s2a.ok()) return R::fail(s2a.failure);
  VertexSet C2p = *s2a.value;

  // Stage 2, second application: mu = -, theta1 = phi1 / 2^7 rho.
  const int c2b2 = count_threshold(prof.phi2() * kt);
  VertexSet w_c2p_base = ctx.w_base(C2p);
  SlotSets m2b(fam.size());
  for (Vertex a = C2p.first(); a >= 0; a = C2p.next(a)) {
    VertexSet w = ctx.w_minus(w_c2p_base, C2p, a);
    for (int slot = 0; slot < ctx.slots(a); ++slot) {
      const VertexSet& m = m2a[a][slot];
      VertexSet out(n);
      for (Vertex u = m.first(); u >= 0; u = m.next(u))
        if (ctx.good(u, true).intersection_count(w) >= c2a2) out.add(u);
      m2b[a].push_back(std::move(out));
    }
  }
  auto s2b = apply_mod2(C2p, false, c2b2, 3000, "availability-stage2b", m2b);
  if (!s2b.ok()) return R::fail(s2b.failure);
  VertexSet C2 = *s2b.value;

  // Second-order application: slot vertices u carry witness sets
  // M_alpha(u) = good mu-neighbours inside W(C2 \ {alpha}).
  VertexSet w_c2_base = ctx.w_base(C2);
  std::vector<VertexSet> w_alpha3(fam.size());
  for (Vertex a = C2.first(); a >= 0; a = C2.next(a)) w_alpha3[a] = ctx.w_minus(w_c2_base, C2, a);

  auto apply_mod3 = [&](const VertexSet& D1, bool malpha_plus, int ct2, uint64_t stream, const std::string& stage,
                        const SlotSets& m_sets) -> StageResult<VertexSet> {
    std::vector<VertexSet> q(fam.size());
    for (Vertex b = D1.first(); b >= 0; b = D1.next(b)) {
      q[b] = VertexSet(n);
      for (Vertex v = 0; v < n; ++v)
        if (ctx.count_in_u(ctx.good_in[v], b, ct2) >= ct2) q[b].add(v);
    }
    auto deep = [&](int alpha, const VertexSet& m, const VertexSet& witness) {
      int hits = 0;
      for (Vertex u = m.first(); u >= 0; u = m.next(u)) {
        VertexSet mv = ctx.good(u, malpha_plus) & w_alpha3[alpha];
        if (mv.intersection_count(witness) >= ct2 && ++hits >= ct2) return true;
      }
      return false;
    };
    auto fires = [&](int alpha, int slot, const VertexSet& cand) -> std::optional<int> {
      for (Vertex b = cand.first(); b >= 0; b = cand.next(b))
        if (deep(alpha, m_sets[alpha][slot], q[b])) return b;
      return std::nullopt;
    };
    VertexSet D2p = two_pass_filter(D1, D1.to_vector(), slot_count, fires);

    // Per-round witness set: vertices v keeping ct2 good in-neighbours in
    // the sampled leftover region. U(alpha) only matters when it holds good
    // vertices, so the base set is usually shared across alpha.
    VertexSet r_base(n);
    std::vector<VertexSet> r_alpha(fam.size());
    auto per_round = [&](const VertexSet& base, const VertexSet& sample) {
      r_base = VertexSet(n);
      for (Vertex v = 0; v < n; ++v)
        if (ctx.good_in[v].intersection_count(base) >= ct2) r_base.add(v);
      for (Vertex a = sample.first(); a >= 0; a = sample.next(a)) {
        if (!ctx.u_touches_good[a]) {
          r_alpha[a] = r_base;
          continue;
        }
        VertexSet w = ctx.w_minus(base, sample, a);
        r_alpha[a] = VertexSet(n);
        for (Vertex v = 0; v < n; ++v)
          if (ctx.good_in[v].intersection_count(w) >= ct2) r_alpha[a].add(v);
      }
    };
    return sample_until(
        ctx, stage, D2p, stage_target(D1, 36 * rho * rho, prof, kt), seed, stream, max_rounds, per_round,
        [&](int alpha, int slot, const VertexSet&) { return deep(alpha, m_sets[alpha][slot], r_alpha[alpha]); },
        &rounds_used);
  };

  // Stage 3, first application: theta1 = phi2, M_alpha(u) = good out.
  const int c3a1 = count_threshold(prof.phi2() * kt);
  const int c3a2 = count_threshold(prof.phi2() / (256 * rho) * kt);
  SlotSets m3a(fam.size());
  for (Vertex a = C2.first(); a >= 0; a = C2.next(a)) {
    const VertexSet& w = w_alpha3[a];
    for (int slot = 0; slot < ctx.slots(a); ++slot) {
      VertexSet m = ctx.n_okay(a, slot) & w;
      VertexSet out(n);
      for (Vertex u = m.first(); u >= 0; u = m.next(u))
        if (ctx.good(u, true).intersection_count(w) >= c3a1 && ctx.good(u, false).intersection_count(w) >= c3a1)
          out.add(u);
      m3a[a].push_back(std::move(out));
    }
  }
  auto s3a = apply_mod3(C2, true, c3a2, 4000, "availability-stage3a", m3a);
  if (!s3a.ok()) return R::fail(s3a.failure);
  VertexSet C2pp = *s3a.value;

  // Stage 3, second application: theta1 = phi2 / 2^8 rho, M_alpha(u) = good in.
  const int c3b1 = c3a2;
  const int c3b2 = count_threshold(prof.phi3() * kt);
  VertexSet w_c2pp_base = ctx.w_base(C2pp);
  SlotSets m3b(fam.size());
  for (Vertex a = C2pp.first(); a >= 0; a = C2pp.next(a)) {
    const VertexSet& w = w_alpha3[a];
    VertexSet wp = ctx.w_minus(w_c2pp_base, C2pp, a);
    VertexSet v_ok(n);
    for (Vertex v = 0; v < n; ++v)
      if (ctx.good_in[v].intersection_count(wp) >= c3b1) v_ok.add(v);
    for (int slot = 0; slot < ctx.slots(a); ++slot) {
      VertexSet m = ctx.n_okay(a, slot) & w;
      VertexSet out(n);
      for (Vertex u = m.first(); u >= 0; u = m.next(u)) {
        if (ctx.good_in[u].intersection_count(w) < c3b1) continue;
        VertexSet mv = ctx.good(u, true) & w;
        if (mv.intersection_count(v_ok) >= c3b1) out.add(u);
      }
      m3b[a].push_back(std::move(out));
    }
  }
  auto s3b = apply_mod3(C2pp, false, c3b2, 5000, "availability-stage3b", m3b);
  if (!s3b.ok()) return R::fail(s3b.failure);
  VertexSet A2 = *s3b.value;

  // Direct recheck of the target property.
  const int need = count_threshold(prof.tau2 * kt);
  for (Vertex a = A2.first(); a >= 0; a = A2.next(a)) {
    VertexSet avail = available_set_oriented(tv, fam, A2, a, prof);
    for (Vertex s : ctx.fans[a]) {
      int outc = tv.out_count_in(s, avail);
      int inc = tv.in_count_in(s, avail);
      if (outc < need || inc < need) {
        ctx.note("availability-recheck", rounds_used, "fail",
                 "gadget " + std::to_string(a) + " fan vertex " + std::to_string(s) + " has " +
                     std::to_string(std::min(outc, inc)) + " available neighbours");
        return R::fail({"availability-recheck", need, std::min(outc, inc), rounds_used,
                        "final availability bound fails despite all stage targets"});
      }
    }
  }

  FilterOutcome out;
  out.kept = A2;
  out.rounds_used = rounds_used;
  out.verified = true;
  ctx.note("availability", rounds_used, "ok", std::to_string(A2.count()) + " gadgets kept and rechecked");
  return R::success(std::move(out));
}

}  // namespace tpart
