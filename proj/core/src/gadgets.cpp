#include "tpart/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "tpart/connectivity.hpp"
#include "tpart/path_system.hpp"

namespace tpart {

std::pair<VertexSet, VertexSet> select_hubs(const Tournament& t, int m) {
  const int n = t.size();
  if (m < 1) throw std::invalid_argument("select_hubs: m must be positive");
  if (n <= 2 * m) throw std::invalid_argument("select_hubs: need n > 2m");

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return t.out_degree(a) > t.out_degree(b); });
  VertexSet a_plus(n);
  for (int i = 0; i < m; ++i) a_plus.add(order[i]);

  std::vector<Vertex> rest;
  rest.reserve(n - m);
  for (Vertex v = 0; v < n; ++v)
    if (!a_plus.contains(v)) rest.push_back(v);
  std::stable_sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) { return t.in_degree(a) > t.in_degree(b); });
  VertexSet a_minus(n);
  for (int i = 0; i < m; ++i) a_minus.add(rest[i]);
  return {a_plus, a_minus};
}

std::vector<Vertex> build_dominating_seq(const Tournament& t, Vertex a, const VertexSet& pool, int cap,
                                         SeqDirection dir, std::vector<int>* residual_trace) {
  if (pool.contains(a)) throw std::invalid_argument("build_dominating_seq: root inside pool");
  const bool fwd = dir == SeqDirection::out;
  std::vector<Vertex> seq{a};
  // residual = pool vertices not yet dominated by the chosen set.
  VertexSet residual = pool;
  residual -= fwd ? t.out_set(a) : t.in_set(a);
  if (residual_trace) residual_trace->clear();
  for (int j = 1; j <= cap; ++j) {
    if (residual.empty()) break;
    if (residual_trace) residual_trace->push_back(residual.count());
    Vertex best = -1;
    int best_deg = -1;
    for (Vertex v = residual.first(); v >= 0; v = residual.next(v)) {
      int d = fwd ? t.out_count_in(v, residual) : t.in_count_in(v, residual);
      if (d > best_deg) {
        best_deg = d;
        best = v;
      }
    }
    seq.push_back(best);
    residual.remove(best);
    residual -= fwd ? t.out_set(best) : t.in_set(best);
  }
  return seq;
}

VertexSet compute_X(const Tournament& t, const Gadget& g) {
  const int n = t.size();
  VertexSet interior = g.U - g.S;
  VertexSet x(n);
  if (interior.empty()) return x;
  VertexSet in_of_interior(n), out_of_interior(n);
  for (Vertex w = interior.first(); w >= 0; w = interior.next(w)) {
    out_of_interior |= t.out_set(w);
    in_of_interior |= t.in_set(w);
  }
  x = (t.in_set(g.s_plus) & out_of_interior) | (t.out_set(g.s_minus) & in_of_interior);
  return x;
}

void classify_vertices(const Tournament& t, GadgetFamily& fam) {
  const int n = t.size();
  const int kt = fam.k * fam.t;

  VertexSet all_s(n);
  for (const Gadget& g : fam.gadgets) all_s |= g.S;
  fam.V_okay = all_s.complement();

  fam.V_bad_plus = VertexSet(n);
  fam.V_bad_minus = VertexSet(n);
  for (Vertex u = fam.V_okay.first(); u >= 0; u = fam.V_okay.next(u)) {
    int miss_out = 0, miss_in = 0;
    for (const Gadget& g : fam.gadgets) {
      if (!t.has_out_neighbour_in(u, g.S_minus)) ++miss_out;
      if (!t.has_in_neighbour_in(u, g.S_plus)) ++miss_in;
    }
    if (miss_out >= kt) fam.V_bad_plus.add(u);
    if (miss_in >= kt) fam.V_bad_minus.add(u);
  }
  fam.V_bad = fam.V_bad_plus & fam.V_bad_minus;
  fam.V_good_plus = fam.V_okay - fam.V_bad_minus;
  fam.V_good_minus = fam.V_okay - fam.V_bad_plus;
  fam.V_good = fam.V_good_plus & fam.V_good_minus;
}

namespace {

void log_entry(StageLog* log, const std::string& stage, int round, const std::string& status,
               const std::string& detail) {
  if (log) log->push_back({stage, round, status, detail});
}

StageResult<GadgetFamily> build_once(const Tournament& t, int k, int tparts, const ConstantsProfile& prof,
                                     StageLog* log) {
  const int n = t.size();
  const int m = count_threshold(prof.sigma1 * k * tparts);
  if (n <= 2 * m)
    return StageResult<GadgetFamily>::fail(
        {"hub-selection", 2LL * m + 1, n, 1, "need more than 2*sigma1*k*t vertices"});

  auto [a_plus, a_minus] = select_hubs(t, m);
  const int cap = static_cast<int>(std::floor(prof.rho / 10));
  if (cap < 0) return StageResult<GadgetFamily>::fail({"hub-selection", 0, -1, 1, "negative sequence cap"});

  VertexSet hubs = a_plus | a_minus;
  std::vector<Vertex> plus_hubs = a_plus.to_vector();
  std::vector<Vertex> minus_hubs = a_minus.to_vector();

  // Transitive fans: the out-fans consume vertices first, the in-fans draw
  // from what remains so that all fans stay pairwise disjoint.
  VertexSet used = hubs;
  std::vector<std::vector<Vertex>> s_plus_seqs(m), s_minus_seqs(m);
  for (int i = 0; i < m; ++i) {
    VertexSet pool = used.complement();
    s_plus_seqs[i] = build_dominating_seq(t, plus_hubs[i], pool, cap, SeqDirection::out);
    for (Vertex v : s_plus_seqs[i]) used.add(v);
  }
  for (int i = 0; i < m; ++i) {
    VertexSet pool = used.complement();
    s_minus_seqs[i] = build_dominating_seq(t, minus_hubs[i], pool, cap, SeqDirection::in);
    for (Vertex v : s_minus_seqs[i]) used.add(v);
  }

  // Route m disjoint paths from the sinks of the in-fans to the sources of
  // the out-fans; interiors avoid every fan vertex.
  VertexSet sources(n), sinks(n);
  std::vector<Vertex> minus_hub_of(n, -1), plus_hub_of(n, -1);
  for (int i = 0; i < m; ++i) {
    Vertex src = s_minus_seqs[i].back();
    Vertex snk = s_plus_seqs[i].back();
    sources.add(src);
    sinks.add(snk);
    minus_hub_of[src] = minus_hubs[i];
    plus_hub_of[snk] = plus_hubs[i];
  }
  VertexSet forbidden = (used - sources) - sinks;
  DisjointPathsResult routed = max_disjoint_paths(t, sources, sinks, forbidden, m);
  if (!routed.feasible) {
    log_entry(log, "path-routing", 1, "fail",
              "cut of size " + std::to_string(routed.cut.count()) + " blocks the remaining paths");
    return StageResult<GadgetFamily>::fail(
        {"path-routing", m, routed.achieved, 1, "too few disjoint connector paths"});
  }
  PathSystem ps = minimize_path_system(t, std::move(routed.system));

  GadgetFamily fam;
  fam.k = k;
  fam.t = tparts;
  fam.gadgets.resize(m);
  const long long s_budget = count_threshold(prof.rho);
  const long long x_budget = count_threshold(prof.rho * prof.sigma1 * k * tparts);
  for (int i = 0; i < m; ++i) {
    Gadget& g = fam.gadgets[i];
    g.id = i;
    g.path = ps.paths[i];
    g.s_minus = g.path.front();
    g.s_plus = g.path.back();
    g.hub_in = minus_hub_of[g.s_minus];
    g.hub_out = plus_hub_of[g.s_plus];
    int pi = static_cast<int>(std::find(plus_hubs.begin(), plus_hubs.end(), g.hub_out) - plus_hubs.begin());
    int mi = static_cast<int>(std::find(minus_hubs.begin(), minus_hubs.end(), g.hub_in) - minus_hubs.begin());
    g.S_plus = VertexSet::of(n, s_plus_seqs[pi]);
    g.S_minus = VertexSet::of(n, s_minus_seqs[mi]);
    g.U = g.S_plus | g.S_minus | VertexSet::of(n, g.path);
    g.S = g.S_plus | g.S_minus;
    const int len = static_cast<int>(g.path.size());
    for (int j = 0; j < std::min(3, len); ++j) {
      g.S.add(g.path[j]);
      g.S.add(g.path[len - 1 - j]);
    }
    if (g.S.count() > s_budget)
      return StageResult<GadgetFamily>::fail(
          {"s-set-size", s_budget, g.S.count(), 1, "gadget " + std::to_string(i) + " exceeds the rho budget"});
    g.X = compute_X(t, g);
    if (g.X.count() > x_budget)
      return StageResult<GadgetFamily>::fail(
          {"exception-set", x_budget, g.X.count(), 1, "gadget " + std::to_string(i) + " exception set too large"});
  }

  classify_vertices(t, fam);
  return StageResult<GadgetFamily>::success(std::move(fam));
}

}  // namespace

StageResult<GadgetFamily> build_gadget_family(const Tournament& t, int k, int tparts, const ConstantsProfile& prof,
                                              uint64_t seed, StageLog* log) {
  (void)seed;  // the construction is deterministic
  StageResult<GadgetFamily> r = build_once(t, k, tparts, prof, log);
  if (!r.ok()) return r;
  if (r.value->V_bad_minus.count() < r.value->V_bad_plus.count()) {
    // Normalize orientation: rebuild on the arc-reversed tournament so the
    // plus side is never the scarcer one.
    log_entry(log, "gadget-build", 1, "retry", "rebuilding on the reversed orientation");
    StageResult<GadgetFamily> rev = build_once(t.reversed(), k, tparts, prof, log);
    if (rev.ok()) {
      rev.value->reversed = true;
      if (rev.value->V_bad_minus.count() >= rev.value->V_bad_plus.count()) return rev;
      log_entry(log, "gadget-build", 1, "retry", "both orientations skew plus-bad; keeping the original");
    }
  }
  log_entry(log, "gadget-build", 1, "ok", std::to_string(r.value->size()) + " gadgets");
  return r;
}

bool GadgetReport::g1_to_g4() const {
  for (const Item& it : items)
    if (it.name <= "G4" && !it.pass) return false;
  return true;
}

const GadgetReport::Item* GadgetReport::find(const std::string& name) const {
  for (const Item& it : items)
    if (it.name == name) return &it;
  return nullptr;
}

namespace {

bool is_transitive_fan(const Tournament& t, const VertexSet& s, Vertex root, bool root_is_sink,
                       std::string* why) {
  std::vector<Vertex> vs = s.to_vector();
  for (Vertex u : vs) {
    if (u == root) continue;
    bool ok = root_is_sink ? t.arc(u, root) : t.arc(root, u);
    if (!ok) {
      *why = "vertex " + std::to_string(u) + " misoriented against root " + std::to_string(root);
      return false;
    }
  }
  // Transitivity: in-degrees (within the set) must be a permutation of 0..m-1.
  std::vector<int> degs;
  for (Vertex u : vs) degs.push_back(t.in_count_in(u, s));
  std::sort(degs.begin(), degs.end());
  for (size_t i = 0; i < degs.size(); ++i)
    if (degs[i] != static_cast<int>(i)) {
      *why = "induced set is not transitive";
      return false;
    }
  return true;
}

}  // namespace

GadgetReport verify_gadget_properties(const Tournament& torig, const GadgetFamily& fam,
                                      const ConstantsProfile& prof) {
  const Tournament t = fam.reversed ? torig.reversed() : torig;
  const int n = t.size();
  const int kt = fam.k * fam.t;
  GadgetReport rep;
  auto add = [&](std::string name, bool pass, std::string detail) {
    rep.items.push_back({std::move(name), pass, std::move(detail)});
    rep.all_pass = rep.all_pass && rep.items.back().pass;
  };

  // G1: the U(alpha) are pairwise disjoint.
  {
    bool ok = true;
    std::string why;
    VertexSet seen(n);
    for (const Gadget& g : fam.gadgets) {
      if (seen.intersects(g.U)) {
        ok = false;
        why = "gadget " + std::to_string(g.id) + " shares vertex " + std::to_string((seen & g.U).first()) +
              " with an earlier gadget";
        break;
      }
      seen |= g.U;
    }
    add("G1", ok, ok ? "all connector vertex sets disjoint" : why);
  }

  // G2: |S| <= rho and |X| <= rho*sigma1*k*t per gadget.
  {
    bool ok = true;
    std::string why;
    const long long s_budget = count_threshold(prof.rho);
    const long long x_budget = count_threshold(prof.rho * prof.sigma1 * kt);
    for (const Gadget& g : fam.gadgets) {
      if (g.S.count() > s_budget) {
        ok = false;
        why = "gadget " + std::to_string(g.id) + ": |S| = " + std::to_string(g.S.count());
        break;
      }
      if (g.X.count() > x_budget) {
        ok = false;
        why = "gadget " + std::to_string(g.id) + ": |X| = " + std::to_string(g.X.count());
        break;
      }
    }
    add("G2", ok, ok ? "terminal and exception sets within budget" : why);
  }

  // G3: each gadget links any in-fan vertex to any out-fan vertex through a
  // directed path inside U: fans are transitive (sink/source at the hub ...
  // with the path terminals as the extreme elements) and the connector path
  // uses real arcs.
  {
    bool ok = true;
    std::string why;
    for (const Gadget& g : fam.gadgets) {
      if (!is_transitive_fan(t, g.S_plus, g.hub_out, true, &why) ||
          !is_transitive_fan(t, g.S_minus, g.hub_in, false, &why)) {
        ok = false;
        why = "gadget " + std::to_string(g.id) + ": " + why;
        break;
      }
      // Terminal extremality: s_minus is beaten by all of S_minus, s_plus
      // beats all of S_plus.
      for (Vertex u = g.S_minus.first(); ok && u >= 0; u = g.S_minus.next(u))
        if (u != g.s_minus && !t.arc(u, g.s_minus)) {
          ok = false;
          why = "gadget " + std::to_string(g.id) + ": in-fan vertex " + std::to_string(u) +
                " cannot reach the path start";
        }
      for (Vertex v = g.S_plus.first(); ok && v >= 0; v = g.S_plus.next(v))
        if (v != g.s_plus && !t.arc(g.s_plus, v)) {
          ok = false;
          why = "gadget " + std::to_string(g.id) + ": path end cannot reach out-fan vertex " + std::to_string(v);
        }
      for (size_t j = 0; ok && j + 1 < g.path.size(); ++j)
        if (!t.arc(g.path[j], g.path[j + 1])) {
          ok = false;
          why = "gadget " + std::to_string(g.id) + ": missing path arc at position " + std::to_string(j);
        }
      if (!ok) break;
    }
    add("G3", ok, ok ? "every in-fan vertex reaches every out-fan vertex inside U" : why);
  }

  // G4: outside X, neighbours of the path terminals are neighbours of the
  // whole interior U \ S.
  {
    bool ok = true;
    std::string why;
    for (const Gadget& g : fam.gadgets) {
      VertexSet interior = g.U - g.S;
      VertexSet in_ends = t.in_set(g.s_plus) - g.X;
      VertexSet out_starts = t.out_set(g.s_minus) - g.X;
      for (Vertex w = interior.first(); ok && w >= 0; w = interior.next(w)) {
        if (!in_ends.is_subset_of(t.in_set(w))) {
          ok = false;
          why = "gadget " + std::to_string(g.id) + ": non-exceptional in-neighbour of the path end misses " +
                std::to_string(w);
        }
        if (ok && !out_starts.is_subset_of(t.out_set(w))) {
          ok = false;
          why = "gadget " + std::to_string(g.id) + ": non-exceptional out-neighbour of the path start misses " +
                std::to_string(w);
        }
      }
      if (!ok) break;
    }
    add("G4", ok, ok ? "exception sets capture all irregular terminal neighbours" : why);
  }

  // G5: okay vertices dominate the bad sets by the big degree multiplier.
  {
    bool ok = true;
    std::string why;
    const long long need_out = static_cast<long long>(std::ceil(prof.degree_mult_big * fam.V_bad_plus.count()));
    const long long need_in = static_cast<long long>(std::ceil(prof.degree_mult_big * fam.V_bad_minus.count()));
    for (Vertex u = fam.V_okay.first(); u >= 0; u = fam.V_okay.next(u)) {
      if (t.out_degree(u) < need_out || t.in_degree(u) < need_in) {
        ok = false;
        why = "vertex " + std::to_string(u) + " has degree " + std::to_string(t.out_degree(u)) + "/" +
              std::to_string(t.in_degree(u)) + ", needed " + std::to_string(need_out) + "/" +
              std::to_string(need_in);
        break;
      }
    }
    add("G5", ok, ok ? "okay vertices out-scale the bad sets" : why);
  }

  // G6: at least half the vertices are good.
  {
    bool ok = 2 * fam.V_good.count() >= n;
    add("G6", ok, "|good| = " + std::to_string(fam.V_good.count()) + " of n = " + std::to_string(n));
  }

  // G7 / G8: okay vertices have many good out-/in-neighbours.
  {
    const long long base = count_threshold(prof.tau1 * kt / 2);
    bool ok7 = true, ok8 = true;
    std::string why7, why8;
    const long long need7 =
        std::max<long long>(base, static_cast<long long>(std::ceil(prof.degree_mult_small * fam.V_bad_plus.count())));
    const long long need8 = std::max<long long>(
        base, static_cast<long long>(std::ceil(prof.degree_mult_small * fam.V_bad_minus.count())));
    for (Vertex u = fam.V_okay.first(); u >= 0; u = fam.V_okay.next(u)) {
      if (ok7 && t.out_count_in(u, fam.V_good_plus) < need7) {
        ok7 = false;
        why7 = "vertex " + std::to_string(u) + " has " + std::to_string(t.out_count_in(u, fam.V_good_plus)) +
               " good out-neighbours, needed " + std::to_string(need7);
      }
      if (ok8 && t.in_count_in(u, fam.V_good) < need8) {
        ok8 = false;
        why8 = "vertex " + std::to_string(u) + " has " + std::to_string(t.in_count_in(u, fam.V_good)) +
               " good in-neighbours, needed " + std::to_string(need8);
      }
      if (!ok7 && !ok8) break;
    }
    add("G7", ok7, ok7 ? "good out-neighbourhoods are plentiful" : why7);
    add("G8", ok8, ok8 ? "good in-neighbourhoods are plentiful" : why8);
  }

  // G9: every vertex sees many okay vertices both ways.
  {
    const long long base = count_threshold(prof.tau1 * kt / 2);
    const int not_okay = n - fam.V_okay.count();
    const long long need =
        std::max<long long>(base, static_cast<long long>(std::ceil(prof.degree_mult_small * not_okay)));
    bool ok = true;
    std::string why;
    for (Vertex u = 0; u < n; ++u) {
      if (t.out_count_in(u, fam.V_okay) < need || t.in_count_in(u, fam.V_okay) < need) {
        ok = false;
        why = "vertex " + std::to_string(u) + " has " + std::to_string(t.out_count_in(u, fam.V_okay)) + "/" +
              std::to_string(t.in_count_in(u, fam.V_okay)) + " okay neighbours, needed " + std::to_string(need);
        break;
      }
    }
    add("G9", ok, ok ? "okay set dominates every neighbourhood" : why);
  }

  return rep;
}

nlohmann::json family_to_json(const GadgetFamily& fam) {
  nlohmann::json j;
  j["version"] = 1;
  j["k"] = fam.k;
  j["t"] = fam.t;
  j["reversed"] = fam.reversed;
  j["gadgets"] = nlohmann::json::array();
  for (const Gadget& g : fam.gadgets) {
    j["gadgets"].push_back({{"id", g.id},
                            {"hub_out", g.hub_out},
                            {"hub_in", g.hub_in},
                            {"s_plus", g.s_plus},
                            {"s_minus", g.s_minus},
                            {"S_plus", g.S_plus.to_vector()},
                            {"S_minus", g.S_minus.to_vector()},
                            {"path", g.path},
                            {"X", g.X.to_vector()}});
  }
  j["V_okay"] = fam.V_okay.to_vector();
  j["V_bad_plus"] = fam.V_bad_plus.to_vector();
  j["V_bad_minus"] = fam.V_bad_minus.to_vector();
  j["V_good"] = fam.V_good.to_vector();
  return j;
}

VertexSet union_U(const GadgetFamily& fam, const VertexSet& indices) {
  VertexSet u;
  if (!fam.gadgets.empty()) u = VertexSet(fam.gadgets.front().U.universe());
  for (Vertex i = indices.first(); i >= 0; i = indices.next(i)) u |= fam.gadgets[i].U;
  return u;
}

VertexSet W_of(const GadgetFamily& fam, const VertexSet& indices, int n) {
  VertexSet u(n);
  for (Vertex i = indices.first(); i >= 0; i = indices.next(i)) u |= fam.gadgets[i].U;
  return u.complement();
}

VertexSet all_indices(const GadgetFamily& fam) {
  VertexSet s(fam.size());
  s.fill_all();
  return s;
}

}  // namespace tpart
