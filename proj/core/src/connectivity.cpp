#include "tpart/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

namespace tpart {

namespace {

// Unit-capacity max flow on the vertex-split graph of a tournament, with
// the adjacency kept implicit in the bit-packed rows. States: 2v = v_in,
// 2v+1 = v_out, 2n = source, 2n+1 = sink terminal.
class VertexFlow {
 public:
  VertexFlow(const Tournament& t, VertexSet sources, VertexSet sinks, VertexSet allowed, bool cap_endpoints)
      : t_(t),
        n_(t.size()),
        sources_(std::move(sources)),
        sinks_(std::move(sinks)),
        allowed_(std::move(allowed)),
        cap_endpoints_(cap_endpoints),
        fnext_(n_, -1),
        fprev_(n_, -1),
        used_internal_(n_),
        src_used_(n_),
        snk_used_(n_),
        parent_(2 * n_ + 2, -2) {}

  int run(int limit) {
    int flow = 0;
    while ((limit < 0 || flow < limit) && augment()) ++flow;
    return flow;
  }

  // Vertices v with v_in reachable and v_out unreachable in the residual
  // graph, plus saturated endpoint arcs, form a minimum vertex cut.
  VertexSet min_cut() {
    bfs(false);
    VertexSet cut(n_);
    for (Vertex v = 0; v < n_; ++v)
      if (parent_[2 * v] != -2 && parent_[2 * v + 1] == -2) cut.add(v);
    if (cap_endpoints_) {
      for (Vertex s = sources_.first(); s >= 0; s = sources_.next(s))
        if (src_used_.contains(s) && parent_[2 * s] == -2) cut.add(s);
      for (Vertex v = sinks_.first(); v >= 0; v = sinks_.next(v))
        if (snk_used_.contains(v) && parent_[2 * v + 1] != -2) cut.add(v);
    }
    return cut;
  }

  std::vector<std::vector<Vertex>> extract_paths() const {
    std::vector<std::vector<Vertex>> paths;
    for (Vertex s = src_used_.first(); s >= 0; s = src_used_.next(s)) {
      std::vector<Vertex> p{s};
      Vertex v = s;
      while (fnext_[v] >= 0) {
        v = fnext_[v];
        p.push_back(v);
      }
      paths.push_back(std::move(p));
    }
    return paths;
  }

 private:
  int src_state() const { return 2 * n_; }
  int snk_state() const { return 2 * n_ + 1; }

  bool bfs(bool stop_at_sink = true) {
    std::fill(parent_.begin(), parent_.end(), -2);
    queue_.clear();
    parent_[src_state()] = -1;
    // Source arcs.
    for (Vertex s = sources_.first(); s >= 0; s = sources_.next(s)) {
      if (cap_endpoints_) {
        if (!src_used_.contains(s)) visit(2 * s, src_state());
      } else {
        visit(2 * s + 1, src_state());
      }
    }
    VertexSet cand(n_);
    for (size_t qi = 0; qi < queue_.size(); ++qi) {
      int st = queue_[qi];
      Vertex v = st >> 1;
      if (st & 1) {
        // v_out: unused tournament arcs into allowed in-halves.
        const uint64_t* row = t_.out_row(v);
        uint64_t* cw = cand.data();
        const uint64_t* aw = allowed_.data();
        for (int i = 0; i < t_.row_words(); ++i) cw[i] = row[i] & aw[i];
        for (Vertex w = cand.first(); w >= 0; w = cand.next(w)) visit(2 * w, st);
        // Residual of the internal arc.
        if (used_internal_.contains(v)) visit(2 * v, st);
        if (cap_endpoints_ && sinks_.contains(v) && !snk_used_.contains(v)) {
          parent_[snk_state()] = st;
          if (stop_at_sink) return true;
        }
      } else {
        // v_in.
        if (!cap_endpoints_ && sinks_.contains(v)) {
          parent_[snk_state()] = st;
          if (stop_at_sink) return true;
          continue;
        }
        if (!used_internal_.contains(v)) visit(2 * v + 1, st);
        if (fprev_[v] >= 0) visit(2 * fprev_[v] + 1, st);  // residual of a flow arc
      }
    }
    return parent_[snk_state()] != -2;
  }

  void visit(int state, int from) {
    if (parent_[state] != -2) return;
    parent_[state] = from;
    queue_.push_back(state);
  }

  bool augment() {
    if (!bfs()) return false;
    // Walk sink -> source collecting transitions, then apply removals
    // before additions so rerouted arcs are not clobbered.
    std::vector<std::pair<int, int>> steps;  // (from_state, to_state)
    int st = snk_state();
    while (parent_[st] != -1) {
      steps.emplace_back(parent_[st], st);
      st = parent_[st];
    }
    for (auto [a, b] : steps) {
      if (a == src_state() || b == snk_state()) continue;
      Vertex va = a >> 1, vb = b >> 1;
      if (va == vb) {
        if (a & 1) used_internal_.remove(va);  // v_out -> v_in residual
      } else if ((a & 1) == 0) {
        // v_in -> u_out: cancels flow arc u -> v.
        fnext_[vb] = -1;
        fprev_[va] = -1;
      }
    }
    for (auto [a, b] : steps) {
      if (a == src_state()) {
        if (cap_endpoints_) src_used_.add(b >> 1);
        continue;
      }
      if (b == snk_state()) {
        if (cap_endpoints_) snk_used_.add(a >> 1);
        continue;
      }
      Vertex va = a >> 1, vb = b >> 1;
      if (va == vb) {
        if ((a & 1) == 0) used_internal_.add(va);  // v_in -> v_out
      } else if (a & 1) {
        // u_out -> w_in: new flow arc u -> w.
        fnext_[va] = vb;
        fprev_[vb] = va;
      }
    }
    return true;
  }

  const Tournament& t_;
  int n_;
  VertexSet sources_, sinks_, allowed_;
  bool cap_endpoints_;
  std::vector<Vertex> fnext_, fprev_;
  VertexSet used_internal_, src_used_, snk_used_;
  std::vector<int> parent_;
  std::vector<int> queue_;
};

}  // namespace

int local_connectivity(const Tournament& t, Vertex u, Vertex v, int limit) {
  int n = t.size();
  if (u == v || u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("local_connectivity: bad pair");
  if (t.arc(u, v)) return n - 1;
  VertexSet sources(n), sinks(n), allowed(n);
  sources.add(u);
  sinks.add(v);
  allowed.fill_all();
  allowed.remove(u);
  VertexFlow f(t, sources, sinks, allowed, /*cap_endpoints=*/false);
  return f.run(limit);
}

VertexSet local_min_cut(const Tournament& t, Vertex u, Vertex v) {
  int n = t.size();
  if (u == v || t.arc(u, v)) throw std::invalid_argument("local_min_cut: pair not separable");
  VertexSet sources(n), sinks(n), allowed(n);
  sources.add(u);
  sinks.add(v);
  allowed.fill_all();
  allowed.remove(u);
  VertexFlow f(t, sources, sinks, allowed, false);
  f.run(-1);
  VertexSet cut = f.min_cut();
  cut.remove(u);
  cut.remove(v);
  return cut;
}

bool is_k_connected(const Tournament& t, int k, CutWitness* witness) {
  if (k < 1) throw std::invalid_argument("is_k_connected: k must be >= 1");
  int n = t.size();
  if (n < k + 1) {
    if (witness) *witness = CutWitness{CutWitness::Kind::too_few_vertices, VertexSet(n), {-1, -1}};
    return false;
  }
  // k = 1 is plain strong connectivity.
  VertexSet all(n);
  all.fill_all();
  VertexSet fwd = reach_forward(t, 0, all);
  if (fwd.count() != n) {
    if (witness) {
      Vertex v = (all - fwd).first();
      *witness = CutWitness{CutWitness::Kind::separator, VertexSet(n), {0, v}};
    }
    return false;
  }
  VertexSet bwd = reach_backward(t, 0, all);
  if (bwd.count() != n) {
    if (witness) {
      Vertex u = (all - bwd).first();
      *witness = CutWitness{CutWitness::Kind::separator, VertexSet(n), {u, 0}};
    }
    return false;
  }
  if (k == 1) return true;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || t.arc(u, v)) continue;  // only separable pairs (arc v->u)
      if (local_connectivity(t, u, v, k) < k) {
        if (witness) *witness = CutWitness{CutWitness::Kind::separator, local_min_cut(t, u, v), {u, v}};
        return false;
      }
    }
  return true;
}

int connectivity(const Tournament& t) {
  int n = t.size();
  if (n <= 1) return 0;
  if (!is_strongly_connected(t)) return 0;
  int best = n - 1;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || t.arc(u, v)) continue;
      best = std::min(best, local_connectivity(t, u, v, best));
      if (best == 0) return 0;
    }
  return best;
}

PartitionReport verify_partition(const Tournament& t, const std::vector<VertexSet>& parts, int k) {
  int n = t.size();
  PartitionReport rep;
  std::vector<int> owner_count(n, 0);
  for (const auto& p : parts)
    for (Vertex v = p.first(); v >= 0; v = p.next(v)) ++owner_count[v];
  for (Vertex v = 0; v < n; ++v) {
    if (owner_count[v] == 0) {
      rep.covers = false;
      rep.uncovered.push_back(v);
    } else if (owner_count[v] > 1) {
      rep.disjoint = false;
      rep.overlapping.push_back(v);
    }
  }
  for (size_t i = 0; i < parts.size(); ++i) {
    auto [sub, map] = t.induced(parts[i]);
    CutWitness w;
    if (!is_k_connected(sub, k, &w)) rep.failures.push_back({static_cast<int>(i), std::move(w)});
  }
  rep.valid = rep.covers && rep.disjoint && rep.failures.empty();
  return rep;
}

DisjointPathsResult max_disjoint_paths(const Tournament& t, const VertexSet& sources, const VertexSet& sinks,
                                       const VertexSet& forbidden, int want) {
  int n = t.size();
  if (sources.intersects(sinks)) throw std::invalid_argument("max_disjoint_paths: sources and sinks intersect");
  if (sources.intersects(forbidden) || sinks.intersects(forbidden))
    throw std::invalid_argument("max_disjoint_paths: terminals inside forbidden set");
  VertexSet allowed = forbidden.complement();
  VertexFlow f(t, sources, sinks, allowed, /*cap_endpoints=*/true);
  DisjointPathsResult r;
  r.achieved = f.run(want);
  if (r.achieved >= want) {
    r.feasible = true;
    r.system.paths = f.extract_paths();
    for (const auto& p : r.system.paths) r.system.terminals.emplace_back(p.front(), p.back());
    r.system.forbidden = forbidden;
  } else {
    r.cut = f.min_cut();
  }
  r.system.forbidden = forbidden;
  return r;
}

}  // namespace tpart
