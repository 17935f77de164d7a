#include "tpart/path_system.hpp"

#include <algorithm>

namespace tpart {

bool verify_path_system(const Tournament& t, const PathSystem& ps) {
  int n = t.size();
  VertexSet seen(n);
  for (const auto& p : ps.paths) {
    if (p.empty()) return false;
    for (size_t i = 0; i < p.size(); ++i) {
      Vertex v = p[i];
      if (v < 0 || v >= n || seen.contains(v)) return false;
      seen.add(v);
      if (i + 1 < p.size() && !t.arc(v, p[i + 1])) return false;
      bool internal = i > 0 && i + 1 < p.size();
      if (internal && ps.forbidden.universe() == n && ps.forbidden.contains(v)) return false;
    }
  }
  return true;
}

int covered_vertices(const PathSystem& ps) {
  int c = 0;
  for (const auto& p : ps.paths) c += static_cast<int>(p.size());
  return c;
}

namespace {

VertexSet covered_set(int n, const PathSystem& ps) {
  VertexSet s(n);
  for (const auto& p : ps.paths)
    for (Vertex v : p) s.add(v);
  return s;
}

// R1: forward chord x_i -> x_j with j > i+1 shortcuts the subpath.
bool exhaust_forward_chords(const Tournament& t, std::vector<Vertex>& p, VertexSet& covered) {
  bool any = false;
  for (size_t i = 0; i + 2 < p.size();) {
    bool cut = false;
    for (size_t j = p.size() - 1; j > i + 1; --j) {
      if (t.arc(p[i], p[j])) {
        for (size_t m = i + 1; m < j; ++m) covered.remove(p[m]);
        p.erase(p.begin() + static_cast<long>(i) + 1, p.begin() + static_cast<long>(j));
        any = true;
        cut = true;
        break;
      }
    }
    if (!cut) ++i;
  }
  return any;
}

}  // namespace

PathSystem minimize_path_system(const Tournament& t, PathSystem ps) {
  int n = t.size();
  VertexSet covered = covered_set(n, ps);
  VertexSet blocked = ps.forbidden.universe() == n ? ps.forbidden : VertexSet(n);

  auto apply_r2_once = [&]() -> bool {
    for (auto& p : ps.paths) {
      if (p.size() < 4) continue;
      Vertex s = p[0];
      for (size_t pos = 3; pos < p.size(); ++pos) {
        Vertex u = p[pos];
        // y uncovered, outside forbidden, with s -> y -> u.
        VertexSet cand = t.out_set(s);
        cand &= t.in_set(u);
        cand -= covered;
        cand -= blocked;
        Vertex y = cand.first();
        if (y < 0) continue;
        for (size_t m = 1; m < pos; ++m) covered.remove(p[m]);
        covered.add(y);
        std::vector<Vertex> np{s, y};
        np.insert(np.end(), p.begin() + static_cast<long>(pos), p.end());
        p = std::move(np);
        return true;
      }
    }
    return false;
  };

  auto apply_r3_once = [&]() -> bool {
    for (size_t pi = 0; pi < ps.paths.size(); ++pi) {
      const auto& p = ps.paths[pi];
      Vertex s = p[0];
      for (size_t qi = 0; qi < ps.paths.size(); ++qi) {
        if (qi == pi) continue;
        const auto& q = ps.paths[qi];
        std::vector<size_t> outs;  // positions of out-neighbours of s on q
        for (size_t j = 0; j < q.size(); ++j)
          if (t.arc(s, q[j])) outs.push_back(j);
        if (outs.size() < 3) continue;
        for (size_t a = 0; a + 2 < outs.size(); ++a) {
          size_t q1 = outs[a], q3 = outs[a + 2];
          Vertex y1 = q[q1];
          for (size_t pu = 1; pu < p.size(); ++pu) {
            if (!t.arc(y1, p[pu])) continue;
            // New paths: q[0..q1] + p[pu..]  and  s + q[q3..].
            for (size_t m = q1 + 1; m < q3; ++m) covered.remove(q[m]);
            for (size_t m = 1; m < pu; ++m) covered.remove(p[m]);
            std::vector<Vertex> nq(q.begin(), q.begin() + static_cast<long>(q1) + 1);
            nq.insert(nq.end(), p.begin() + static_cast<long>(pu), p.end());
            std::vector<Vertex> np{s};
            np.insert(np.end(), q.begin() + static_cast<long>(q3), q.end());
            ps.paths[qi] = std::move(nq);
            ps.paths[pi] = std::move(np);
            return true;
          }
        }
      }
    }
    return false;
  };

  while (true) {
    for (auto& p : ps.paths) exhaust_forward_chords(t, p, covered);
    if (apply_r2_once()) continue;
    if (apply_r3_once()) continue;
    break;
  }

  ps.terminals.clear();
  for (const auto& p : ps.paths) ps.terminals.emplace_back(p.front(), p.back());
  return ps;
}

bool verify_backward_chords(const Tournament& t, const PathSystem& ps) {
  for (const auto& p : ps.paths)
    for (size_t i = 0; i + 2 < p.size(); ++i)
      for (size_t j = i + 2; j < p.size(); ++j)
        if (!t.arc(p[j], p[i])) return false;
  return true;
}

}  // namespace tpart
