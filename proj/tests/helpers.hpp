#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "tpart/gadgets.hpp"
#include "tpart/generators.hpp"
#include "tpart/tournament.hpp"

namespace helpers {

inline tpart::Tournament three_cycle() { return tpart::Tournament::build(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline tpart::Tournament transitive(int n) {
  tpart::Tournament t(n);
  for (tpart::Vertex u = 0; u < n; ++u)
    for (tpart::Vertex v = u + 1; v < n; ++v) t.orient(u, v);
  return t;
}

// Two 3-cycles {0,1,2} and {3,4,5} with every arc from the first to the second.
inline tpart::Tournament two_cycles_across() {
  tpart::Tournament t(6);
  t.orient(0, 1);
  t.orient(1, 2);
  t.orient(2, 0);
  t.orient(3, 4);
  t.orient(4, 5);
  t.orient(5, 3);
  for (tpart::Vertex u = 0; u < 3; ++u)
    for (tpart::Vertex v = 3; v < 6; ++v) t.orient(u, v);
  return t;
}

inline tpart::VertexSet vs(int n, std::initializer_list<int> xs) {
  tpart::VertexSet s(n);
  for (int x : xs) s.add(x);
  return s;
}

struct Synthetic {
  tpart::Tournament t;
  tpart::GadgetFamily fam;
};

// A hand-planted connector family over a random tournament: gadget i owns a
// contiguous id range [i*(2*fan+1), ...) holding two size-`fan` fan sets and
// a forced 3-vertex path between them. Only the combinatorial structure the
// later stages consume (S sets, U, path, classification) is guaranteed; the
// transitive-fan internals are not.
inline Synthetic synthetic_family(int n, int m, int fan, int k, int tparts, uint64_t seed) {
  using namespace tpart;
  Synthetic out{random_tournament(n, seed), {}};
  Tournament& t = out.t;
  GadgetFamily& fam = out.fam;
  fam.k = k;
  fam.t = tparts;
  const int per = 2 * fan + 1;
  for (int i = 0; i < m; ++i) {
    const Vertex base = i * per;
    const Vertex p0 = base, p1 = base + fan, p2 = base + fan + 1;
    t.orient(p0, p1);
    t.orient(p1, p2);
    Gadget g;
    g.id = i;
    g.hub_in = p0;
    g.hub_out = p2;
    g.s_minus = p0;
    g.s_plus = p2;
    g.path = {p0, p1, p2};
    g.S_minus = VertexSet(n);
    for (int j = 0; j < fan; ++j) g.S_minus.add(base + j);
    g.S_plus = VertexSet(n);
    for (int j = 0; j < fan; ++j) g.S_plus.add(p2 + j);
    g.U = g.S_plus | g.S_minus;
    g.U.add(p1);
    g.S = g.U;
    g.X = compute_X(t, g);
    fam.gadgets.push_back(std::move(g));
  }
  classify_vertices(t, fam);
  return out;
}

}  // namespace helpers
