#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tpart/profile.hpp"
#include "tpart/stage.hpp"
#include "tpart/tournament.hpp"

namespace tpart {

/// One connector unit: two transitive fan sets joined by a path, plus the
/// exception set X of vertices that behave like neighbours of the path
/// terminals but not of the whole interior.
struct Gadget {
  int id = -1;
  Vertex hub_out = -1;  // sink of the transitive set S_plus
  Vertex hub_in = -1;   // source of the transitive set S_minus
  VertexSet S_plus, S_minus;
  std::vector<Vertex> path;  // starts at s_minus, ends at s_plus
  Vertex s_plus = -1, s_minus = -1;
  VertexSet U;  // S_plus | S_minus | path vertices
  VertexSet S;  // S_plus | S_minus | first three | last three path vertices
  VertexSet X;
};

struct GadgetFamily {
  int k = 0, t = 0;
  bool reversed = false;  // built on the arc-reversed tournament
  std::vector<Gadget> gadgets;
  VertexSet V_okay, V_bad_plus, V_bad_minus, V_bad, V_good_plus, V_good_minus, V_good;

  int size() const { return static_cast<int>(gadgets.size()); }
};

/// Top-m out-degree vertices and top-m in-degree vertices among the rest;
/// ties by smallest id. Requires n > 2m.
std::pair<VertexSet, VertexSet> select_hubs(const Tournament& t, int m);

enum class SeqDirection { out, in };

/// Greedy dominating sequence rooted at `a` (which must be outside `pool`).
/// direction out: each step picks the maximum-out-degree vertex (ties by
/// smallest id) among pool vertices not yet dominated (no in-neighbour among
/// the chosen); result induces a transitive set with sink `a`. direction in
/// is the mirror image (source `a`). At most cap vertices are added after
/// `a`. `residual_trace`, when given, records the undominated-pool size
/// before each pick (for the halving-bound check).
std::vector<Vertex> build_dominating_seq(const Tournament& t, Vertex a, const VertexSet& pool, int cap,
                                         SeqDirection dir, std::vector<int>* residual_trace = nullptr);

/// X = {u : (u -> s_plus and some w in U\S has w -> u) or
///          (s_minus -> u and some w in U\S has u -> w)}.
VertexSet compute_X(const Tournament& t, const Gadget& g);

/// Fills the V_okay / V_bad / V_good classification from the gadgets'
/// S-sets; miss threshold is k*t gadgets.
void classify_vertices(const Tournament& t, GadgetFamily& fam);

/// The full construction: hubs, dominating sequences, disjoint path routing,
/// path minimization, pairing, exception sets, classification. Deterministic
/// for fixed inputs; `seed` is accepted for interface uniformity. When the
/// orientation convention |V_bad_minus| >= |V_bad_plus| fails, the whole
/// construction is redone on the arc-reversed tournament (reversed = true).
StageResult<GadgetFamily> build_gadget_family(const Tournament& t, int k, int tparts, const ConstantsProfile& prof,
                                              uint64_t seed, StageLog* log = nullptr);

struct GadgetReport {
  struct Item {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Item> items;
  bool all_pass = true;
  bool g1_to_g4() const;
  const Item* find(const std::string& name) const;
};

/// Per-property verification of the structural (G1-G4) and classification
/// (G5-G9) guarantees, with counterexamples on failure. Absolute constants
/// are taken from the profile.
GadgetReport verify_gadget_properties(const Tournament& t, const GadgetFamily& fam, const ConstantsProfile& prof);

nlohmann::json family_to_json(const GadgetFamily& fam);

/// Union of U(alpha) over an index set (universe = number of gadgets).
VertexSet union_U(const GadgetFamily& fam, const VertexSet& indices);
/// W(A) = V \ U(A).
VertexSet W_of(const GadgetFamily& fam, const VertexSet& indices, int n);
/// All gadget indices as a set.
VertexSet all_indices(const GadgetFamily& fam);

}  // namespace tpart
