#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tpart/bitset.hpp"

namespace tpart {

/// A tournament: complete oriented graph on n vertices. Orientation is
/// bit-packed by rows; bit w of row v is set iff the arc v -> w exists.
class Tournament {
 public:
  Tournament() = default;
  explicit Tournament(int n) : n_(n), words_((n + 63) / 64), rows_(static_cast<size_t>(n) * words_, 0) {}

  /// Builds from an explicit arc list. Every unordered pair must appear
  /// exactly once; throws std::invalid_argument naming the offending pair.
  static Tournament build(int n, const std::vector<std::pair<Vertex, Vertex>>& arcs);

  int size() const { return n_; }
  int row_words() const { return words_; }

  bool arc(Vertex u, Vertex v) const { return (rows_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1; }

  /// Orients the pair {u,v} as u -> v, clearing any previous orientation.
  void orient(Vertex u, Vertex v) {
    set_bit(u, v);
    clear_bit(v, u);
  }

  const uint64_t* out_row(Vertex v) const { return rows_.data() + static_cast<size_t>(v) * words_; }

  /// Writes N+(v) into `out` (out must have universe n).
  void out_set(Vertex v, VertexSet& out) const;
  /// Writes N-(v) into `out`.
  void in_set(Vertex v, VertexSet& out) const;
  VertexSet out_set(Vertex v) const;
  VertexSet in_set(Vertex v) const;

  int out_degree(Vertex v) const;
  int in_degree(Vertex v) const;

  /// |N+(u) ∩ s|, via word ops.
  int out_count_in(Vertex u, const VertexSet& s) const;
  int in_count_in(Vertex u, const VertexSet& s) const;
  bool has_out_neighbour_in(Vertex u, const VertexSet& s) const;
  bool has_in_neighbour_in(Vertex u, const VertexSet& s) const;

  /// Orientation-reversed copy.
  Tournament reversed() const;

  /// Subtournament induced on S, vertices relabeled densely in ascending
  /// order. Returns the new tournament and the old-id list (new id i had
  /// old id map[i]).
  std::pair<Tournament, std::vector<Vertex>> induced(const VertexSet& s) const;

  bool operator==(const Tournament& o) const { return n_ == o.n_ && rows_ == o.rows_; }

 private:
  void set_bit(Vertex u, Vertex v) { rows_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63); }
  void clear_bit(Vertex u, Vertex v) { rows_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(uint64_t{1} << (v & 63)); }

  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> rows_;
};

/// Forward-reachable set from `from` within `within` (which must contain
/// `from`); follows arcs of T restricted to `within`.
VertexSet reach_forward(const Tournament& t, Vertex from, const VertexSet& within);
VertexSet reach_backward(const Tournament& t, Vertex from, const VertexSet& within);

/// True iff T[within] is strongly connected (|within| <= 1 counts as true).
bool strongly_connected_subset(const Tournament& t, const VertexSet& within);
bool is_strongly_connected(const Tournament& t);

/// .trn text format: line 1 is n; for each i in 0..n-2 one line of n-1-i
/// characters from {0,1}; character j is 1 iff i -> (i+1+j).
std::string to_trn(const Tournament& t);
Tournament from_trn(std::istream& in);
Tournament read_trn_file(const std::string& path);
void write_trn_file(const Tournament& t, const std::string& path);

}  // namespace tpart
