#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tpart {

using Vertex = int;

/// Fixed-universe bitset over vertex ids [0, n). Used for all set-valued
/// quantities (Z, W, V_i, S, U, ...).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe() const { return n_; }
  int words() const { return static_cast<int>(w_.size()); }

  bool contains(Vertex v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
  void add(Vertex v) { w_[v >> 6] |= uint64_t{1} << (v & 63); }
  void remove(Vertex v) { w_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }
  void clear() { std::fill(w_.begin(), w_.end(), uint64_t{0}); }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }
  bool empty() const {
    for (uint64_t x : w_)
      if (x) return false;
    return true;
  }

  void fill_all() {
    if (n_ == 0) return;
    std::fill(w_.begin(), w_.end(), ~uint64_t{0});
    trim();
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }

  bool is_subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  int intersection_count(const VertexSet& o) const {
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  /// Smallest member, or -1 when empty.
  Vertex first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<Vertex>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }
  /// Smallest member greater than v, or -1.
  Vertex next(Vertex v) const {
    int i = (v + 1) >> 6;
    if (i >= words()) return -1;
    uint64_t x = w_[i] & (~uint64_t{0} << ((v + 1) & 63));
    while (true) {
      if (x) return static_cast<Vertex>(i * 64 + std::countr_zero(x));
      if (++i >= words()) return -1;
      x = w_[i];
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for (Vertex v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }
  static VertexSet of(int n, const std::vector<Vertex>& vs) {
    VertexSet s(n);
    for (Vertex v : vs) s.add(v);
    return s;
  }

  uint64_t* data() { return w_.data(); }
  const uint64_t* data() const { return w_.data(); }

 private:
  void trim() {
    if (n_ % 64) w_.back() &= (~uint64_t{0}) >> (64 - n_ % 64);
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace tpart
