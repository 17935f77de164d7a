#include "tpart/tournament.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace tpart {

namespace {
[[noreturn]] void bad_pair(const char* what, Vertex u, Vertex v) {
  std::ostringstream os;
  os << what << " {" << u << "," << v << "}";
  throw std::invalid_argument(os.str());
}
}  // namespace

Tournament Tournament::build(int n, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Tournament t(n);
  std::vector<bool> seen(static_cast<size_t>(n) * n, false);
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n) bad_pair("vertex out of range in pair", u, v);
    if (u == v) bad_pair("self-loop", u, v);
    size_t a = static_cast<size_t>(std::min(u, v)) * n + std::max(u, v);
    if (seen[a]) bad_pair("duplicate-pair", u, v);
    seen[a] = true;
    t.orient(u, v);
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!seen[static_cast<size_t>(u) * n + v]) bad_pair("missing-pair", u, v);
  return t;
}

void Tournament::out_set(Vertex v, VertexSet& out) const {
  const uint64_t* row = out_row(v);
  uint64_t* w = out.data();
  for (int i = 0; i < words_; ++i) w[i] = row[i];
}

void Tournament::in_set(Vertex v, VertexSet& out) const {
  // in-neighbours = everything except v itself and out-neighbours.
  out.fill_all();
  const uint64_t* row = out_row(v);
  uint64_t* w = out.data();
  for (int i = 0; i < words_; ++i) w[i] &= ~row[i];
  out.remove(v);
}

VertexSet Tournament::out_set(Vertex v) const {
  VertexSet s(n_);
  out_set(v, s);
  return s;
}

VertexSet Tournament::in_set(Vertex v) const {
  VertexSet s(n_);
  in_set(v, s);
  return s;
}

int Tournament::out_degree(Vertex v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex-out-of-range");
  int c = 0;
  const uint64_t* row = out_row(v);
  for (int i = 0; i < words_; ++i) c += std::popcount(row[i]);
  return c;
}

int Tournament::in_degree(Vertex v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex-out-of-range");
  return n_ - 1 - out_degree(v);
}

int Tournament::out_count_in(Vertex u, const VertexSet& s) const {
  const uint64_t* row = out_row(u);
  const uint64_t* w = s.data();
  int c = 0;
  for (int i = 0; i < words_; ++i) c += std::popcount(row[i] & w[i]);
  return c;
}

int Tournament::in_count_in(Vertex u, const VertexSet& s) const {
  int c = s.count() - out_count_in(u, s);
  if (s.contains(u)) --c;
  return c;
}

bool Tournament::has_out_neighbour_in(Vertex u, const VertexSet& s) const {
  const uint64_t* row = out_row(u);
  const uint64_t* w = s.data();
  for (int i = 0; i < words_; ++i)
    if (row[i] & w[i]) return true;
  return false;
}

bool Tournament::has_in_neighbour_in(Vertex u, const VertexSet& s) const { return in_count_in(u, s) > 0; }

Tournament Tournament::reversed() const {
  Tournament r(n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v) {
      if (arc(u, v))
        r.orient(v, u);
      else
        r.orient(u, v);
    }
  return r;
}

std::pair<Tournament, std::vector<Vertex>> Tournament::induced(const VertexSet& s) const {
  if (s.universe() != n_) throw std::out_of_range("vertex-out-of-range");
  std::vector<Vertex> map = s.to_vector();
  int m = static_cast<int>(map.size());
  Tournament t(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (arc(map[i], map[j]))
        t.orient(i, j);
      else
        t.orient(j, i);
    }
  return {std::move(t), std::move(map)};
}

VertexSet reach_forward(const Tournament& t, Vertex from, const VertexSet& within) {
  int n = t.size();
  VertexSet seen(n);
  seen.add(from);
  VertexSet frontier(n);
  frontier.add(from);
  VertexSet nxt(n);
  while (!frontier.empty()) {
    nxt.clear();
    for (Vertex v = frontier.first(); v >= 0; v = frontier.next(v)) {
      const uint64_t* row = t.out_row(v);
      uint64_t* nw = nxt.data();
      for (int i = 0; i < t.row_words(); ++i) nw[i] |= row[i];
    }
    nxt &= within;
    nxt -= seen;
    seen |= nxt;
    frontier = nxt;
  }
  return seen;
}

VertexSet reach_backward(const Tournament& t, Vertex from, const VertexSet& within) {
  int n = t.size();
  VertexSet seen(n);
  seen.add(from);
  bool grew = true;
  // Backward step: v joins if it has an out-neighbour in `seen`.
  while (grew) {
    grew = false;
    for (Vertex v = within.first(); v >= 0; v = within.next(v)) {
      if (seen.contains(v)) continue;
      if (t.out_count_in(v, seen) > 0) {
        seen.add(v);
        grew = true;
      }
    }
  }
  seen &= within;
  VertexSet r = seen;
  r.add(from);
  return r;
}

bool strongly_connected_subset(const Tournament& t, const VertexSet& within) {
  int m = within.count();
  if (m <= 1) return true;
  Vertex root = within.first();
  VertexSet fwd = reach_forward(t, root, within);
  if (fwd.count() != m) return false;
  VertexSet bwd = reach_backward(t, root, within);
  return bwd.count() == m;
}

bool is_strongly_connected(const Tournament& t) {
  VertexSet all(t.size());
  all.fill_all();
  return strongly_connected_subset(t, all);
}

std::string to_trn(const Tournament& t) {
  std::ostringstream os;
  os << t.size() << "\n";
  for (Vertex i = 0; i + 1 < t.size(); ++i) {
    for (Vertex j = i + 1; j < t.size(); ++j) os << (t.arc(i, j) ? '1' : '0');
    os << "\n";
  }
  return os.str();
}

Tournament from_trn(std::istream& in) {
  int n;
  if (!(in >> n) || n < 0) throw std::runtime_error("trn: bad vertex count");
  Tournament t(n);
  for (Vertex i = 0; i + 1 < n; ++i) {
    std::string line;
    if (!(in >> line) || static_cast<int>(line.size()) != n - 1 - i) throw std::runtime_error("trn: bad row length at row " + std::to_string(i));
    for (Vertex j = i + 1; j < n; ++j) {
      char c = line[j - i - 1];
      if (c == '1')
        t.orient(i, j);
      else if (c == '0')
        t.orient(j, i);
      else
        throw std::runtime_error("trn: bad character in row " + std::to_string(i));
    }
  }
  return t;
}

Tournament read_trn_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return from_trn(f);
}

void write_trn_file(const Tournament& t, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << to_trn(t);
}

}  // namespace tpart
