#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ijcomp {

/// Thrown when an input exceeds a documented exact-computation limit.
class SizeGuardError : public std::runtime_error {
 public:
  explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a text or JSON document cannot be parsed.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

using Edge = std::pair<int, int>;  // undirected pair, normalized first < second
using Arc = std::pair<int, int>;   // (tail, head)

namespace detail {

// Row-per-vertex bit matrix; rows are (n+63)/64 words.
class BitRows {
 public:
  BitRows() = default;
  BitRows(int rows, int cols)
      : cols_(cols), words_((cols + 63) / 64), bits_(static_cast<size_t>(rows) * words_, 0) {}

  void set(int r, int c) { bits_[static_cast<size_t>(r) * words_ + c / 64] |= (uint64_t{1} << (c % 64)); }
  bool test(int r, int c) const {
    return (bits_[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1u;
  }
  bool rows_intersect(int r1, int r2) const {
    const uint64_t* a = &bits_[static_cast<size_t>(r1) * words_];
    const uint64_t* b = &bits_[static_cast<size_t>(r2) * words_];
    for (int w = 0; w < words_; ++w)
      if (a[w] & b[w]) return true;
    return false;
  }
  // Vertices present in both rows, ascending.
  std::vector<int> row_intersection(int r1, int r2) const;

 private:
  int cols_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

}  // namespace detail

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
/// Construction rejects loops, out-of-range endpoints and duplicate edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : Graph(n, {}) {}
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int u, int v) const { return u != v && adj_.test(u, v); }
  int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }

  int max_degree() const;
  bool is_complete() const { return static_cast<long long>(m()) * 2 == static_cast<long long>(n_) * (n_ - 1); }
  bool is_edgeless() const { return edges_.empty(); }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;                 // sorted, u < v
  std::vector<std::vector<int>> neighbors_; // sorted adjacency lists
  detail::BitRows adj_;
};

/// Loopless digraph without parallel arcs on vertices 0..n-1; a digon
/// (both (u,v) and (v,u)) is allowed. Immutable after construction.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n) : Digraph(n, {}) {}
  Digraph(int n, std::vector<Arc> arcs);

  int n() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  bool has_arc(int u, int v) const { return u != v && out_bits_.test(u, v); }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  bool share_out_neighbor(int u, int v) const { return out_bits_.rows_intersect(u, v); }
  std::vector<int> common_out_neighbors(int u, int v) const { return out_bits_.row_intersection(u, v); }

  bool operator==(const Digraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }
  bool operator!=(const Digraph& o) const { return !(*this == o); }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;  // sorted, unique
  std::vector<std::vector<int>> out_, in_;
  detail::BitRows out_bits_;
};

/// Degree bounds (i, j): max indegree i, max outdegree j. Both positive.
struct DegreeBounds {
  int i = 1;
  int j = 1;

  DegreeBounds() = default;
  DegreeBounds(int i_, int j_) : i(i_), j(j_) {
    if (i < 1 || j < 1) throw std::invalid_argument("degree bounds must be positive");
  }

  bool operator==(const DegreeBounds& o) const { return i == o.i && j == o.j; }
  bool operator!=(const DegreeBounds& o) const { return !(*this == o); }
};

}  // namespace ijcomp
