#include "ijcomp/types.hpp"

#include <algorithm>

namespace ijcomp {

namespace detail {

std::vector<int> BitRows::row_intersection(int r1, int r2) const {
  std::vector<int> out;
  const uint64_t* a = &bits_[static_cast<size_t>(r1) * words_];
  const uint64_t* b = &bits_[static_cast<size_t>(r2) * words_];
  for (int w = 0; w < words_; ++w) {
    uint64_t x = a[w] & b[w];
    while (x) {
      int bit = __builtin_ctzll(x);
      out.push_back(w * 64 + bit);
      x &= x - 1;
    }
  }
  return out;
}

}  // namespace detail

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u) + "-" + std::to_string(v));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
  neighbors_.assign(n_, {});
  adj_ = detail::BitRows(n_, n_);
  for (auto [u, v] : edges_) {
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
    adj_.set(u, v);
    adj_.set(v, u);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto [u, v] : arcs) {
    if (u == v) throw std::invalid_argument("loop arc at " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("arc endpoint out of range: " + std::to_string(u) + "->" + std::to_string(v));
  }
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
    throw std::invalid_argument("duplicate arc");
  arcs_ = std::move(arcs);
  out_.assign(n_, {});
  in_.assign(n_, {});
  out_bits_ = detail::BitRows(n_, n_);
  for (auto [u, v] : arcs_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
    out_bits_.set(u, v);
  }
  for (auto& nb : out_) std::sort(nb.begin(), nb.end());
  for (auto& nb : in_) std::sort(nb.begin(), nb.end());
}

}  // namespace ijcomp
