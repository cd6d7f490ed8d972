#include "ijcomp/graph_ops.hpp"

#include <algorithm>
#include <functional>

namespace ijcomp {

Graph competition_graph(const Digraph& d) {
  std::vector<Edge> edges;
  for (int u = 0; u < d.n(); ++u)
    for (int v = u + 1; v < d.n(); ++v)
      if (d.share_out_neighbor(u, v)) edges.emplace_back(u, v);
  return Graph(d.n(), std::move(edges));
}

bool is_ij_digraph(const Digraph& d, const DegreeBounds& b) {
  for (int v = 0; v < d.n(); ++v)
    if (d.in_degree(v) > b.i || d.out_degree(v) > b.j) return false;
  return true;
}

std::string necessary_condition_name(NecessaryCondition c) {
  switch (c) {
    case NecessaryCondition::EdgeCount: return "edge-count";
    case NecessaryCondition::StarFree: return "K1,j+1-free";
    case NecessaryCondition::MaxDegree: return "max-degree";
  }
  return "?";
}

std::vector<NecessaryCondition> necessary_conditions(const Graph& g, const DegreeBounds& b) {
  std::vector<NecessaryCondition> failed;
  long long lhs = 2LL * g.m();
  long long rhs = static_cast<long long>(b.i - 1) * b.i * g.n();
  if (lhs > rhs) failed.push_back(NecessaryCondition::EdgeCount);
  if (!is_k1t_free(g, b.j + 1)) failed.push_back(NecessaryCondition::StarFree);
  if (g.max_degree() > b.j * (b.i - 1)) failed.push_back(NecessaryCondition::MaxDegree);
  return failed;
}

namespace {

// Does N(v) contain an independent set of size t?
bool neighborhood_has_independent_set(const Graph& g, int v, int t) {
  const auto& nb = g.neighbors(v);
  std::vector<int> chosen;
  std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
    if (static_cast<int>(chosen.size()) == t) return true;
    if (chosen.size() + (nb.size() - idx) < static_cast<size_t>(t)) return false;
    for (size_t k = idx; k < nb.size(); ++k) {
      int w = nb[k];
      bool ok = true;
      for (int c : chosen)
        if (g.has_edge(c, w)) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(w);
      if (rec(k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace

bool is_k1t_free(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("star size must be positive");
  for (int v = 0; v < g.n(); ++v)
    if (neighborhood_has_independent_set(g, v, t)) return false;
  return true;
}

namespace {

// Branch and bound over 64-bit candidate sets with a greedy colouring bound.
struct CliqueSolver {
  std::vector<uint64_t> adj;
  int best = 0;

  void expand(uint64_t cand, int size) {
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    // Greedy colouring of the candidate set; a vertex of colour c starts a
    // clique of size at most c within the candidates coloured so far.
    std::vector<int> order;
    std::vector<int> colour;
    uint64_t uncoloured = cand;
    int classes = 0;
    while (uncoloured) {
      ++classes;
      uint64_t avail = uncoloured;
      while (avail) {
        int v = __builtin_ctzll(avail);
        uint64_t bit = uint64_t{1} << v;
        avail &= ~(adj[v] | bit);
        uncoloured &= ~bit;
        order.push_back(v);
        colour.push_back(classes);
      }
    }
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (size + colour[idx] <= best) return;
      int v = order[idx];
      expand(cand & adj[v], size + 1);
      cand &= ~(uint64_t{1} << v);
    }
  }
};

}  // namespace

int clique_number(const Graph& g) {
  if (g.n() > 64)
    throw SizeGuardError("clique number: graph too large (limit 64 vertices, got " +
                         std::to_string(g.n()) + ")");
  if (g.n() == 0) return 0;
  CliqueSolver s;
  s.adj.assign(g.n(), 0);
  for (auto [u, v] : g.edges()) {
    s.adj[u] |= uint64_t{1} << v;
    s.adj[v] |= uint64_t{1} << u;
  }
  uint64_t all = (g.n() == 64) ? ~uint64_t{0} : ((uint64_t{1} << g.n()) - 1);
  s.expand(all, 0);
  return s.best;
}

std::pair<int, int> graph_stats(const Graph& g) {
  return {g.max_degree(), clique_number(g)};
}

bool is_clique(const Graph& g, const std::vector<int>& vertices) {
  for (size_t a = 0; a < vertices.size(); ++a)
    for (size_t b = a + 1; b < vertices.size(); ++b)
      if (!g.has_edge(vertices[a], vertices[b])) return false;
  return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(g.n(), false);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) { seen[w] = true; stack.push_back(w); }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace ijcomp
