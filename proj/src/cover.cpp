#include "ijcomp/cover.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "json.hpp"

#include "ijcomp/graph_ops.hpp"

namespace ijcomp {

int CliqueCover::weight() const {
  int w = 0;
  for (const auto& c : cliques) w += static_cast<int>(c.size());
  return w;
}

bool validate_cover(const Graph& g, const CliqueCover& c, const DegreeBounds& b) {
  if (c.size() > g.n()) return false;  // condition (iv)
  std::vector<int> multiplicity(g.n(), 0);
  for (const auto& clique : c.cliques) {
    if (clique.empty()) return false;
    if (static_cast<int>(clique.size()) > b.i) return false;  // condition (i)
    std::set<int> seen;
    for (int v : clique) {
      if (v < 0 || v >= g.n() || !seen.insert(v).second) return false;
      if (++multiplicity[v] > b.j) return false;  // condition (ii)
    }
    if (!is_clique(g, clique)) return false;
  }
  // Edge cover: every edge of g inside some clique.
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& clique : c.cliques) {
      if (std::binary_search(clique.begin(), clique.end(), u) &&
          std::binary_search(clique.begin(), clique.end(), v)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

namespace {

// Kuhn's augmenting-path matching between cover indices and vertices, where
// index t may take any vertex outside clique t. Deterministic: vertices are
// scanned in ascending order.
struct SdrMatcher {
  int p, n;
  const std::vector<std::vector<int>>* cliques;
  std::vector<char> in_clique_row;  // p x n membership
  std::vector<int> vertex_of_index, index_of_vertex;

  bool allowed(int t, int v) const { return !in_clique_row[static_cast<size_t>(t) * n + v]; }

  bool augment(int t, std::vector<char>& visited) {
    for (int v = 0; v < n; ++v) {
      if (!allowed(t, v) || visited[v]) continue;
      visited[v] = 1;
      if (index_of_vertex[v] < 0 || augment(index_of_vertex[v], visited)) {
        index_of_vertex[v] = t;
        vertex_of_index[t] = v;
        return true;
      }
    }
    return false;
  }

  void run() {
    vertex_of_index.assign(p, -1);
    index_of_vertex.assign(n, -1);
    for (int t = 0; t < p; ++t) {
      std::vector<char> visited(n, 0);
      augment(t, visited);
    }
  }
};

SdrMatcher make_matcher(const Graph& g, const CliqueCover& c) {
  SdrMatcher m;
  m.p = c.size();
  m.n = g.n();
  m.cliques = &c.cliques;
  m.in_clique_row.assign(static_cast<size_t>(m.p) * m.n, 0);
  for (int t = 0; t < m.p; ++t)
    for (int v : c.cliques[t]) {
      if (v < 0 || v >= m.n) throw std::invalid_argument("cover vertex out of range");
      m.in_clique_row[static_cast<size_t>(t) * m.n + v] = 1;
    }
  return m;
}

}  // namespace

SdrResult find_sdr(const Graph& g, const CliqueCover& c) {
  SdrMatcher m = make_matcher(g, c);
  m.run();
  int first_unmatched = -1;
  for (int t = 0; t < m.p; ++t)
    if (m.vertex_of_index[t] < 0) { first_unmatched = t; break; }
  if (first_unmatched < 0)
    return SdrAssignment{std::move(m.vertex_of_index)};

  // Alternating reachability from the unmatched index: every complement
  // vertex of a reached index is reached, and reached vertices pull in the
  // index they are matched to. The reached indices outnumber the reached
  // vertices by exactly one.
  std::vector<char> index_reached(m.p, 0), vertex_reached(m.n, 0);
  std::vector<int> queue{first_unmatched};
  index_reached[first_unmatched] = 1;
  while (!queue.empty()) {
    int t = queue.back();
    queue.pop_back();
    for (int v = 0; v < m.n; ++v) {
      if (!m.allowed(t, v) || vertex_reached[v]) continue;
      vertex_reached[v] = 1;
      int t2 = m.index_of_vertex[v];
      if (t2 >= 0 && !index_reached[t2]) {
        index_reached[t2] = 1;
        queue.push_back(t2);
      }
    }
  }
  HallViolation h;
  for (int t = 0; t < m.p; ++t)
    if (index_reached[t]) h.indices.push_back(t);
  for (int v = 0; v < m.n; ++v)
    if (vertex_reached[v]) h.union_vertices.push_back(v);
  if (h.union_vertices.size() >= h.indices.size())
    throw std::logic_error("Hall violation extraction produced a non-violation");
  return h;
}

int subsets_lemma_index(const std::vector<std::vector<int>>& sets, const std::vector<int>& ground) {
  if (sets.size() <= ground.size())
    throw std::invalid_argument("need more sets than ground elements");
  std::set<int> ground_set(ground.begin(), ground.end());
  for (const auto& s : sets)
    for (int x : s)
      if (!ground_set.count(x)) throw std::invalid_argument("set element outside ground set");
  for (size_t t = 0; t < sets.size(); ++t) {
    std::set<int> others;
    for (size_t i = 0; i < sets.size(); ++i)
      if (i != t) others.insert(sets[i].begin(), sets[i].end());
    bool contained = std::all_of(sets[t].begin(), sets[t].end(),
                                 [&](int x) { return others.count(x) > 0; });
    if (contained) return static_cast<int>(t);
  }
  throw std::logic_error("no set is contained in the union of the others");
}

namespace {

bool cover_covers_all_edges(const Graph& g, const CliqueCover& c) {
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& clique : c.cliques)
      if (std::binary_search(clique.begin(), clique.end(), u) &&
          std::binary_search(clique.begin(), clique.end(), v)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

// The edge clique cover read off the arc construction for complete graphs:
// in-neighborhoods {0..n-2}, {1..n-1} and {0, n-1}. Valid for any bounds
// with i >= n-1 and j >= 2; admits the SDR (n-1, 0, 1).
CliqueCover complete_graph_cover(int n) {
  CliqueCover out;
  std::vector<int> c1, c2;
  for (int v = 0; v <= n - 2; ++v) c1.push_back(v);
  for (int v = 1; v <= n - 1; ++v) c2.push_back(v);
  out.cliques = {c1, c2, {0, n - 1}};
  return out;
}

}  // namespace

RepairResult repair_cover(const Graph& g, const CliqueCover& c, const DegreeBounds& b) {
  if (!validate_cover(g, c, b))
    throw std::invalid_argument("repair_cover: cover does not satisfy the cover conditions");
  if (g.n() == 2 && g.m() == 1)
    throw std::invalid_argument("repair_cover: K_2 is not a competition graph");
  if (b.j == 1 && g.n() >= 2 && g.is_complete())
    throw std::invalid_argument("repair_cover: nontrivial complete graph with outdegree bound 1");

  RepairResult result;
  result.cover = c;
  result.weight_trace.push_back(result.cover.weight());

  for (;;) {
    SdrResult res = find_sdr(g, result.cover);
    if (std::holds_alternative<SdrAssignment>(res)) {
      result.sdr = std::get<SdrAssignment>(res);
      return result;
    }
    const HallViolation& h = std::get<HallViolation>(res);

    if (h.union_vertices.empty() && h.indices.size() == 1) {
      // The lone violating clique has an empty complement, so it is the whole
      // vertex set and g is complete. Shrinking steps cannot help here.
      int t = h.indices.front();
      const auto& clique = result.cover.cliques[t];
      if (clique.size() < 2) {
        result.cover.cliques.erase(result.cover.cliques.begin() + t);
      } else {
        result.cover = complete_graph_cover(g.n());
      }
      result.weight_trace.push_back(result.cover.weight());
      if (!validate_cover(g, result.cover, b))
        throw std::logic_error("repair_cover: complete-graph normalization left an invalid cover");
      continue;
    }

    // Every violating clique contains all vertices outside the union, so its
    // intersection with the union determines it. Shrink one such clique that
    // the others jointly dominate.
    std::vector<std::vector<int>> q_sets;
    q_sets.reserve(h.indices.size());
    for (int t : h.indices) {
      std::vector<int> q;
      const auto& clique = result.cover.cliques[t];
      std::set_intersection(clique.begin(), clique.end(), h.union_vertices.begin(),
                            h.union_vertices.end(), std::back_inserter(q));
      q_sets.push_back(std::move(q));
    }
    int r = subsets_lemma_index(q_sets, h.union_vertices);
    int target = h.indices[r];
    int old_weight = result.cover.weight();
    if (q_sets[r].size() >= 2) {
      result.cover.cliques[target] = q_sets[r];
    } else {
      // A clique with fewer than two vertices covers no edge; drop it.
      result.cover.cliques.erase(result.cover.cliques.begin() + target);
    }
    if (result.cover.weight() >= old_weight)
      throw std::logic_error("repair_cover: replacement did not decrease the cover weight");
    if (!cover_covers_all_edges(g, result.cover))
      throw std::logic_error("repair_cover: replacement broke edge coverage");
    if (!validate_cover(g, result.cover, b))
      throw std::logic_error("repair_cover: replacement left an invalid cover");
    result.weight_trace.push_back(result.cover.weight());
  }
}

Digraph witness_digraph(const Graph& g, const CliqueCover& c, const SdrAssignment& s) {
  if (static_cast<int>(s.representatives.size()) != c.size())
    throw std::invalid_argument("witness_digraph: SDR length differs from cover size");
  std::set<int> distinct(s.representatives.begin(), s.representatives.end());
  if (distinct.size() != s.representatives.size())
    throw std::invalid_argument("witness_digraph: representatives not distinct");
  for (int t = 0; t < c.size(); ++t) {
    int rep = s.representatives[t];
    if (rep < 0 || rep >= g.n())
      throw std::invalid_argument("witness_digraph: representative out of range");
    if (std::binary_search(c.cliques[t].begin(), c.cliques[t].end(), rep))
      throw std::invalid_argument("witness_digraph: representative inside its clique");
  }
  if (!cover_covers_all_edges(g, c))
    throw std::invalid_argument("witness_digraph: cover does not cover all edges of g");

  std::set<Arc> arcs;
  for (int t = 0; t < c.size(); ++t)
    for (int v : c.cliques[t]) arcs.emplace(v, s.representatives[t]);
  Digraph d(g.n(), std::vector<Arc>(arcs.begin(), arcs.end()));
  if (competition_graph(d) != g)
    throw std::logic_error("witness_digraph: competition graph round-trip failed");
  return d;
}

std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int max_size) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int from) {
    if (static_cast<int>(current.size()) >= 2) out.push_back(current);
    if (static_cast<int>(current.size()) == max_size) return;
    for (int v = from; v < g.n(); ++v) {
      bool ok = true;
      for (int u : current)
        if (!g.has_edge(u, v)) { ok = false; break; }
      if (!ok) continue;
      current.push_back(v);
      extend(v + 1);
      current.pop_back();
    }
  };
  if (max_size >= 2) extend(0);
  return out;
}

namespace {

constexpr int kSearchVertexLimit = 20;
constexpr int kSearchCandidateLimit = 2000;

struct CoverSearch {
  const Graph* g;
  DegreeBounds b;
  std::vector<std::vector<int>> candidates;
  std::vector<std::vector<int>> candidates_of_edge;  // candidate indices per edge
  std::vector<int> cover_count;                      // per edge
  std::vector<int> multiplicity;                     // per vertex
  std::vector<int> chosen;
  int max_cliques;

  bool solve() {
    int first_uncovered = -1;
    for (size_t e = 0; e < cover_count.size(); ++e)
      if (cover_count[e] == 0) { first_uncovered = static_cast<int>(e); break; }
    if (first_uncovered < 0) return true;
    if (static_cast<int>(chosen.size()) >= max_cliques) return false;

    // Capacity prunes: remaining cliques must be able to cover what is left,
    // and each vertex's remaining multiplicity must cover its uncovered edges.
    int uncovered = 0;
    std::vector<int> uncovered_at(g->n(), 0);
    for (size_t e = 0; e < cover_count.size(); ++e)
      if (cover_count[e] == 0) {
        ++uncovered;
        ++uncovered_at[g->edges()[e].first];
        ++uncovered_at[g->edges()[e].second];
      }
    long long slots = static_cast<long long>(max_cliques - chosen.size());
    if (slots * (static_cast<long long>(b.i) * (b.i - 1) / 2) < uncovered) return false;
    for (int v = 0; v < g->n(); ++v)
      if (static_cast<long long>(b.j - multiplicity[v]) * (b.i - 1) < uncovered_at[v]) return false;

    for (int ci : candidates_of_edge[first_uncovered]) {
      const auto& clique = candidates[ci];
      bool feasible = true;
      for (int v : clique)
        if (multiplicity[v] >= b.j) { feasible = false; break; }
      if (!feasible) continue;
      place(ci, +1);
      chosen.push_back(ci);
      if (solve()) return true;
      chosen.pop_back();
      place(ci, -1);
    }
    return false;
  }

  void place(int ci, int delta) {
    const auto& clique = candidates[ci];
    for (int v : clique) multiplicity[v] += delta;
    for (size_t a = 0; a < clique.size(); ++a)
      for (size_t c = a + 1; c < clique.size(); ++c) {
        auto it = std::lower_bound(g->edges().begin(), g->edges().end(),
                                   Edge{clique[a], clique[c]});
        cover_count[it - g->edges().begin()] += delta;
      }
  }
};

}  // namespace

std::optional<CliqueCover> search_cover(const Graph& g, const DegreeBounds& b) {
  if (g.is_edgeless()) return CliqueCover{};
  if (g.n() > kSearchVertexLimit)
    throw SizeGuardError("cover search: instance too large (limit " +
                         std::to_string(kSearchVertexLimit) + " vertices, got " +
                         std::to_string(g.n()) + ")");
  CoverSearch s;
  s.g = &g;
  s.b = b;
  s.candidates = enumerate_cliques(g, b.i);
  if (static_cast<int>(s.candidates.size()) > kSearchCandidateLimit)
    throw SizeGuardError("cover search: instance too large (limit " +
                         std::to_string(kSearchCandidateLimit) + " candidate cliques, got " +
                         std::to_string(s.candidates.size()) + ")");
  s.candidates_of_edge.assign(g.m(), {});
  for (size_t ci = 0; ci < s.candidates.size(); ++ci) {
    const auto& clique = s.candidates[ci];
    for (size_t a = 0; a < clique.size(); ++a)
      for (size_t c = a + 1; c < clique.size(); ++c) {
        auto it = std::lower_bound(g.edges().begin(), g.edges().end(), Edge{clique[a], clique[c]});
        s.candidates_of_edge[it - g.edges().begin()].push_back(static_cast<int>(ci));
      }
  }
  s.cover_count.assign(g.m(), 0);
  s.multiplicity.assign(g.n(), 0);
  s.max_cliques = g.n();
  if (!s.solve()) return std::nullopt;
  CliqueCover out;
  for (int ci : s.chosen) out.cliques.push_back(s.candidates[ci]);
  return out;
}

std::string cover_to_json(const CliqueCover& c) {
  nlohmann::json doc;
  doc["cliques"] = c.cliques;
  return doc.dump();
}

CliqueCover cover_from_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON document");
  if (!doc.contains("cliques")) throw ParseError("cover JSON missing key \"cliques\"");
  CliqueCover c;
  try {
    c.cliques = doc["cliques"].get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("cover JSON: \"cliques\" must be a list of vertex lists");
  }
  for (auto& clique : c.cliques) std::sort(clique.begin(), clique.end());
  return c;
}

std::string sdr_to_json(const SdrAssignment& s) {
  nlohmann::json doc;
  doc["representatives"] = s.representatives;
  return doc.dump();
}

SdrAssignment sdr_from_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON document");
  if (!doc.contains("representatives"))
    throw ParseError("SDR JSON missing key \"representatives\"");
  SdrAssignment s;
  try {
    s.representatives = doc["representatives"].get<std::vector<int>>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("SDR JSON: \"representatives\" must be a list of vertices");
  }
  return s;
}

}  // namespace ijcomp
