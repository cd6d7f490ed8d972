#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ijcomp/types.hpp"

namespace ijcomp {

/// The competition graph of d: same vertices, edge uv iff u and v have a
/// common out-neighbor in d.
Graph competition_graph(const Digraph& d);

/// True iff every vertex of d has indegree <= b.i and outdegree <= b.j.
bool is_ij_digraph(const Digraph& d, const DegreeBounds& b);

/// The three degree-based conditions every competition graph of a digraph
/// within bounds (i, j) must satisfy. Necessary, not sufficient.
enum class NecessaryCondition {
  EdgeCount,   // |E| <= i(i-1)/2 * |V|
  StarFree,    // no induced K_{1,j+1}
  MaxDegree,   // max degree <= j(i-1)
};

std::string necessary_condition_name(NecessaryCondition c);

/// Returns the conditions that FAIL for (g, b); empty means all three hold.
std::vector<NecessaryCondition> necessary_conditions(const Graph& g, const DegreeBounds& b);

/// True iff g has no induced star K_{1,t}, i.e. no vertex has t pairwise
/// nonadjacent neighbors. Requires t >= 1.
bool is_k1t_free(const Graph& g, int t);

/// (max degree, clique number). The clique number is exact, computed by
/// branch and bound with greedy colouring bounds; graphs with more than 64
/// vertices are rejected with a SizeGuardError.
std::pair<int, int> graph_stats(const Graph& g);

/// Exact clique number; same 64-vertex guard as graph_stats.
int clique_number(const Graph& g);

// Small shared helpers.
bool is_clique(const Graph& g, const std::vector<int>& vertices);
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace ijcomp
