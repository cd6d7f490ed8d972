#pragma once

#include <utility>
#include <vector>

#include "ijcomp/types.hpp"

namespace ijcomp {

/// Chordality verdict with a constructive counterexample: when the graph is
/// not chordal, `hole` is an induced cycle of length >= 4, canonicalized to
/// its lexicographically least rotation/reflection.
struct HoleCertificate {
  bool chordal = true;
  std::vector<int> hole;
};

/// Maximum-cardinality-search based chordality test; on failure a hole is
/// extracted by scanning nonadjacent neighbor pairs.
HoleCertificate is_chordal(const Graph& g);

/// The five fixed digraphs whose presence as a subdigraph is equivalent to a
/// triangle in the competition graph, exactly as drawn:
///   [0] three predators, three distinct shared prey (6 vertices, 6 arcs)
///   [1] three predators sharing one prey (4 vertices, 3 arcs)
///   [2] two external prey, one predator preyed on by the others (5 vertices, 6 arcs)
///   [3] three mutual digons (3 vertices, 6 arcs)
///   [4] one digon pair with a shared prey and a shared predator (4 vertices, 6 arcs)
const std::vector<Digraph>& triangle_patterns();

/// Two vertices with the same two out-neighbors (4 vertices, 4 arcs).
const Digraph& p22_pattern();

/// True iff host has a (not necessarily induced) subdigraph isomorphic to
/// pattern: an injective vertex map carrying every pattern arc to an arc.
bool has_subdigraph(const Digraph& host, const Digraph& pattern);

/// True iff d contains one of the five triangle patterns as a subdigraph.
bool induces_triangle(const Digraph& d);

/// True iff no two distinct vertices have two distinct common out-neighbors.
bool is_irredundant(const Digraph& d);

/// A subdigraph (vertex and arc subset) in which every vertex has indegree 0
/// or 2 and outdegree 0 or 2, which is irredundant, has an arc, and does not
/// induce a triangle.
struct GoodSubdigraphReport {
  bool found = false;
  std::vector<int> vertices;
  std::vector<Arc> arcs;
};

/// Searches for a good subdigraph. A hole in the competition graph yields one
/// directly (consecutive hole vertices with distinct shared prey); otherwise
/// an exhaustive enumeration of cycle skeletons runs for hosts with at most
/// 10 vertices, and larger chordal-competition hosts raise a SizeGuardError.
GoodSubdigraphReport find_good_subdigraph(const Digraph& d);

/// Independent re-check of the three defining conditions plus the degree
/// shape of a positive report against its host.
bool verify_good_subdigraph(const Digraph& host, const GoodSubdigraphReport& report);

/// For a digraph with indegrees <= i and outdegrees <= 2 (checked), computes
/// both chordality of the competition graph and the good-subdigraph search,
/// asserts they agree, and returns both.
std::pair<bool, GoodSubdigraphReport> chordal_iff_no_good(const Digraph& d, int i);

/// For a digraph with indegrees and outdegrees <= 2 (checked): its
/// competition graph has maximum degree <= 2, so it is interval exactly when
/// no component is a cycle of length >= 4. Cross-checked against the
/// good-subdigraph search.
bool interval_22(const Digraph& d);

}  // namespace ijcomp
