#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ijcomp/types.hpp"

namespace ijcomp {

/// An ordered list of cliques of a host graph meant to cover all its edges.
/// Cliques are stored as sorted vertex lists; duplicates entries are allowed.
struct CliqueCover {
  std::vector<std::vector<int>> cliques;

  int size() const { return static_cast<int>(cliques.size()); }
  /// Total weight: sum of clique sizes.
  int weight() const;

  bool operator==(const CliqueCover& o) const { return cliques == o.cliques; }
};

/// Distinct representatives v_t with v_t outside clique t of a cover.
struct SdrAssignment {
  std::vector<int> representatives;

  bool operator==(const SdrAssignment& o) const { return representatives == o.representatives; }
};

/// A family of cover indices whose complements union to fewer vertices than
/// there are indices, witnessing that no SDR exists (Hall's condition fails).
struct HallViolation {
  std::vector<int> indices;         // 0-based cover indices, sorted
  std::vector<int> union_vertices;  // union of V - C_t over the indices, sorted
};

using SdrResult = std::variant<SdrAssignment, HallViolation>;

/// True iff c is an edge clique cover of g in which every clique has at most
/// b.i vertices, every vertex lies in at most b.j cliques, and the number of
/// cliques is at most |V(g)|. Malformed covers (out-of-range or repeated
/// vertices, non-clique sets, empty sets) simply return false.
bool validate_cover(const Graph& g, const CliqueCover& c, const DegreeBounds& b);

/// Finds an SDR of {V(g)-C_1, ..., V(g)-C_p} via maximum bipartite matching,
/// or extracts a Hall violation from the alternating reachability set of an
/// unmatched index.
SdrResult find_sdr(const Graph& g, const CliqueCover& c);

/// Given more sets than ground elements, returns the smallest index t such
/// that sets[t] is contained in the union of the others. Throws
/// std::invalid_argument when |sets| <= |ground| or a set leaves the ground.
int subsets_lemma_index(const std::vector<std::vector<int>>& sets, const std::vector<int>& ground);

struct RepairResult {
  CliqueCover cover;
  SdrAssignment sdr;
  /// Cover weight before the loop and after each replacement; strictly
  /// decreasing across replacement iterations.
  std::vector<int> weight_trace;
};

/// Repairs a cover that satisfies the size/multiplicity/count conditions but
/// lacks an SDR: while Hall fails, intersect the violating cliques with the
/// union of their complements, pick a clique contained in the union of the
/// others, and shrink it (dropping it when it no longer covers an edge).
/// Each replacement keeps the cover valid and strictly decreases its weight.
///
/// Covers of a complete graph that contain the full vertex set as a clique
/// cannot be fixed by shrinking steps (the all-vertices clique blocks every
/// SDR and nothing lighter covers the graph); such covers are replaced
/// outright by the three-clique cover of a complete graph that the explicit
/// construction for complete competition graphs yields.
///
/// Requires validate_cover(g, c, b); g must not be K_2, and for b.j == 1 it
/// must not be a nontrivial complete graph.
RepairResult repair_cover(const Graph& g, const CliqueCover& c, const DegreeBounds& b);

/// The digraph with arcs (v, v_t) for every v in C_t. Its competition graph
/// is exactly g (checked), and it satisfies any bounds the cover validates
/// against. Requires s to be a valid SDR for c and c to cover g's edges.
Digraph witness_digraph(const Graph& g, const CliqueCover& c, const SdrAssignment& s);

/// Exhaustive deterministic backtracking for a cover satisfying the
/// size/multiplicity/count conditions; std::nullopt proves none exists.
/// Guards: at most 20 vertices and at most 2000 candidate cliques.
std::optional<CliqueCover> search_cover(const Graph& g, const DegreeBounds& b);

/// All cliques of g with between 2 and max_size vertices, in lexicographic
/// order of their sorted vertex lists.
std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int max_size);

// JSON forms: {"cliques": [[v,...],...]} and {"representatives": [v,...]}.
std::string cover_to_json(const CliqueCover& c);
CliqueCover cover_from_json(const std::string& text);
std::string sdr_to_json(const SdrAssignment& s);
SdrAssignment sdr_from_json(const std::string& text);

}  // namespace ijcomp
