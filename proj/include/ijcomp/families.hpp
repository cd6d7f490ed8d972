#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ijcomp/cover.hpp"
#include "ijcomp/types.hpp"

namespace ijcomp {

/// Star of cliques: one hub vertex shared by j otherwise disjoint cliques of
/// size i. Member of the (i,j) family via the obvious j-clique cover; its hub
/// has degree (i-1)j and hub-plus-one-leaf-per-clique induces a j-leaf star.
/// Requires i >= 2 and j >= 2.
Graph star_of_cliques(int i, int j);

/// The j cliques of star_of_cliques(i, j), each hub + one leaf group.
CliqueCover star_of_cliques_cover(int i, int j);

/// The Hamming-style graph on tuples [0..k]^k, adjacent when they differ in
/// exactly one coordinate, together with its cover by axis-parallel lines
/// (cliques of size k+1, each vertex on exactly k of them). Validates for
/// bounds (k+1, k) while its edge density k^2/2 exceeds k(k-1)/2, the largest
/// density any graph in a (k, l) family allows. Guard: k <= 4.
std::pair<Graph, CliqueCover> hamming_graph(int k);

/// Disjoint union of two complete graphs of order i.
Graph double_clique(int i);

enum class Relation { Equal, ProperSubset, NotContained, Unknown };

std::string relation_name(Relation r);

/// How the family of competition graphs for bounds `a` relates to the family
/// for bounds `b`. For ProperSubset, `subset`/`superset` spell out the
/// direction; `witness` lies in exactly one family (the superset for
/// ProperSubset; witness/witness_reverse cover both directions for
/// NotContained). Every attached witness has been machine-verified.
struct ContainmentVerdict {
  DegreeBounds a{1, 1}, b{1, 1};
  Relation relation = Relation::Unknown;
  std::optional<DegreeBounds> subset, superset;
  std::optional<Graph> witness;
  std::optional<DegreeBounds> witness_member, witness_non_member;
  std::optional<Graph> witness_reverse;
  std::string rationale;
};

ContainmentVerdict containment(const DegreeBounds& a, const DegreeBounds& b);

/// A graph in the `member` family but not in the `non_member` family, picked
/// from the fixed gadgets (star of cliques, double clique, Hamming graph, and
/// the K_5+K_5 instance that needs an exhaustive cover search), with both
/// sides machine-verified before returning. std::nullopt when no gadget
/// applies (the open region of the containment question).
std::optional<Graph> separation_witness(const DegreeBounds& member, const DegreeBounds& non_member);

std::string verdict_to_json(const ContainmentVerdict& v);

}  // namespace ijcomp
