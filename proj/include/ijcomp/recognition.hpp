#pragma once

#include <optional>
#include <string>

#include "ijcomp/graph_ops.hpp"
#include "ijcomp/types.hpp"

namespace ijcomp {

enum class Obstruction {
  IsK2,                       // K_2 is never a competition graph
  CompleteWithJ1,             // nontrivial complete graphs need outdegree >= 2
  NecessaryConditionFailed,   // one of the degree-based conditions fails
  NoCoverExists,              // exhaustive search proved the cover set empty
};

/// Outcome of the membership decision: either a witness digraph whose
/// competition graph is the input and which satisfies the bounds, or the
/// name of a checkable obstruction.
struct RecognitionCertificate {
  bool member = false;
  std::optional<Digraph> witness;
  std::optional<Obstruction> obstruction;
  std::optional<NecessaryCondition> failed_condition;

  std::string obstruction_string() const;
};

/// Decides whether g is the competition graph of some digraph with indegree
/// at most b.i and outdegree at most b.j. Member witnesses are round-trip
/// verified before being returned. May throw SizeGuardError when the cover
/// search guard trips.
RecognitionCertificate recognize(const Graph& g, const DegreeBounds& b);

/// Membership with indegree bound 1 (any outdegree): exactly the edgeless graphs.
bool recognize_1j(const Graph& g);

/// Membership with outdegree bound 1: the trivial graph or a disjoint union
/// of at least two complete graphs, each with at most i vertices.
bool recognize_i1(const Graph& g, int i);

/// The explicit digraph on n >= 3 vertices whose competition graph is K_n:
/// everything feeds vertex n-1, everything feeds vertex 0, and 0 and n-1
/// both feed vertex 1. Indegrees at most n-1, outdegrees exactly 2.
Digraph complete_graph_witness(int n);

}  // namespace ijcomp
