#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ijcomp/types.hpp"

namespace ijcomp {

/// A (b, v, r, k, lambda) balanced incomplete block design: b blocks of k
/// varieties out of v, every variety in r blocks, every pair in lambda.
struct Bibd {
  int b = 0;
  int v = 0;
  int r = 0;
  int k = 0;
  int lambda = 0;
  std::vector<std::vector<int>> blocks;

  bool operator==(const Bibd& o) const {
    return b == o.b && v == o.v && r == o.r && k == o.k && lambda == o.lambda && blocks == o.blocks;
  }
};

/// Sorts each block and the block list (blocks compared as sorted vertex lists).
void canonicalize_blocks(Bibd& d);

/// Checks the design invariants exhaustively; returns std::nullopt when they
/// all hold, otherwise the name of the first violated one, in the order
/// "structure" (counts, ranges, duplicate varieties), "block-size" (a block
/// without exactly k varieties, or k > v), "replication", "pair-multiplicity",
/// "parameter-identity" (bk != vr). Complete-block designs (k = v) pass: the
/// one-block pair and triple systems are of this shape.
std::optional<std::string> verify_bibd(const Bibd& d);

/// The design whose blocks are all 2-subsets of {0..j}: parameters
/// (j(j+1)/2, j+1, j, 2, 1).
Bibd pair_design(int j);

/// A Steiner triple system on n varieties for n in {3, 7, 9, 13, 15}
/// (parameters (n(n-1)/6, n, (n-1)/2, 3, 1)); std::nullopt for other n <= 15,
/// where no such system exists; SizeGuardError for n > 15.
std::optional<Bibd> steiner_triple(int n);

/// The bipartite digraph of a lambda=1 design: variety vertices 0..v-1, block
/// vertices v..v+b-1, and an arc from variety x to block B exactly when x is
/// in B. Indegrees are k, outdegrees r, and the varieties form a clique of
/// size v = kr-r+1 in the competition graph, meeting the clique bound exactly.
Digraph bibd_to_digraph(const Bibd& d);

/// Reads a lambda=1 design back off a digraph satisfying bounds b together
/// with a clique of the extremal size b.i*b.j - b.j + 1 in its competition
/// graph. Verifies, in order: every clique pair has exactly one common
/// out-neighbor; every prey of the clique has all in-neighbors inside the
/// clique and indegree exactly b.i; every clique vertex has outdegree exactly
/// b.j. Throws std::invalid_argument naming the first failed equation.
/// Blocks come out canonicalized; the result always passes verify_bibd.
Bibd extract_bibd(const Digraph& d, const DegreeBounds& b, const std::vector<int>& clique);

/// The largest clique any competition graph within bounds b can have: ij-j+1.
int clique_bound(const DegreeBounds& b);

/// Fisher's inequality b >= v; holds for every valid design with k < v.
bool fisher_check(const Bibd& d);

std::string bibd_to_json(const Bibd& d);
Bibd bibd_from_json(const std::string& text);

}  // namespace ijcomp
