#include "ijcomp/designs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

#include "ijcomp/graph_ops.hpp"

namespace ijcomp {

void canonicalize_blocks(Bibd& d) {
  for (auto& block : d.blocks) std::sort(block.begin(), block.end());
  std::sort(d.blocks.begin(), d.blocks.end());
}

std::optional<std::string> verify_bibd(const Bibd& d) {
  if (d.v < 1 || d.b < 0 || static_cast<int>(d.blocks.size()) != d.b) return "structure";
  for (const auto& block : d.blocks) {
    std::set<int> seen;
    for (int x : block)
      if (x < 0 || x >= d.v || !seen.insert(x).second) return "structure";
  }
  // k = v is the degenerate complete-block case, which the trivial pair and
  // triple systems hit; only k > v is impossible.
  if (d.k > d.v) return "block-size";
  for (const auto& block : d.blocks)
    if (static_cast<int>(block.size()) != d.k) return "block-size";
  std::vector<int> replication(d.v, 0);
  for (const auto& block : d.blocks)
    for (int x : block) ++replication[x];
  for (int x = 0; x < d.v; ++x)
    if (replication[x] != d.r) return "replication";
  std::map<std::pair<int, int>, int> pair_count;
  for (const auto& block : d.blocks)
    for (size_t a = 0; a < block.size(); ++a)
      for (size_t b = a + 1; b < block.size(); ++b) {
        int x = std::min(block[a], block[b]), y = std::max(block[a], block[b]);
        ++pair_count[{x, y}];
      }
  for (int x = 0; x < d.v; ++x)
    for (int y = x + 1; y < d.v; ++y) {
      auto it = pair_count.find({x, y});
      int count = it == pair_count.end() ? 0 : it->second;
      if (count != d.lambda) return "pair-multiplicity";
    }
  if (static_cast<long long>(d.b) * d.k != static_cast<long long>(d.v) * d.r)
    return "parameter-identity";
  return std::nullopt;
}

Bibd pair_design(int j) {
  if (j < 1) throw std::invalid_argument("pair_design needs j >= 1");
  Bibd d;
  d.v = j + 1;
  d.k = 2;
  d.r = j;
  d.lambda = 1;
  for (int x = 0; x <= j; ++x)
    for (int y = x + 1; y <= j; ++y) d.blocks.push_back({x, y});
  d.b = static_cast<int>(d.blocks.size());
  canonicalize_blocks(d);
  return d;
}

namespace {

// Triples {a, b, c} of nonzero bit patterns with a ^ b ^ c = 0; gives the
// point-line incidence of binary projective space (7 or 15 points).
std::vector<std::vector<int>> xor_triples(int points) {
  std::vector<std::vector<int>> blocks;
  for (int a = 1; a <= points; ++a)
    for (int b = a + 1; b <= points; ++b) {
      int c = a ^ b;
      if (c > b && c <= points) blocks.push_back({a - 1, b - 1, c - 1});
    }
  return blocks;
}

std::vector<std::vector<int>> grid_lines_3x3() {
  std::vector<std::vector<int>> blocks;
  auto at = [](int r, int c) { return 3 * r + c; };
  for (int r = 0; r < 3; ++r) blocks.push_back({at(r, 0), at(r, 1), at(r, 2)});
  for (int c = 0; c < 3; ++c) blocks.push_back({at(0, c), at(1, c), at(2, c)});
  for (int s = 0; s < 3; ++s) {
    std::vector<int> diag, anti;
    for (int r = 0; r < 3; ++r) {
      diag.push_back(at(r, (s + r) % 3));
      anti.push_back(at(r, ((s - r) % 3 + 3) % 3));
    }
    blocks.push_back(diag);
    blocks.push_back(anti);
  }
  return blocks;
}

std::vector<std::vector<int>> cyclic_triples_13() {
  std::vector<std::vector<int>> blocks;
  for (auto base : {std::vector<int>{0, 1, 4}, std::vector<int>{0, 2, 7}})
    for (int shift = 0; shift < 13; ++shift)
      blocks.push_back({(base[0] + shift) % 13, (base[1] + shift) % 13, (base[2] + shift) % 13});
  return blocks;
}

}  // namespace

std::optional<Bibd> steiner_triple(int n) {
  if (n < 3) throw std::invalid_argument("steiner_triple needs n >= 3");
  if (n > 15)
    throw SizeGuardError("steiner_triple: n too large (limit 15, got " + std::to_string(n) + ")");
  std::vector<std::vector<int>> blocks;
  switch (n) {
    case 3: blocks = {{0, 1, 2}}; break;
    case 7: blocks = xor_triples(7); break;
    case 9: blocks = grid_lines_3x3(); break;
    case 13: blocks = cyclic_triples_13(); break;
    case 15: blocks = xor_triples(15); break;
    default: return std::nullopt;
  }
  Bibd d;
  d.v = n;
  d.k = 3;
  d.r = (n - 1) / 2;
  d.lambda = 1;
  d.b = n * (n - 1) / 6;
  d.blocks = std::move(blocks);
  canonicalize_blocks(d);
  if (verify_bibd(d))
    throw std::logic_error("steiner_triple: stored construction failed verification");
  return d;
}

Digraph bibd_to_digraph(const Bibd& d) {
  if (d.lambda != 1)
    throw std::invalid_argument("bibd_to_digraph requires lambda = 1");
  if (auto violation = verify_bibd(d))
    throw std::invalid_argument("bibd_to_digraph: not a valid design (" + *violation + ")");
  std::vector<Arc> arcs;
  for (int l = 0; l < d.b; ++l)
    for (int x : d.blocks[l]) arcs.emplace_back(x, d.v + l);
  return Digraph(d.v + d.b, std::move(arcs));
}

int clique_bound(const DegreeBounds& b) { return b.i * b.j - b.j + 1; }

Bibd extract_bibd(const Digraph& d, const DegreeBounds& b, const std::vector<int>& clique) {
  if (!is_ij_digraph(d, b))
    throw std::invalid_argument("extract_bibd: digraph violates the degree bounds");
  if (b.i < 2)
    throw std::invalid_argument("extract_bibd: indegree bound must be at least 2");
  std::vector<int> k_sorted = clique;
  std::sort(k_sorted.begin(), k_sorted.end());
  if (std::adjacent_find(k_sorted.begin(), k_sorted.end()) != k_sorted.end())
    throw std::invalid_argument("extract_bibd: repeated clique vertex");
  for (int v : k_sorted)
    if (v < 0 || v >= d.n()) throw std::invalid_argument("extract_bibd: clique vertex out of range");
  if (static_cast<int>(k_sorted.size()) != clique_bound(b))
    throw std::invalid_argument("extract_bibd: clique size is not ij-j+1");

  // Equation 1: every pair of clique vertices has exactly one common prey.
  for (size_t a = 0; a < k_sorted.size(); ++a)
    for (size_t c = a + 1; c < k_sorted.size(); ++c)
      if (d.common_out_neighbors(k_sorted[a], k_sorted[c]).size() != 1)
        throw std::invalid_argument("extract_bibd: equation (1) violated: a clique pair does not "
                                    "have exactly one common out-neighbor");

  std::set<int> clique_set(k_sorted.begin(), k_sorted.end());
  std::set<int> prey;
  for (int u : k_sorted)
    for (int w : d.out_neighbors(u)) prey.insert(w);

  // Equation 2: prey of the clique is fed only from the clique, at full indegree.
  for (int w : prey) {
    if (d.in_degree(w) != b.i)
      throw std::invalid_argument("extract_bibd: equation (2) violated: a prey vertex does not "
                                  "have indegree i");
    for (int u : d.in_neighbors(w))
      if (!clique_set.count(u))
        throw std::invalid_argument("extract_bibd: equation (2) violated: a prey vertex has an "
                                    "in-neighbor outside the clique");
  }

  // Equation 3: clique vertices prey at full outdegree.
  for (int u : k_sorted)
    if (d.out_degree(u) != b.j)
      throw std::invalid_argument("extract_bibd: equation (3) violated: a clique vertex does not "
                                  "have outdegree j");

  std::vector<int> position(d.n(), -1);
  for (size_t idx = 0; idx < k_sorted.size(); ++idx) position[k_sorted[idx]] = static_cast<int>(idx);
  Bibd out;
  out.v = static_cast<int>(k_sorted.size());
  out.k = b.i;
  out.r = b.j;
  out.lambda = 1;
  for (int w : prey) {
    std::vector<int> block;
    for (int u : d.in_neighbors(w)) block.push_back(position[u]);
    out.blocks.push_back(std::move(block));
  }
  out.b = static_cast<int>(out.blocks.size());
  canonicalize_blocks(out);
  if (auto violation = verify_bibd(out))
    throw std::logic_error("extract_bibd: assembled design is invalid (" + *violation + ")");
  return out;
}

bool fisher_check(const Bibd& d) { return d.b >= d.v; }

std::string bibd_to_json(const Bibd& d) {
  nlohmann::json doc;
  doc["b"] = d.b;
  doc["v"] = d.v;
  doc["r"] = d.r;
  doc["k"] = d.k;
  doc["lambda"] = d.lambda;
  doc["blocks"] = d.blocks;
  return doc.dump();
}

Bibd bibd_from_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON document");
  for (const char* key : {"b", "v", "r", "k", "lambda", "blocks"})
    if (!doc.contains(key)) throw ParseError(std::string("BIBD JSON missing key \"") + key + "\"");
  Bibd d;
  try {
    d.b = doc["b"].get<int>();
    d.v = doc["v"].get<int>();
    d.r = doc["r"].get<int>();
    d.k = doc["k"].get<int>();
    d.lambda = doc["lambda"].get<int>();
    d.blocks = doc["blocks"].get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("BIBD JSON has values of the wrong type");
  }
  return d;
}

}  // namespace ijcomp
