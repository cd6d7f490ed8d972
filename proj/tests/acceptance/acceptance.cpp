// Acceptance suite: every criterion prints one PASS/FAIL line; the process
// exits with the number of failed criteria.

#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ijcomp/chordality.hpp"
#include "ijcomp/cover.hpp"
#include "ijcomp/designs.hpp"
#include "ijcomp/families.hpp"
#include "ijcomp/graph_ops.hpp"
#include "ijcomp/recognition.hpp"
#include "support/oracles.hpp"

using namespace ijcomp;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str());
  if (!pass) ++failures;
}

// ---- criteria 1 and 2: recognition vs exhaustive digraph enumeration ----

void criteria_1_and_2() {
  long long checked = 0, disagreements = 0, members = 0, bad_witnesses = 0;
  for (int n = 1; n <= 5; ++n) {
    auto table = oracles::build_member_table(n);
    for (uint32_t mask = 0; mask < (uint32_t{1} << (n * (n - 1) / 2)); ++mask) {
      Graph g = oracles::graph_of_mask(n, mask);
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          ++checked;
          RecognitionCertificate cert;
          try {
            cert = recognize(g, DegreeBounds(i, j));
          } catch (const std::exception&) {
            ++disagreements;
            continue;
          }
          if (cert.member != table.is_member(mask, i, j)) ++disagreements;
          if (cert.member) {
            ++members;
            if (!cert.witness || !is_ij_digraph(*cert.witness, DegreeBounds(i, j)) ||
                competition_graph(*cert.witness) != g)
              ++bad_witnesses;
          }
        }
    }
  }
  report(1, "recognition matches exhaustive digraph enumeration", disagreements == 0,
         std::to_string(checked) + " graph/bounds pairs, " + std::to_string(disagreements) +
             " disagreements");
  report(2, "every member verdict carries a bound-respecting round-trip witness",
         bad_witnesses == 0,
         std::to_string(members) + " member verdicts, " + std::to_string(bad_witnesses) + " bad");
}

// ---- criterion 3: triangle patterns on all 4-vertex digraphs ----

void criterion_3() {
  std::vector<Arc> slots;
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      if (u != v) slots.emplace_back(u, v);
  long long disagreements = 0;
  for (uint32_t arcs = 0; arcs < (uint32_t{1} << 12); ++arcs) {
    std::vector<Arc> list;
    for (int s = 0; s < 12; ++s)
      if (arcs >> s & 1) list.push_back(slots[s]);
    Digraph d(4, list);
    if (induces_triangle(d) != oracles::has_triangle(competition_graph(d))) ++disagreements;
  }
  report(3, "triangle patterns characterize competition-graph triangles on 4 vertices",
         disagreements == 0, "4096 digraphs, " + std::to_string(disagreements) + " disagreements");
}

// ---- criterion 4: chordality equivalence for outdegree-2 digraphs ----

void criterion_4() {
  std::mt19937 rng(240811);
  int disagreements = 0;
  const int samples = 1000;
  for (int trial = 0; trial < samples; ++trial) {
    int i = 2 + trial % 3;
    std::uniform_int_distribution<int> pick_n(4, 10);
    std::uniform_real_distribution<double> pick_density(0.3, 1.0);
    Digraph d = oracles::random_bounded_digraph(pick_n(rng), DegreeBounds(i, 2),
                                                pick_density(rng), rng);
    bool chordal = is_chordal(competition_graph(d)).chordal;
    GoodSubdigraphReport found = find_good_subdigraph(d);
    if (chordal == found.found) ++disagreements;
    if (found.found && !verify_good_subdigraph(d, found)) ++disagreements;
  }
  report(4, "chordal competition graph iff no good subdigraph, outdegree bound 2",
         disagreements == 0,
         std::to_string(samples) + " digraphs, " + std::to_string(disagreements) +
             " disagreements");
}

// ---- criterion 5: extremal clique number and design round trips ----

void criterion_5() {
  bool ok = true;
  std::string detail;
  try {
    Bibd fano = *steiner_triple(7);
    Digraph d = bibd_to_digraph(fano);
    int omega = clique_number(competition_graph(d));
    if (omega != 7 || clique_bound(DegreeBounds(3, 3)) != 7) {
      ok = false;
      detail = "Fano clique number " + std::to_string(omega);
    }
    std::vector<int> clique(7);
    for (int x = 0; x < 7; ++x) clique[x] = x;
    if (extract_bibd(d, DegreeBounds(3, 3), clique) != fano) {
      ok = false;
      detail += " Fano round trip failed;";
    }
    for (int j = 1; j <= 5; ++j) {
      Bibd p = pair_design(j);
      std::vector<int> varieties(p.v);
      for (int x = 0; x < p.v; ++x) varieties[x] = x;
      if (extract_bibd(bibd_to_digraph(p), DegreeBounds(2, j), varieties) != p) {
        ok = false;
        detail += " pair design j=" + std::to_string(j) + " failed;";
      }
    }
    for (int n : {9, 13}) {
      Bibd s = *steiner_triple(n);
      std::vector<int> varieties(n);
      for (int x = 0; x < n; ++x) varieties[x] = x;
      if (extract_bibd(bibd_to_digraph(s), DegreeBounds(3, s.r), varieties) != s) {
        ok = false;
        detail += " triple system n=" + std::to_string(n) + " failed;";
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  if (ok) detail = "Fano extremality exact; all round trips identical";
  report(5, "design digraphs meet the clique bound and round-trip", ok, detail);
}

// ---- criterion 6: clique bound never violated ----

void criterion_6() {
  std::mt19937 rng(650650);
  const std::vector<std::pair<int, int>> bound_pairs{{2, 2}, {3, 2}, {2, 3}, {3, 3}};
  int violations = 0;
  for (auto [i, j] : bound_pairs)
    for (int trial = 0; trial < 500; ++trial) {
      std::uniform_int_distribution<int> pick_n(2, 8);
      std::uniform_real_distribution<double> pick_density(0.4, 1.0);
      Digraph d =
          oracles::random_bounded_digraph(pick_n(rng), DegreeBounds(i, j), pick_density(rng), rng);
      if (clique_number(competition_graph(d)) > clique_bound(DegreeBounds(i, j))) ++violations;
    }
  report(6, "clique number never exceeds ij-j+1", violations == 0,
         "2000 digraphs, " + std::to_string(violations) + " violations");
}

// ---- criterion 7: the three separation gadgets ----

void criterion_7() {
  bool ok = true;
  std::string detail;
  Graph g53 = star_of_cliques(5, 3);
  if (g53.n() != 13 || g53.degree(0) != 12) {
    ok = false;
    detail += "star-of-cliques shape wrong; ";
  }
  auto [rook, lines] = hamming_graph(2);
  if (rook.n() != 9 || rook.m() != 18 || lines.size() != 6 ||
      !validate_cover(rook, lines, DegreeBounds(3, 2))) {
    ok = false;
    detail += "rook graph or its line cover wrong; ";
  }
  Graph two_k5 = double_clique(5);
  if (!recognize_i1(two_k5, 5)) {
    ok = false;
    detail += "two 5-cliques rejected for outdegree bound 1; ";
  }
  try {
    if (search_cover(two_k5, DegreeBounds(3, 2)).has_value()) {
      ok = false;
      detail += "unexpected cover for two 5-cliques under (3,2); ";
    }
  } catch (const std::exception& e) {
    ok = false;
    detail += e.what();
  }
  if (ok) detail = "star 13/12, rook 9/18/6 covered, two 5-cliques separated exhaustively";
  report(7, "separation gadgets have their stated shapes and memberships", ok, detail);
}

// ---- criterion 8: the containment table over [1,5]^4 ----

// Independent restatement of the case analysis.
Relation expected_relation(int i, int j, int k, int l) {
  if (i == k && j == l) return Relation::Equal;
  if (i < k || (i == k && j < l)) return expected_relation(k, l, i, j);
  if (i == k) return i == 1 ? Relation::Equal : Relation::ProperSubset;
  if (j >= l) return Relation::ProperSubset;
  if (k == 1) return Relation::ProperSubset;
  bool escapes = i > k * k - k + 1 || (i - 1) * j > (k - 1) * l || (j >= k && k >= 2);
  if (i == 5 && j == 1 && k == 3 && l == 2) return Relation::NotContained;
  if (escapes) return Relation::NotContained;
  if (j == 1 && l >= 2 && ((i == 3 && k == 2) || (i == 4 && k == 3)))
    return Relation::ProperSubset;
  return Relation::Unknown;
}

// Membership re-verification for a witness: the gadget is identified by
// equality and certified through its explicit cover (or the disjoint-clique
// characterization), independently of what separation_witness checked.
bool witness_member_ok(const Graph& w, const DegreeBounds& side) {
  for (int i = 2; i <= 5; ++i) {
    if (w == double_clique(i))
      return recognize_i1(w, i) && i <= side.i;
    for (int j = 2; j <= 5; ++j)
      if (w == star_of_cliques(i, j)) {
        if (i > side.i || j > side.j) return false;
        CliqueCover cover = star_of_cliques_cover(i, j);
        if (!validate_cover(w, cover, side)) return false;
        auto res = find_sdr(w, cover);
        if (!std::holds_alternative<SdrAssignment>(res)) return false;
        Digraph d = witness_digraph(w, cover, std::get<SdrAssignment>(res));
        return is_ij_digraph(d, side);
      }
  }
  for (int k = 2; k <= 4; ++k) {
    auto [g, cover] = hamming_graph(k);
    if (w == g) {
      if (k + 1 > side.i || k > side.j) return false;
      if (!validate_cover(w, cover, DegreeBounds(k + 1, k))) return false;
      auto res = find_sdr(w, cover);
      if (!std::holds_alternative<SdrAssignment>(res)) return false;
      Digraph d = witness_digraph(w, cover, std::get<SdrAssignment>(res));
      return is_ij_digraph(d, DegreeBounds(k + 1, k));
    }
  }
  return false;
}

bool witness_non_member_ok(const Graph& w, const DegreeBounds& side) {
  if (!necessary_conditions(w, side).empty()) return true;
  if (w.n() <= 12) return !search_cover(w, side).has_value();
  return false;
}

void criterion_8() {
  int mismatches = 0, bad_witnesses = 0, tuples = 0;
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      for (int k = 1; k <= 5; ++k)
        for (int l = 1; l <= 5; ++l) {
          ++tuples;
          ContainmentVerdict v;
          try {
            v = containment(DegreeBounds(i, j), DegreeBounds(k, l));
          } catch (const std::exception&) {
            ++mismatches;
            continue;
          }
          if (v.relation != expected_relation(i, j, k, l)) {
            ++mismatches;
            continue;
          }
          if (v.relation == Relation::ProperSubset) {
            if (!v.witness || !witness_member_ok(*v.witness, *v.superset) ||
                !witness_non_member_ok(*v.witness, *v.subset))
              ++bad_witnesses;
          }
          if (v.relation == Relation::NotContained) {
            if (!v.witness || !v.witness_reverse) {
              ++bad_witnesses;
              continue;
            }
            bool forward = witness_member_ok(*v.witness, *v.witness_member) &&
                           witness_non_member_ok(*v.witness, *v.witness_non_member);
            bool backward = witness_member_ok(*v.witness_reverse, *v.witness_non_member) &&
                            witness_non_member_ok(*v.witness_reverse, *v.witness_member);
            if (!forward || !backward) ++bad_witnesses;
          }
        }
  report(8, "containment table matches the case analysis with verified witnesses",
         mismatches == 0 && bad_witnesses == 0,
         std::to_string(tuples) + " tuples, " + std::to_string(mismatches) + " relation errors, " +
             std::to_string(bad_witnesses) + " witness errors");
}

// ---- criterion 9: triple system existence table ----

void criterion_9() {
  bool ok = true;
  std::string detail;
  for (int n : {3, 7, 9, 13, 15}) {
    auto d = steiner_triple(n);
    if (!d || verify_bibd(*d).has_value()) {
      ok = false;
      detail += "missing or invalid system for n=" + std::to_string(n) + "; ";
    }
  }
  for (int n : {4, 5, 6, 8, 10, 11, 12, 14}) {
    if (steiner_triple(n).has_value()) {
      ok = false;
      detail += "unexpected system for n=" + std::to_string(n) + "; ";
    }
  }
  if (ok) detail = "systems verified for 3,7,9,13,15; none elsewhere up to 15";
  report(9, "triple system existence table", ok, detail);
}

// ---- criterion 10: repair loop on SDR-less covers ----

void criterion_10() {
  std::mt19937 rng(101010);
  int collected = 0, violations = 0;
  long long attempts = 0;
  while (collected < 200 && attempts < 400000) {
    ++attempts;
    std::uniform_int_distribution<int> pick_n(4, 8);
    int n = pick_n(rng);
    std::uniform_int_distribution<uint32_t> pick_mask(0, (uint32_t{1} << (n * (n - 1) / 2)) - 1);
    Graph g = oracles::graph_of_mask(n, pick_mask(rng) | pick_mask(rng));
    if (g.is_edgeless() || g.is_complete() || (g.n() == 2 && g.m() == 1)) continue;
    DegreeBounds b(n - 1, 4);
    auto candidates = enumerate_cliques(g, b.i);
    if (candidates.empty()) continue;
    // Grow a random valid cover, biased toward large cliques, then pad it
    // with further cliques while the conditions allow.
    CliqueCover cover;
    std::vector<int> multiplicity(g.n(), 0);
    auto fits = [&](const std::vector<int>& clique) {
      for (int v : clique)
        if (multiplicity[v] >= b.j) return false;
      return cover.size() < g.n();
    };
    auto covered = [&](int u, int v) {
      for (const auto& clique : cover.cliques)
        if (std::binary_search(clique.begin(), clique.end(), u) &&
            std::binary_search(clique.begin(), clique.end(), v))
          return true;
      return false;
    };
    bool failed = false;
    for (auto [u, v] : g.edges()) {
      if (covered(u, v)) continue;
      std::vector<int> options;
      for (size_t ci = 0; ci < candidates.size(); ++ci)
        if (std::binary_search(candidates[ci].begin(), candidates[ci].end(), u) &&
            std::binary_search(candidates[ci].begin(), candidates[ci].end(), v) &&
            fits(candidates[ci]))
          options.push_back(static_cast<int>(ci));
      if (options.empty()) { failed = true; break; }
      // Prefer the largest candidate; ties broken randomly.
      size_t best_size = 0;
      for (int ci : options) best_size = std::max(best_size, candidates[ci].size());
      std::vector<int> fat;
      for (int ci : options)
        if (candidates[ci].size() == best_size) fat.push_back(ci);
      int pick = fat[std::uniform_int_distribution<size_t>(0, fat.size() - 1)(rng)];
      cover.cliques.push_back(candidates[pick]);
      for (int w : candidates[pick]) ++multiplicity[w];
    }
    if (failed || !validate_cover(g, cover, b)) continue;
    // Pad with redundant large cliques to squeeze the complements.
    for (int extra = 0; extra < 3; ++extra) {
      std::uniform_int_distribution<size_t> pick_c(0, candidates.size() - 1);
      const auto& clique = candidates[pick_c(rng)];
      if (clique.size() >= 3 && fits(clique)) {
        cover.cliques.push_back(clique);
        for (int w : clique) ++multiplicity[w];
      }
    }
    if (!validate_cover(g, cover, b)) continue;
    if (std::holds_alternative<SdrAssignment>(find_sdr(g, cover))) continue;
    ++collected;
    try {
      RepairResult result = repair_cover(g, cover, b);
      if (!validate_cover(g, result.cover, b)) ++violations;
      for (size_t w = 1; w < result.weight_trace.size(); ++w)
        if (result.weight_trace[w] >= result.weight_trace[w - 1]) ++violations;
      std::set<int> reps(result.sdr.representatives.begin(), result.sdr.representatives.end());
      if (reps.size() != result.cover.cliques.size()) ++violations;
      for (int t = 0; t < result.cover.size(); ++t)
        if (std::binary_search(result.cover.cliques[t].begin(), result.cover.cliques[t].end(),
                               result.sdr.representatives[t]))
          ++violations;
      // The loop ran at least once, since the cover had no SDR.
      if (result.weight_trace.size() < 2) ++violations;
    } catch (const std::exception&) {
      ++violations;
    }
  }
  report(10, "repair loop strictly decreases weight and lands on an SDR",
         collected == 200 && violations == 0,
         std::to_string(collected) + " SDR-less covers collected, " + std::to_string(violations) +
             " invariant violations");
}

}  // namespace

int main() {
  criteria_1_and_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
  return failures;
}
