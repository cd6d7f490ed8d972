#include "ijcomp/recognition.hpp"

#include <algorithm>

#include "ijcomp/cover.hpp"

namespace ijcomp {

std::string RecognitionCertificate::obstruction_string() const {
  if (!obstruction) return "";
  switch (*obstruction) {
    case Obstruction::IsK2: return "IsK2";
    case Obstruction::CompleteWithJ1: return "CompleteWithJ1";
    case Obstruction::NecessaryConditionFailed:
      return "NecessaryConditionFailed(" + necessary_condition_name(*failed_condition) + ")";
    case Obstruction::NoCoverExists: return "NoCoverExists";
  }
  return "";
}

Digraph complete_graph_witness(int n) {
  if (n < 3) throw std::invalid_argument("complete_graph_witness needs n >= 3");
  std::vector<Arc> arcs;
  for (int t = 0; t <= n - 2; ++t) arcs.emplace_back(t, n - 1);
  for (int t = 1; t <= n - 1; ++t) arcs.emplace_back(t, 0);
  arcs.emplace_back(0, 1);
  arcs.emplace_back(n - 1, 1);
  return Digraph(n, std::move(arcs));
}

namespace {

RecognitionCertificate non_member(Obstruction o,
                                  std::optional<NecessaryCondition> cond = std::nullopt) {
  RecognitionCertificate cert;
  cert.member = false;
  cert.obstruction = o;
  cert.failed_condition = cond;
  return cert;
}

RecognitionCertificate member_with(const Graph& g, const DegreeBounds& b, Digraph witness) {
  if (!is_ij_digraph(witness, b))
    throw std::logic_error("recognize: witness violates the degree bounds");
  if (competition_graph(witness) != g)
    throw std::logic_error("recognize: witness competition graph differs from the input");
  RecognitionCertificate cert;
  cert.member = true;
  cert.witness = std::move(witness);
  return cert;
}

}  // namespace

RecognitionCertificate recognize(const Graph& g, const DegreeBounds& b) {
  // The two graphs excluded outright: K_2, and nontrivial complete graphs
  // when the outdegree bound is 1.
  if (g.n() == 2 && g.m() == 1) return non_member(Obstruction::IsK2);
  if (b.j == 1 && g.n() >= 2 && g.is_complete())
    return non_member(Obstruction::CompleteWithJ1);

  auto failed = necessary_conditions(g, b);
  if (!failed.empty())
    return non_member(Obstruction::NecessaryConditionFailed, failed.front());

  if (g.is_edgeless()) return member_with(g, b, Digraph(g.n()));

  if (g.is_complete() && g.n() >= 3 && b.j >= 2 && b.i >= g.n() - 1)
    return member_with(g, b, complete_graph_witness(g.n()));

  // A single clique plus at least one isolated vertex: point the whole
  // clique at an isolated vertex.
  {
    std::vector<int> support, isolated;
    for (int v = 0; v < g.n(); ++v)
      (g.degree(v) > 0 ? support : isolated).push_back(v);
    if (!support.empty() && !isolated.empty() && static_cast<int>(support.size()) <= b.i &&
        is_clique(g, support)) {
      std::vector<Arc> arcs;
      for (int u : support) arcs.emplace_back(u, isolated.front());
      return member_with(g, b, Digraph(g.n(), std::move(arcs)));
    }
  }

  auto cover = search_cover(g, b);
  if (!cover) return non_member(Obstruction::NoCoverExists);
  RepairResult repaired = repair_cover(g, *cover, b);
  return member_with(g, b, witness_digraph(g, repaired.cover, repaired.sdr));
}

bool recognize_1j(const Graph& g) { return g.is_edgeless(); }

bool recognize_i1(const Graph& g, int i) {
  if (i < 1) throw std::invalid_argument("indegree bound must be positive");
  if (g.n() == 1) return true;
  auto comps = connected_components(g);
  if (comps.size() < 2) return false;
  for (const auto& comp : comps) {
    if (static_cast<int>(comp.size()) > i) return false;
    if (!is_clique(g, comp)) return false;
  }
  return true;
}

}  // namespace ijcomp
