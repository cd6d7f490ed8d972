#include "ijcomp/io.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace ijcomp {

namespace {

using nlohmann::json;

std::pair<int, std::vector<std::pair<int, int>>> parse_text_pairs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("line 1: expected header line \"n m\"");
  int n, m;
  {
    std::istringstream head(line);
    std::string rest;
    if (!(head >> n >> m) || (head >> rest))
      throw ParseError("line " + std::to_string(line_no) + ": expected header \"n m\"");
  }
  if (n < 0 || m < 0)
    throw ParseError("line " + std::to_string(line_no) + ": negative counts in header");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(m);
  for (int k = 0; k < m; ++k) {
    if (!next_line())
      throw ParseError("line " + std::to_string(line_no + 1) + ": expected " + std::to_string(m) +
                       " pairs, got " + std::to_string(k));
    std::istringstream row(line);
    int u, v;
    std::string rest;
    if (!(row >> u >> v) || (row >> rest))
      throw ParseError("line " + std::to_string(line_no) + ": expected a pair \"u v\"");
    pairs.emplace_back(u, v);
  }
  if (next_line())
    throw ParseError("line " + std::to_string(line_no) + ": trailing input after " +
                     std::to_string(m) + " pairs");
  return {n, std::move(pairs)};
}

json parse_json_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.what() carries the byte offset of the failure.
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::pair<int, std::vector<std::pair<int, int>>> read_json_pairs(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains(key))
    throw ParseError(std::string("JSON document must have keys \"n\" and \"") + key + "\"");
  if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  int n = doc["n"].get<int>();
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : doc[key]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError(std::string("each entry of \"") + key + "\" must be a pair of integers");
    pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return {n, std::move(pairs)};
}

json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
  json arr = json::array();
  for (auto [u, v] : pairs) arr.push_back({u, v});
  return arr;
}

}  // namespace

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

namespace {

// Construction rejects loops, bad indices and duplicates; text inputs get the
// offending line attributed (pair k sits on line k+2 of the document).
template <typename T>
T build_from_text_pairs(int n, std::vector<std::pair<int, int>> pairs) {
  for (size_t k = 0; k < pairs.size(); ++k) {
    auto [u, v] = pairs[k];
    std::string line = "line " + std::to_string(k + 2) + ": ";
    if (u == v) throw ParseError(line + "loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(line + "endpoint out of range: " + std::to_string(u) + " " +
                       std::to_string(v));
  }
  try {
    return T(n, std::move(pairs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());  // duplicates across lines
  }
}

}  // namespace

Graph parse_graph(const std::string& text) {
  if (looks_like_json(text)) return graph_from_json(text);
  auto [n, pairs] = parse_text_pairs(text);
  return build_from_text_pairs<Graph>(n, std::move(pairs));
}

Digraph parse_digraph(const std::string& text) {
  if (looks_like_json(text)) return digraph_from_json(text);
  auto [n, pairs] = parse_text_pairs(text);
  return build_from_text_pairs<Digraph>(n, std::move(pairs));
}

Graph graph_from_json(const std::string& text) {
  auto [n, pairs] = read_json_pairs(parse_json_document(text), "edges");
  try {
    return Graph(n, std::move(pairs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Digraph digraph_from_json(const std::string& text) {
  auto [n, pairs] = read_json_pairs(parse_json_document(text), "arcs");
  try {
    return Digraph(n, std::move(pairs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string graph_to_json(const Graph& g) {
  json doc;
  doc["n"] = g.n();
  doc["edges"] = pairs_to_json(g.edges());
  return doc.dump();
}

std::string digraph_to_json(const Digraph& d) {
  json doc;
  doc["n"] = d.n();
  doc["arcs"] = pairs_to_json(d.arcs());
  return doc.dump();
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << g.n() << " " << g.m() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

std::string digraph_to_text(const Digraph& d) {
  std::ostringstream out;
  out << d.n() << " " << d.arc_count() << "\n";
  for (auto [u, v] : d.arcs()) out << u << " " << v << "\n";
  return out.str();
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string digraph_to_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph D {\n";
  for (int v = 0; v < d.n(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ijcomp
