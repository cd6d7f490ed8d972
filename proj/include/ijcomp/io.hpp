#pragma once

#include <iosfwd>
#include <string>

#include "ijcomp/types.hpp"

namespace ijcomp {

// Text format: first line "n m", then m lines "u v".
// JSON format: {"n": int, "edges": [[u,v],...]} / {"n": int, "arcs": [[u,v],...]}.
// parse_graph / parse_digraph sniff the format: a document whose first
// non-space character is '{' is JSON, anything else is text.
// All parsers reject loops, out-of-range indices and duplicates (ParseError).

Graph parse_graph(const std::string& text);
Digraph parse_digraph(const std::string& text);

Graph graph_from_json(const std::string& text);
Digraph digraph_from_json(const std::string& text);

std::string graph_to_json(const Graph& g);
std::string digraph_to_json(const Digraph& d);

std::string graph_to_text(const Graph& g);
std::string digraph_to_text(const Digraph& d);

std::string graph_to_dot(const Graph& g);
std::string digraph_to_dot(const Digraph& d);

/// True iff the document looks like JSON (first non-space char is '{').
bool looks_like_json(const std::string& text);

}  // namespace ijcomp
