#pragma once

#include <string>
#include <string_view>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

// Edge-list text format:
//
//   r n m
//   v_1 ... v_r      (m lines)
//
// Lines whose first non-blank character is '#' are comments; blank lines are
// ignored. r = 2 encodes a graph. Parsing throws ParseError on a malformed
// header, wrong arity, duplicate edge or vertex id >= n.
Hypergraph parse_hypergraph(std::string_view text);
Graph parse_graph(std::string_view text);

// Canonical form: header, then edges in lexicographic order, LF-terminated.
std::string serialize(const Hypergraph& h);
std::string serialize(const Graph& g);

Hypergraph read_hypergraph_file(const std::string& path);
Graph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace berge
