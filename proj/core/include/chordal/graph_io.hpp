#pragma once

#include <iosfwd>
#include <string>

#include "chordal/graph.hpp"

namespace chordal {

enum class GraphFormat { edge_list, dimacs };

// Edge-list format: one "u v" pair of 0-based ids per line, '#' comments and
// blank lines ignored, vertex count inferred as max id + 1.
// DIMACS-like format: "p edge <n> <m>" header, "e <u> <v>" lines with
// 1-based ids, "c" comment lines.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(const std::string& text, GraphFormat format);

// Emits edges sorted lexicographically, one per line.  The edge-list form
// cannot represent trailing isolated vertices; DIMACS carries the vertex
// count in its header and round-trips every graph.
std::string serialize_graph(const Graph& g, GraphFormat format);

}  // namespace chordal
