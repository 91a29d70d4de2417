#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <plabel/graph.hpp>

namespace plabel {

enum class GraphFormat { edge_list, graph6 };

GraphFormat parse_graph_format(std::string_view name);

// Edge list: one "u v" pair per line, 0-based, '#' starts a comment, blank
// lines ignored. An optional "# n N" comment line fixes the vertex count so
// isolated vertices survive; otherwise n is one past the largest index.
// graph6: the first non-empty line is decoded.
// Throws ParseError with the offending line and offset.
Graph parse_graph(std::string_view text, GraphFormat format);

// Edge-list output always carries the "# n N" line, then edges in
// lexicographic order. graph6 output ends with a newline.
std::string emit_graph(const Graph & g, GraphFormat format);

// All graphs of a graph6 file, one per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

std::string to_graph6(const Graph & g);
Graph from_graph6(std::string_view line);

} // namespace plabel
