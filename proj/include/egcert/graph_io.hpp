#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "egcert/graph.hpp"

namespace egcert {

// Largest order accepted from external input.
inline constexpr int kMaxInputOrder = 1 << 15;

// One graph6 record. An optional ">>graph6<<" header and trailing line
// terminators are accepted; ParseError::offset() is the byte offset of the
// offending character within `text`.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// One graph6 record per line; blank lines are skipped. Errors report the
// 1-based line number in the message and the byte offset within the line.
std::vector<Graph> read_graph6_stream(std::istream& in);

// Edge-list format: a header line "n m", then m lines "u v" with 0-based
// vertices. '#' starts a comment. Several graphs may follow each other.
Graph parse_edge_list(std::string_view text);
std::vector<Graph> read_edge_lists(std::istream& in);
std::string write_edge_list(const Graph& g);

enum class GraphFormat { kGraph6, kEdgeList };

// Sniffs the format from the first meaningful line: two integers mean an
// edge list, anything else is treated as graph6.
GraphFormat detect_format(std::string_view text);
std::vector<Graph> read_graphs(std::istream& in, GraphFormat format);

}  // namespace egcert
