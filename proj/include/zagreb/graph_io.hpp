#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

/// Decode one graph6 record (an optional ">>graph6<<" prefix and trailing
/// whitespace are accepted). Throws parse_error with the byte offset.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph & g);

/// Plain edge list: first line "n m", then m lines "u v" (0-based).
Graph parse_edge_list(std::string_view text);

std::string to_edge_list(const Graph & g);

struct GraphRecord {
    Graph graph;
    std::size_t line;  // 1-based line where the record starts
};

/// Read every graph in a stream. A stream whose first non-blank line is two
/// integers is treated as a sequence of edge-list records; otherwise each
/// non-blank line is a graph6 record. parse_error carries the line number.
std::vector<GraphRecord> read_graphs(std::istream & in);

}  // namespace zagreb
