#pragma once

#include "domlab/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace domlab {

/// Short-form graph6 only (n < 63). The long-form size header is rejected.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// Edge-list text: "n m" on the first line, then m lines "u v", 0-based.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// Reads a file of graphs. A first non-blank line of two integers selects
/// the edge-list format (one graph); otherwise every non-blank line is a
/// graph6 string. An optional ">>graph6<<" header is accepted.
std::vector<Graph> read_graphs(const std::filesystem::path& path);
std::vector<Graph> read_graphs(std::istream& in);

}  // namespace domlab
