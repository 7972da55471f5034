#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mutvis/graph.hpp"

namespace mutvis {

/// Encodes a graph in graph6 format (no header, no trailing newline).
std::string to_graph6(const Graph& g);

/// Decodes one graph6 line. Accepts an optional ">>graph6<<" prefix.
/// Throws ParseError on malformed input.
Graph from_graph6(const std::string& line);

/// Reads every non-empty line of a stream as a graph6 graph.
std::vector<Graph> read_graph6_stream(std::istream& in);

/// Edge-list text format: first line "n m", then m lines "u v" (0-based).
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::istream& in);

/// Loads graphs from a file; format chosen by extension (".g6" => graph6,
/// anything else => edge list) unless `format` is "g6" or "edgelist".
std::vector<Graph> load_graphs(const std::string& path, const std::string& format = "auto");

} // namespace mutvis
