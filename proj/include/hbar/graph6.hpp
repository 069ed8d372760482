#pragma once

#include <istream>
#include <string>
#include <vector>

#include "hbar/graph.hpp"

namespace hbar {

Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// One graph per non-empty line; ">>graph6<<" headers are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

} // namespace hbar
