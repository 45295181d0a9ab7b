#pragma once

#include <iosfwd>
#include <string>

#include "dyson/graph.hpp"

namespace dyson {

// Text format:
//   vertices <lo> <hi>
//   edge <i> <j>        (one line per edge, i < j, lex sorted)
void write_graph(std::ostream& os, const Graph& g);
std::string graph_to_string(const Graph& g);

// Parses the format above; validates ordering, range and duplicates.
Graph read_graph(std::istream& is);
Graph graph_from_string(const std::string& text);

} // namespace dyson
