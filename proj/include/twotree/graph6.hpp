#pragma once

// graph6 text encoding (header-less, one graph per line).

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "twotree/graph.hpp"

namespace twotree {

std::string graph6_encode(const Graph& g);

// Throws ParseError carrying the offending byte offset.
Graph graph6_decode(std::string_view text);

// Reads every non-empty line; throws ParseError with the byte offset of the
// failing line start plus the in-line offset.
std::vector<Graph> read_graph6(std::istream& in);
void write_graph6(std::ostream& out, const Graph& g);

}  // namespace twotree
