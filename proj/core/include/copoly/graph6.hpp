#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "copoly/graph.hpp"

namespace copoly {

/// Decodes a graph6 string in the short form (no ">>graph6<<" header,
/// 0 <= n <= 32). Throws ParseError carrying the offending offset.
SimpleGraph parse_graph6(std::string_view text);

std::string emit_graph6(const SimpleGraph& g);

/// One graph per non-blank line; surrounding whitespace is ignored.
std::vector<SimpleGraph> read_graph6_lines(std::istream& in);

}  // namespace copoly
