#pragma once

#include <string>
#include <string_view>

#include "chromadisc/graph.hpp"

namespace chromadisc {

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// whitespace are accepted. Throws ParseError on malformed input, nonzero
/// padding bits, or more than 64 vertices.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding (no header, no newline).
std::string write_graph6(const Graph& g);

/// Reads `n: u-v,u-v,...`. Whitespace is ignored; duplicate edges collapse.
Graph parse_edge_list(std::string_view text);

/// Writes `n: u-v,...` with edges sorted, u < v.
std::string write_edge_list(const Graph& g);

/// Auto-detects edge-list (contains ':') versus graph6.
Graph parse_graph(std::string_view text);

}  // namespace chromadisc
