#pragma once

#include <string>

#include "folkman/graph.hpp"

namespace folkman {

// Standard graph6 encoding: size header (single byte for n <= 62, '~' plus
// three bytes up to the supported 512), then the upper triangle column-major,
// packed MSB-first into 6-bit chunks offset by 63.
std::string graph6_encode(const Graph& g);

// Strict inverse of graph6_encode. Accepts an optional ">>graph6<<" prefix.
// Malformed headers, bytes outside [63,126], truncated or trailing payload,
// and nonzero padding bits all raise ParseError carrying the byte offset.
Graph graph6_decode(const std::string& s);

// DIMACS color-problem text: "p edge n m" then one "e u v" line per edge,
// 1-based, in lexicographic order.
std::string export_dimacs_col(const Graph& g);

}  // namespace folkman
