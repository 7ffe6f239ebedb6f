#pragma once

#include <string>

#include "minors/graph.hpp"

namespace minors {

// graph6: 6-bit printable encoding (offset 63) of the vertex count followed
// by the column-major upper-triangle adjacency bits. An optional
// ">>graph6<<" header is accepted.
Graph parse_graph6(const std::string& text);
std::string serialize_graph6(const Graph& g);

// DIMACS edge format: "p edge n m" header, 1-indexed "e u v" lines,
// "c" comments. Duplicate edges collapse; self-loops are rejected.
Graph parse_dimacs(const std::string& text);
std::string serialize_dimacs(const Graph& g);

}  // namespace minors
