#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "geoclique/graph.hpp"

namespace geoclique {

/// DIMACS-like edge list: `c` comment lines, one `p edge <n> <m>` header,
/// then `e <u> <v>` lines with 1-based endpoints and optional
/// `w <v> <weight>` lines. The `m` in the header is informational; duplicate
/// edges are merged. Errors carry line and column.
Graph parse_dimacs(std::string_view text);
Graph read_dimacs_file(const std::string& path);

/// Writes the canonical form: header, edges in lexicographic order, then
/// weight lines when the graph is weighted.
void write_dimacs(std::ostream& out, const Graph& g);
std::string to_dimacs(const Graph& g);

} // namespace geoclique
