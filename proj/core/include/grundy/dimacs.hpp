#pragma once

#include "grundy/coloring.hpp"
#include "grundy/graph.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace grundy {

/// Parses DIMACS .col text: `c` comment lines, one `p edge N M` problem line,
/// and `e u v` edge lines with 1-based endpoints. Duplicate and reversed edge
/// lines are tolerated; self-loops, out-of-range endpoints, unknown line
/// types and a missing problem line throw ParseError with the line number.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(std::string_view text);

/// Emits `p edge N M` followed by one `e u v` line per edge with u < v,
/// 1-based. parse_dimacs(write_dimacs(g)) reproduces g exactly.
std::string write_dimacs(const Graph& g);
void write_dimacs(const Graph& g, std::ostream& out);

/// Vertex sequence as whitespace-separated 1-based ids.
std::string format_order(std::span<const int> order);

/// Parses a whitespace-separated list of 1-based vertex ids into 0-based ids.
std::vector<int> parse_order(std::string_view text);

/// DIMACS-solution style lines, one `v <vertex> <color>` per vertex, 1-based.
std::string format_coloring(const Coloring& c);

} // namespace grundy
