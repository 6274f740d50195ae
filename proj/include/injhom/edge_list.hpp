#pragma once

#include <injhom/graph.hpp>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace injhom {

/// Edge-list text format:
///
///     # comment lines start with '#'
///     n m [reflexive]
///     u v        (m lines, 0-based)
///
/// Blank lines are ignored. Loops, duplicate arcs, 2-cycles, out-of-range
/// endpoints and a wrong arc count are rejected with a ParseError naming the
/// offending line.
auto parse_edge_list(std::istream & in) -> OrientedGraph;
auto parse_edge_list(const std::string & text) -> OrientedGraph;
auto read_edge_list_file(const std::string & path) -> OrientedGraph;

/// Comment lines are written first, each prefixed with "# ".
auto write_edge_list(std::ostream & out, const OrientedGraph & g, const std::vector<std::string> & comments = {}) -> void;
auto to_edge_list(const OrientedGraph & g, const std::vector<std::string> & comments = {}) -> std::string;

} // namespace injhom
