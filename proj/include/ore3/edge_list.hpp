#pragma once

#include "ore3/hypergraph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ore3 {

/// Edge-list text format:
///
///     n m
///     a b c      (m lines, 0-indexed, any order within a line)
///
/// Blank lines and lines starting with '#' are ignored anywhere in the input.
/// Throws GraphError on malformed input.
Hypergraph3 read_edge_list(std::istream& in);
Hypergraph3 read_edge_list_file(const std::string& path);

/// Writes canonical form: comment lines (each prefixed "# "), header, sorted triples.
void write_edge_list(std::ostream& out, const Hypergraph3& h, const std::vector<std::string>& comments = {});

} // namespace ore3
