#pragma once

#include <iosfwd>

#include "kronwalk/graph.hpp"

namespace kronwalk {

// Edge-list text format: a "# vertices N" header comment, then one "u v" line
// per undirected edge (u < v, 0-based, ascending). Other '#' lines are
// ignored on read. Without the header, N is one past the largest endpoint.

void write_edge_list(std::ostream& out, const Graph& g);

/// Throws InvalidArgument with the offending line number on malformed input.
Graph read_edge_list(std::istream& in);

}  // namespace kronwalk
