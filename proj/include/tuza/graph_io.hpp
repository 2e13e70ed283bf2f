#pragma once
// Plain-text graph format:
//
//   [sides: <t>]        optional; ids < t are side X
//   n m
//   u v [type]          m lines, 0-based, u < v, type in {i, e, x}
//
// The type token is written for sided graphs and checked against the side
// split when read back.

#include <iosfwd>
#include <string>

#include "tuza/graph.hpp"

namespace tuza {

void write_graph(std::ostream& out, const Graph& g);
void write_graph(std::ostream& out, const SidedGraph& k);

/// Reads either form; a plain graph comes back with x_count == order().
SidedGraph read_graph(std::istream& in);

void save_graph(const std::string& path, const SidedGraph& k);
SidedGraph load_graph(const std::string& path);

}  // namespace tuza
