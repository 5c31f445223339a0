#pragma once

#include <iosfwd>
#include <string>

#include "scorpion/graph.hpp"

namespace scorpion {

/// Text format, shared by both graph kinds:
///   first significant line:  n m
///   then m lines:            u v
/// with ASCII decimal integers separated by whitespace. Lines whose first
/// non-blank character is '#' and blank lines are ignored. Vertices are
/// 0-based. For directed graphs "u v" means u -> v.

/// Parses an undirected graph. Duplicate edges collapse silently unless
/// `strict_duplicates` is set, in which case they are an error. Throws
/// parse_error (with line number) on malformed input.
UndirectedGraph parse_undirected(std::istream& in, bool strict_duplicates = false);
UndirectedGraph parse_undirected(const std::string& text, bool strict_duplicates = false);

/// Parses a directed graph. Self-loops and antiparallel pairs are errors.
DirectedGraph parse_directed(std::istream& in, bool strict_duplicates = false);
DirectedGraph parse_directed(const std::string& text, bool strict_duplicates = false);

/// Canonical serialization: header line, then edges in lexicographic
/// order. parse(serialize(g)) reproduces g exactly.
std::string serialize(const UndirectedGraph& g);
std::string serialize(const DirectedGraph& g);

}  // namespace scorpion
