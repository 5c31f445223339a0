#pragma once

#include <optional>
#include <vector>

#include "scorpion/anatomy.hpp"
#include "scorpion/graph.hpp"

namespace scorpion {

/// Recovers the unique body-tail-sting-legs decomposition of h if h is a
/// scorpion with tail length ell, otherwise std::nullopt. Runs the
/// degree-and-distance reconstruction (body is the unique vertex of degree
/// k - ell - 1, sting the unique degree-1 non-neighbor of the body, tail
/// vertices are found by distance from the sting) and then re-checks every
/// defining condition explicitly. Throws parameter_error when ell < 1.
std::optional<ScorpionAnatomy> locate_anatomy(const UndirectedGraph& h, int ell);

/// Whether h is a scorpion with tail length ell.
bool is_scorpion(const UndirectedGraph& h, int ell);

/// Whether h is a scorpion with tail length ell and independent legs, i.e.
/// exactly the path and body-leg edges are present (k - 1 edges in total).
bool is_skeleton(const UndirectedGraph& h, int ell);

/// Whether h contains some ordered tuple (body, tail..., sting) whose
/// skeleton edges are all present while the vertices outside the tuple are
/// pairwise non-adjacent. Equivalently: h is a skeleton with extra edges,
/// each having at least one endpoint outside the legs. Tuples are scanned
/// in lexicographic order with short-circuit on the first witness.
bool is_fossil(const UndirectedGraph& h, int ell);

/// Number of ordered tuples witnessing is_fossil.
long long count_fossil_witnesses(const UndirectedGraph& h, int ell);

/// Exhaustive reference search: every ordered tuple (body, tail..., sting)
/// of distinct vertices that satisfies the scorpion conditions, checked
/// directly against the definition. Independent of locate_anatomy; a
/// scorpion must yield exactly one entry.
std::vector<ScorpionAnatomy> enumerate_anatomies(const UndirectedGraph& h, int ell);

/// The vertex with an edge from every other vertex, if present. A graph
/// without antiparallel pairs has at most one such vertex.
std::optional<int> find_sink(const DirectedGraph& d);

}  // namespace scorpion
