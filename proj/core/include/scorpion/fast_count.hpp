#pragma once

#include <functional>

#include "scorpion/bigcount.hpp"
#include "scorpion/graph.hpp"

namespace scorpion {

/// Number of k-subsets of d whose induced subgraph has a sink, computed as
/// the sum over vertices of binomial(in_degree, k - 1). Linear in the size
/// of d. For k = 1 every singleton counts (a lone vertex is vacuously a
/// sink). Throws parameter_error when k <= 0.
BigCount count_sinks_slice(const DirectedGraph& d, int k);

/// Number of k-subsets of g inducing a scorpion with tail length ell.
/// Enumerates induced paths of ell + 2 vertices by backtracking along
/// adjacency, then counts the free legs of each path with one binomial.
/// Runs in O(n^(ell + 2)) time and poly space. Throws parameter_error when
/// ell < 1 or k < ell + 4; k > n simply yields 0.
BigCount count_scorpions(const UndirectedGraph& g, int ell, int k);

/// Counts scorpions whose tail length is tied to the slice: uses
/// ell = tail_of(k). Throws parameter_error unless 1 <= tail_of(k) and
/// 2 * tail_of(k) <= k - 4.
BigCount count_scorpions_slicewise(const UndirectedGraph& g,
                                   const std::function<int(int)>& tail_of, int k);

}  // namespace scorpion
