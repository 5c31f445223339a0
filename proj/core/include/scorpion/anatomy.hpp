#pragma once

#include <vector>

#include "scorpion/graph.hpp"

namespace scorpion {

/// Body-tail-sting-legs decomposition of a scorpion on k vertices with
/// tail length ell = tail.size():
///   - body, tail[0], ..., tail[ell-1], sting induce a path in that order;
///   - every vertex outside the tuple is a leg, adjacent to the body and to
///     no other tuple vertex;
///   - edges among legs are unconstrained.
/// There are k - ell - 2 legs, listed in increasing order.
struct ScorpionAnatomy {
  int body = -1;
  std::vector<int> tail;
  int sting = -1;
  VertexSubset legs;

  friend bool operator==(const ScorpionAnatomy&, const ScorpionAnatomy&) = default;
};

}  // namespace scorpion
