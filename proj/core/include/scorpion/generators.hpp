#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "scorpion/anatomy.hpp"
#include "scorpion/graph.hpp"

namespace scorpion {

/// Exact edge probability num/den with 0 <= num <= den, den >= 1. Kept as
/// a rational so that sampling is reproducible across platforms.
struct EdgeProbability {
  std::uint64_t num = 1;
  std::uint64_t den = 2;

  /// Accepts "1/2", "0.25", "0", "1", ... Throws parameter_error on
  /// malformed input or values outside [0, 1].
  static EdgeProbability parse(const std::string& text);

  friend bool operator==(const EdgeProbability&, const EdgeProbability&) = default;
};

/// Scorpion skeleton: path body, tail..., sting plus one edge from the body
/// to each of the k - ell - 2 legs, and no other edges. Layout: body = 0,
/// tail = 1..ell, sting = ell + 1, legs = ell + 2..k - 1. Requires ell >= 1
/// and k >= ell + 4.
std::pair<UndirectedGraph, ScorpionAnatomy> gen_skeleton(int ell, int k);

/// Augmented biclique: a clique on {0..a-1}, an independent set on
/// {a..a+b-1}, and all edges between the two sides. Requires a, b >= 1.
UndirectedGraph gen_augmented_biclique(int a, int b);

/// Erdos-Renyi graph: each pair becomes an edge independently with
/// probability p. Same (n, p, seed) yields the same graph on every
/// platform.
UndirectedGraph random_graph(int n, EdgeProbability p, std::uint64_t seed);

}  // namespace scorpion
