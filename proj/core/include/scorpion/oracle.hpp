#pragma once

#include <cstdint>
#include <vector>

#include "scorpion/bigcount.hpp"
#include "scorpion/graph.hpp"
#include "scorpion/property.hpp"

namespace scorpion {

/// Subset enumeration stops once more than this many k-subsets would be
/// visited.
inline constexpr long long kDefaultSubsetBudget = 100'000'000;

/// Vertex bound for the backtracking isomorphism test.
inline constexpr int kMaxIsomorphismVertices = 10;

/// All k-element subsets of {0..n-1} in lexicographic order.
class SubsetIterator {
public:
  /// Throws parameter_error when k < 0 or n < 0. k > n yields an empty
  /// range.
  SubsetIterator(int n, int k);

  bool done() const { return done_; }
  const VertexSubset& current() const { return current_; }
  void advance();

private:
  int n_;
  int k_;
  bool done_;
  VertexSubset current_;
};

/// Reference counter: enumerates every k-subset, builds the induced
/// subgraph and evaluates the property. Throws parameter_error when k <= 0
/// or the property applies to the other graph kind, budget_error when
/// binomial(n, k) exceeds max_subsets.
BigCount brute_count(const UndirectedGraph& g, int k, const PropertySpec& property,
                     long long max_subsets = kDefaultSubsetBudget);
BigCount brute_count(const DirectedGraph& g, int k, const PropertySpec& property,
                     long long max_subsets = kDefaultSubsetBudget);

/// All labeled graphs on k vertices, one per subset of the binomial(k, 2)
/// vertex pairs. Pairs are ordered lexicographically and mapped to mask
/// bits in that order. Throws budget_error when binomial(k, 2) > 28.
class LabeledGraphEnumerator {
public:
  explicit LabeledGraphEnumerator(int k);

  bool done() const { return mask_ >= total_; }
  std::uint64_t mask() const { return mask_; }
  std::uint64_t total() const { return total_; }
  UndirectedGraph current() const;
  void advance() { ++mask_; }

private:
  int k_;
  std::uint64_t mask_ = 0;
  std::uint64_t total_;
  std::vector<Edge> pairs_;
};

/// Backtracking isomorphism test with degree pruning. Throws budget_error
/// when either graph has more than kMaxIsomorphismVertices vertices.
bool are_isomorphic(const UndirectedGraph& a, const UndirectedGraph& b);

}  // namespace scorpion
