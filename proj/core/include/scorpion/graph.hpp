#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace scorpion {

/// Distinct vertex indices in strictly increasing order.
using VertexSubset = std::vector<int>;

using Edge = std::pair<int, int>;

namespace detail {

inline bool test_bit(const std::uint64_t* words, int v) {
  return (words[v >> 6] >> (v & 63)) & 1u;
}

inline void set_bit(std::uint64_t* words, int v) {
  words[v >> 6] |= std::uint64_t{1} << (v & 63);
}

inline void clear_bit(std::uint64_t* words, int v) {
  words[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

inline void flip_bit(std::uint64_t* words, int v) {
  words[v >> 6] ^= std::uint64_t{1} << (v & 63);
}

}  // namespace detail

class UndirectedGraph;

namespace detail {
// Construction bypass for callers that built valid rows themselves.
UndirectedGraph make_graph_unchecked(int n, std::vector<std::uint64_t> rows);
}

/// Simple undirected graph on vertices 0..n-1, immutable once constructed.
/// Adjacency is kept twice: packed bitmask rows for set algebra and flat
/// sorted neighbor lists for iteration.
class UndirectedGraph {
public:
  UndirectedGraph() = default;

  /// Edgeless graph on n vertices.
  explicit UndirectedGraph(int n);

  /// Builds from an edge list. Duplicate edges collapse. Throws
  /// parameter_error on out-of-range endpoints or self-loops.
  static UndirectedGraph from_edges(int n, const std::vector<Edge>& edges);

  /// Builds from packed adjacency rows, row_words() words per vertex.
  /// Throws parameter_error unless the rows are symmetric, loop-free and
  /// free of bits at positions >= n.
  static UndirectedGraph from_rows(int n, std::vector<std::uint64_t> rows);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }
  int row_words() const { return words_; }

  bool has_edge(int u, int v) const {
    return detail::test_bit(row(u), v);
  }

  int degree(int v) const { return nbr_off_[v + 1] - nbr_off_[v]; }

  /// Neighbors of v in increasing order.
  std::span<const int> neighbors(int v) const {
    return {nbr_.data() + nbr_off_[v],
            static_cast<std::size_t>(nbr_off_[v + 1] - nbr_off_[v])};
  }

  /// Packed adjacency row of v (row_words() words).
  const std::uint64_t* row(int v) const {
    return rows_.data() + static_cast<std::size_t>(v) * words_;
  }

  /// Edges (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

private:
  friend UndirectedGraph detail::make_graph_unchecked(int, std::vector<std::uint64_t>);

  void finish_();

  int n_ = 0;
  int words_ = 0;
  long long m_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<int> nbr_;
  std::vector<int> nbr_off_ = {0};
};

/// Directed graph without self-loops and without antiparallel edge pairs:
/// at most one of u->v, v->u may be present.
class DirectedGraph {
public:
  DirectedGraph() = default;

  explicit DirectedGraph(int n);

  /// Edges are (u, v) meaning u -> v. Duplicates collapse. Throws
  /// parameter_error on out-of-range endpoints, self-loops, or a pair of
  /// antiparallel edges.
  static DirectedGraph from_edges(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }
  int row_words() const { return words_; }

  /// Whether u -> v is present.
  bool has_edge(int u, int v) const {
    return detail::test_bit(row(u), v);
  }

  int out_degree(int v) const { return succ_off_[v + 1] - succ_off_[v]; }
  int in_degree(int v) const { return in_degree_[v]; }

  /// Out-neighbors of v in increasing order.
  std::span<const int> successors(int v) const {
    return {succ_.data() + succ_off_[v],
            static_cast<std::size_t>(succ_off_[v + 1] - succ_off_[v])};
  }

  /// Packed out-adjacency row of v.
  const std::uint64_t* row(int v) const {
    return rows_.data() + static_cast<std::size_t>(v) * words_;
  }

  /// Edges (u, v) meaning u -> v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

private:
  void finish_();

  int n_ = 0;
  int words_ = 0;
  long long m_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<int> succ_;
  std::vector<int> succ_off_ = {0};
  std::vector<int> in_degree_;
};

/// Subgraph induced on `vertices`, relabeled to 0..|vertices|-1 in the
/// given (ascending) order. Throws parameter_error unless `vertices` is
/// strictly increasing and within range.
UndirectedGraph induced_subgraph(const UndirectedGraph& g, const VertexSubset& vertices);
DirectedGraph induced_subgraph(const DirectedGraph& g, const VertexSubset& vertices);

/// Spanning subgraph keeping exactly the edges in `keep` (all vertices
/// retained). Throws parameter_error if an element of `keep` is not an edge
/// of g.
UndirectedGraph edge_subgraph(const UndirectedGraph& g, const std::vector<Edge>& keep);

}  // namespace scorpion
