#include "scorpion/graph.hpp"

#include <bit>
#include <string>

#include "scorpion/errors.hpp"

namespace scorpion {

namespace {

int words_for(int n) { return (n + 63) / 64; }

void check_vertex_count(int n, const char* who) {
  if (n < 0) throw parameter_error(std::string(who) + ": vertex count must be nonnegative");
}

void check_endpoint(int v, int n, const char* who) {
  if (v < 0 || v >= n)
    throw parameter_error(std::string(who) + ": endpoint " + std::to_string(v) +
                          " out of range for " + std::to_string(n) + " vertices");
}

void check_subset(const VertexSubset& vertices, int n, const char* who) {
  int prev = -1;
  for (int v : vertices) {
    if (v < 0 || v >= n)
      throw parameter_error(std::string(who) + ": vertex " + std::to_string(v) +
                            " out of range for " + std::to_string(n) + " vertices");
    if (v <= prev)
      throw parameter_error(std::string(who) + ": subset must be strictly increasing");
    prev = v;
  }
}

}  // namespace

UndirectedGraph::UndirectedGraph(int n) {
  check_vertex_count(n, "UndirectedGraph");
  n_ = n;
  words_ = words_for(n);
  rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
  finish_();
}

UndirectedGraph UndirectedGraph::from_edges(int n, const std::vector<Edge>& edges) {
  check_vertex_count(n, "from_edges");
  UndirectedGraph g;
  g.n_ = n;
  g.words_ = words_for(n);
  g.rows_.assign(static_cast<std::size_t>(n) * g.words_, 0);
  for (auto [u, v] : edges) {
    check_endpoint(u, n, "from_edges");
    check_endpoint(v, n, "from_edges");
    if (u == v)
      throw parameter_error("from_edges: self-loop at vertex " + std::to_string(u));
    detail::set_bit(g.rows_.data() + static_cast<std::size_t>(u) * g.words_, v);
    detail::set_bit(g.rows_.data() + static_cast<std::size_t>(v) * g.words_, u);
  }
  g.finish_();
  return g;
}

UndirectedGraph UndirectedGraph::from_rows(int n, std::vector<std::uint64_t> rows) {
  check_vertex_count(n, "from_rows");
  const int words = words_for(n);
  if (rows.size() != static_cast<std::size_t>(n) * words)
    throw parameter_error("from_rows: row storage has wrong size");
  const std::uint64_t tail_mask =
      (n % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n % 64)) - 1);
  for (int v = 0; v < n; ++v) {
    const std::uint64_t* row = rows.data() + static_cast<std::size_t>(v) * words;
    if (words > 0 && (row[words - 1] & ~tail_mask))
      throw parameter_error("from_rows: adjacency bit beyond vertex range");
    if (detail::test_bit(row, v))
      throw parameter_error("from_rows: self-loop at vertex " + std::to_string(v));
    for (int u = 0; u < v; ++u) {
      const std::uint64_t* other = rows.data() + static_cast<std::size_t>(u) * words;
      if (detail::test_bit(row, u) != detail::test_bit(other, v))
        throw parameter_error("from_rows: adjacency not symmetric");
    }
  }
  return detail::make_graph_unchecked(n, std::move(rows));
}

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (v > u) out.emplace_back(u, v);
  return out;
}

void UndirectedGraph::finish_() {
  nbr_off_.assign(static_cast<std::size_t>(n_) + 1, 0);
  nbr_.clear();
  for (int v = 0; v < n_; ++v) {
    const std::uint64_t* r = row(v);
    for (int j = 0; j < words_; ++j) {
      std::uint64_t w = r[j];
      while (w) {
        nbr_.push_back(j * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
    nbr_off_[v + 1] = static_cast<int>(nbr_.size());
  }
  m_ = static_cast<long long>(nbr_.size()) / 2;
}

namespace detail {
UndirectedGraph make_graph_unchecked(int n, std::vector<std::uint64_t> rows) {
  UndirectedGraph g;
  g.n_ = n;
  g.words_ = words_for(n);
  g.rows_ = std::move(rows);
  g.finish_();
  return g;
}
}  // namespace detail

DirectedGraph::DirectedGraph(int n) {
  check_vertex_count(n, "DirectedGraph");
  n_ = n;
  words_ = words_for(n);
  rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
  finish_();
}

DirectedGraph DirectedGraph::from_edges(int n, const std::vector<Edge>& edges) {
  check_vertex_count(n, "from_edges");
  DirectedGraph g;
  g.n_ = n;
  g.words_ = words_for(n);
  g.rows_.assign(static_cast<std::size_t>(n) * g.words_, 0);
  for (auto [u, v] : edges) {
    check_endpoint(u, n, "from_edges");
    check_endpoint(v, n, "from_edges");
    if (u == v)
      throw parameter_error("from_edges: self-loop at vertex " + std::to_string(u));
    if (detail::test_bit(g.rows_.data() + static_cast<std::size_t>(v) * g.words_, u))
      throw parameter_error("from_edges: antiparallel pair between " +
                            std::to_string(u) + " and " + std::to_string(v));
    detail::set_bit(g.rows_.data() + static_cast<std::size_t>(u) * g.words_, v);
  }
  g.finish_();
  return g;
}

std::vector<Edge> DirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : successors(u)) out.emplace_back(u, v);
  return out;
}

void DirectedGraph::finish_() {
  succ_off_.assign(static_cast<std::size_t>(n_) + 1, 0);
  succ_.clear();
  in_degree_.assign(static_cast<std::size_t>(n_), 0);
  for (int v = 0; v < n_; ++v) {
    const std::uint64_t* r = row(v);
    for (int j = 0; j < words_; ++j) {
      std::uint64_t w = r[j];
      while (w) {
        int u = j * 64 + std::countr_zero(w);
        succ_.push_back(u);
        ++in_degree_[u];
        w &= w - 1;
      }
    }
    succ_off_[v + 1] = static_cast<int>(succ_.size());
  }
  m_ = static_cast<long long>(succ_.size());
}

UndirectedGraph induced_subgraph(const UndirectedGraph& g, const VertexSubset& vertices) {
  check_subset(vertices, g.vertex_count(), "induced_subgraph");
  const int k = static_cast<int>(vertices.size());
  const int words = words_for(k);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(k) * words, 0);
  for (int i = 0; i < k; ++i) {
    std::uint64_t* row = rows.data() + static_cast<std::size_t>(i) * words;
    for (int j = 0; j < k; ++j)
      if (j != i && g.has_edge(vertices[i], vertices[j])) detail::set_bit(row, j);
  }
  return detail::make_graph_unchecked(k, std::move(rows));
}

DirectedGraph induced_subgraph(const DirectedGraph& g, const VertexSubset& vertices) {
  check_subset(vertices, g.vertex_count(), "induced_subgraph");
  const int k = static_cast<int>(vertices.size());
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (j != i && g.has_edge(vertices[i], vertices[j])) edges.emplace_back(i, j);
  return DirectedGraph::from_edges(k, edges);
}

UndirectedGraph edge_subgraph(const UndirectedGraph& g, const std::vector<Edge>& keep) {
  for (auto [u, v] : keep) {
    check_endpoint(u, g.vertex_count(), "edge_subgraph");
    check_endpoint(v, g.vertex_count(), "edge_subgraph");
    if (u == v || !g.has_edge(u, v))
      throw parameter_error("edge_subgraph: (" + std::to_string(u) + ", " +
                            std::to_string(v) + ") is not an edge of the graph");
  }
  return UndirectedGraph::from_edges(g.vertex_count(), keep);
}

}  // namespace scorpion
