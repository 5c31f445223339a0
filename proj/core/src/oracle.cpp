#include "scorpion/oracle.hpp"

#include <algorithm>

#include "scorpion/errors.hpp"

namespace scorpion {

SubsetIterator::SubsetIterator(int n, int k) : n_(n), k_(k), done_(k > n) {
  if (n < 0 || k < 0) throw parameter_error("SubsetIterator: n and k must be nonnegative");
  if (done_) return;
  current_.resize(k);
  for (int i = 0; i < k; ++i) current_[i] = i;
}

void SubsetIterator::advance() {
  int i = k_ - 1;
  while (i >= 0 && current_[i] == n_ - k_ + i) --i;
  if (i < 0) {
    done_ = true;
    return;
  }
  ++current_[i];
  for (int j = i + 1; j < k_; ++j) current_[j] = current_[j - 1] + 1;
}

namespace {

template <typename G>
BigCount brute_count_impl(const G& g, int k, const PropertySpec& property,
                          long long max_subsets) {
  if (k <= 0) throw parameter_error("brute_count: k must be positive");
  const int n = g.vertex_count();
  if (binomial(n, k) > to_bigcount(max_subsets))
    throw budget_error("brute_count: binomial(" + std::to_string(n) + ", " +
                       std::to_string(k) + ") exceeds the subset budget of " +
                       std::to_string(max_subsets));
  long long count = 0;
  for (SubsetIterator it(n, k); !it.done(); it.advance())
    if (property.evaluate(induced_subgraph(g, it.current()))) ++count;
  return to_bigcount(count);
}

}  // namespace

BigCount brute_count(const UndirectedGraph& g, int k, const PropertySpec& property,
                     long long max_subsets) {
  if (property.applies_to_directed())
    throw parameter_error("brute_count: '" + property.name() +
                          "' applies to directed graphs");
  return brute_count_impl(g, k, property, max_subsets);
}

BigCount brute_count(const DirectedGraph& g, int k, const PropertySpec& property,
                     long long max_subsets) {
  if (!property.applies_to_directed())
    throw parameter_error("brute_count: '" + property.name() +
                          "' applies to undirected graphs");
  return brute_count_impl(g, k, property, max_subsets);
}

LabeledGraphEnumerator::LabeledGraphEnumerator(int k) : k_(k) {
  if (k < 0) throw parameter_error("LabeledGraphEnumerator: k must be nonnegative");
  const int pair_count = k * (k - 1) / 2;
  if (pair_count > 28)
    throw budget_error("LabeledGraphEnumerator: " + std::to_string(pair_count) +
                       " vertex pairs exceed the 28-bit mask budget");
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) pairs_.emplace_back(u, v);
  total_ = std::uint64_t{1} << pair_count;
}

UndirectedGraph LabeledGraphEnumerator::current() const {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    if ((mask_ >> i) & 1u) edges.push_back(pairs_[i]);
  return UndirectedGraph::from_edges(k_, edges);
}

bool are_isomorphic(const UndirectedGraph& a, const UndirectedGraph& b) {
  const int n = a.vertex_count();
  if (n > kMaxIsomorphismVertices || b.vertex_count() > kMaxIsomorphismVertices)
    throw budget_error("are_isomorphic: graphs above " +
                       std::to_string(kMaxIsomorphismVertices) + " vertices");
  if (b.vertex_count() != n || b.edge_count() != a.edge_count()) return false;

  std::vector<int> deg_a(n), deg_b(n);
  for (int v = 0; v < n; ++v) {
    deg_a[v] = a.degree(v);
    deg_b[v] = b.degree(v);
  }
  {
    auto sorted_a = deg_a, sorted_b = deg_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;
  }

  std::vector<int> image(n, -1);
  std::vector<char> taken(n, 0);
  auto extend = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (taken[w] || deg_a[v] != deg_b[w]) continue;
      bool consistent = true;
      for (int u = 0; u < v; ++u)
        if (a.has_edge(v, u) != b.has_edge(w, image[u])) {
          consistent = false;
          break;
        }
      if (!consistent) continue;
      image[v] = w;
      taken[w] = 1;
      if (self(self, v + 1)) return true;
      taken[w] = 0;
      image[v] = -1;
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace scorpion
