#include "scorpion/recognition.hpp"

#include "scorpion/errors.hpp"

namespace scorpion {

namespace {

void check_ell(int ell, const char* who) {
  if (ell < 1) throw parameter_error(std::string(who) + ": ell must be >= 1");
}

std::vector<int> bfs_distances(const UndirectedGraph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<int> queue;
  queue.push_back(source);
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

// Checks every condition of the scorpion definition for the ordered tuple
// (body, tail..., sting). Total: duplicate or out-of-range entries simply
// fail. Fills legs (increasing) on success.
bool verify_scorpion_tuple(const UndirectedGraph& h, int body,
                           const std::vector<int>& tail, int sting,
                           VertexSubset* legs_out) {
  const int k = h.vertex_count();
  const int ell = static_cast<int>(tail.size());
  if (ell < 1 || k < ell + 4) return false;

  std::vector<int> tuple;
  tuple.reserve(ell + 2);
  tuple.push_back(body);
  tuple.insert(tuple.end(), tail.begin(), tail.end());
  tuple.push_back(sting);

  std::vector<char> in_tuple(k, 0);
  for (int v : tuple) {
    if (v < 0 || v >= k || in_tuple[v]) return false;
    in_tuple[v] = 1;
  }

  // the tuple induces a path in its own order
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j)
      if (h.has_edge(tuple[i], tuple[j]) != (j == i + 1)) return false;

  // the body sees every leg; no other tuple vertex sees any leg
  for (int v = 0; v < k; ++v) {
    if (in_tuple[v]) continue;
    if (!h.has_edge(body, v)) return false;
    for (int t : tail)
      if (h.has_edge(t, v)) return false;
    if (h.has_edge(sting, v)) return false;
  }

  if (legs_out) {
    legs_out->clear();
    for (int v = 0; v < k; ++v)
      if (!in_tuple[v]) legs_out->push_back(v);
  }
  return true;
}

// Whether the ordered tuple witnesses fossil-hood: all skeleton edges are
// present and the vertices outside the tuple are pairwise non-adjacent.
bool fossil_witness(const UndirectedGraph& h, const std::vector<int>& tuple,
                    const std::vector<char>& in_tuple) {
  for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
    if (!h.has_edge(tuple[i], tuple[i + 1])) return false;
  const int k = h.vertex_count();
  const int body = tuple.front();
  for (int v = 0; v < k; ++v)
    if (!in_tuple[v] && !h.has_edge(body, v)) return false;
  for (int u = 0; u < k; ++u) {
    if (in_tuple[u]) continue;
    for (int v = u + 1; v < k; ++v)
      if (!in_tuple[v] && h.has_edge(u, v)) return false;
  }
  return true;
}

// Runs fn on every ordered tuple of ell + 2 distinct vertices, in
// lexicographic order. Stops when fn returns false.
template <typename Fn>
void for_each_tuple(int k, int ell, Fn&& fn) {
  std::vector<int> tuple(ell + 2);
  std::vector<char> used(k, 0);
  auto recurse = [&](auto&& self, int pos) -> bool {
    if (pos == static_cast<int>(tuple.size())) return fn(tuple, used);
    for (int v = 0; v < k; ++v) {
      if (used[v]) continue;
      tuple[pos] = v;
      used[v] = 1;
      const bool keep_going = self(self, pos + 1);
      used[v] = 0;
      if (!keep_going) return false;
    }
    return true;
  };
  recurse(recurse, 0);
}

}  // namespace

std::optional<ScorpionAnatomy> locate_anatomy(const UndirectedGraph& h, int ell) {
  check_ell(ell, "locate_anatomy");
  const int k = h.vertex_count();
  if (k < ell + 4) return std::nullopt;

  // the body is the unique vertex adjacent to everything except the ell
  // vertices t_2, ..., t_ell, sting
  const int body_degree = k - ell - 1;
  int body = -1;
  for (int v = 0; v < k; ++v) {
    if (h.degree(v) != body_degree) continue;
    if (body >= 0) return std::nullopt;
    body = v;
  }
  if (body < 0) return std::nullopt;

  // among the body's non-neighbors, only the sting has degree 1
  int sting = -1;
  for (int v = 0; v < k; ++v) {
    if (v == body || h.has_edge(body, v)) continue;
    if (h.degree(v) != 1) continue;
    if (sting >= 0) return std::nullopt;
    sting = v;
  }
  if (sting < 0) return std::nullopt;

  // tail[i] is the unique vertex at distance ell - i from the sting
  // (legs sit at distance ell + 2, the body at ell + 1)
  const auto dist = bfs_distances(h, sting);
  std::vector<int> tail(ell, -1);
  for (int i = 0; i < ell; ++i) {
    const int want = ell - i;
    for (int v = 0; v < k; ++v) {
      if (dist[v] != want) continue;
      if (tail[i] >= 0) return std::nullopt;
      tail[i] = v;
    }
    if (tail[i] < 0) return std::nullopt;
  }

  ScorpionAnatomy anatomy;
  anatomy.body = body;
  anatomy.tail = std::move(tail);
  anatomy.sting = sting;
  if (!verify_scorpion_tuple(h, anatomy.body, anatomy.tail, anatomy.sting,
                             &anatomy.legs))
    return std::nullopt;
  return anatomy;
}

bool is_scorpion(const UndirectedGraph& h, int ell) {
  return locate_anatomy(h, ell).has_value();
}

bool is_skeleton(const UndirectedGraph& h, int ell) {
  auto anatomy = locate_anatomy(h, ell);
  if (!anatomy) return false;
  for (std::size_t i = 0; i < anatomy->legs.size(); ++i)
    for (std::size_t j = i + 1; j < anatomy->legs.size(); ++j)
      if (h.has_edge(anatomy->legs[i], anatomy->legs[j])) return false;
  return true;
}

bool is_fossil(const UndirectedGraph& h, int ell) {
  check_ell(ell, "is_fossil");
  const int k = h.vertex_count();
  if (k < ell + 4) return false;
  bool found = false;
  for_each_tuple(k, ell, [&](const std::vector<int>& tuple, const std::vector<char>& used) {
    if (fossil_witness(h, tuple, used)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

long long count_fossil_witnesses(const UndirectedGraph& h, int ell) {
  check_ell(ell, "count_fossil_witnesses");
  const int k = h.vertex_count();
  if (k < ell + 4) return 0;
  long long count = 0;
  for_each_tuple(k, ell, [&](const std::vector<int>& tuple, const std::vector<char>& used) {
    if (fossil_witness(h, tuple, used)) ++count;
    return true;
  });
  return count;
}

std::vector<ScorpionAnatomy> enumerate_anatomies(const UndirectedGraph& h, int ell) {
  check_ell(ell, "enumerate_anatomies");
  std::vector<ScorpionAnatomy> found;
  const int k = h.vertex_count();
  if (k < ell + 4) return found;
  for_each_tuple(k, ell, [&](const std::vector<int>& tuple, const std::vector<char>&) {
    ScorpionAnatomy anatomy;
    anatomy.body = tuple.front();
    anatomy.tail.assign(tuple.begin() + 1, tuple.end() - 1);
    anatomy.sting = tuple.back();
    if (verify_scorpion_tuple(h, anatomy.body, anatomy.tail, anatomy.sting,
                              &anatomy.legs))
      found.push_back(std::move(anatomy));
    return true;
  });
  return found;
}

std::optional<int> find_sink(const DirectedGraph& d) {
  const int n = d.vertex_count();
  for (int v = 0; v < n; ++v)
    if (d.in_degree(v) == n - 1) return v;
  return std::nullopt;
}

}  // namespace scorpion
