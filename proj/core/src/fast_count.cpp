#include "scorpion/fast_count.hpp"

#include <bit>

#include "scorpion/errors.hpp"

namespace scorpion {

BigCount count_sinks_slice(const DirectedGraph& d, int k) {
  if (k <= 0) throw parameter_error("count_sinks_slice: k must be positive");
  BigCount total = 0;
  const auto choices = binomial_column(d.vertex_count(), k - 1);
  for (int v = 0; v < d.vertex_count(); ++v) total += choices[d.in_degree(v)];
  return total;
}

BigCount count_scorpions(const UndirectedGraph& g, int ell, int k) {
  if (ell < 1) throw parameter_error("count_scorpions: ell must be >= 1");
  if (k < ell + 4) throw parameter_error("count_scorpions: k must be >= ell + 4");

  const int n = g.vertex_count();
  const int tuple_len = ell + 2;
  const int leg_count = k - ell - 2;
  if (n < tuple_len) return 0;

  const int words = g.row_words();
  const auto leg_choices = binomial_column(n, leg_count);

  BigCount total = 0;
  std::vector<std::uint64_t> on_path(words, 0);
  std::vector<std::uint64_t> free_legs(words);
  std::vector<int> path;
  path.reserve(tuple_len);

  // a candidate extends the induced path iff its only neighbor on the path
  // is the current tip
  auto sees_only_tip = [&](int w, int tip) {
    const std::uint64_t* rw = g.row(w);
    const int tip_word = tip >> 6;
    const std::uint64_t tip_bit = std::uint64_t{1} << (tip & 63);
    for (int j = 0; j < words; ++j)
      if ((rw[j] & on_path[j]) != (j == tip_word ? tip_bit : 0)) return false;
    return true;
  };

  // legs available to a complete path: neighbors of the body that are off
  // the path and see no tail or sting vertex
  auto add_path_contribution = [&] {
    const std::uint64_t* body_row = g.row(path[0]);
    for (int j = 0; j < words; ++j) free_legs[j] = body_row[j] & ~on_path[j];
    for (int i = 1; i < tuple_len; ++i) {
      const std::uint64_t* rv = g.row(path[i]);
      for (int j = 0; j < words; ++j) free_legs[j] &= ~rv[j];
    }
    int available = 0;
    for (int j = 0; j < words; ++j) available += std::popcount(free_legs[j]);
    total += leg_choices[available];
  };

  auto extend = [&](auto&& self, int tip) -> void {
    if (static_cast<int>(path.size()) == tuple_len) {
      add_path_contribution();
      return;
    }
    for (int w : g.neighbors(tip)) {
      if (detail::test_bit(on_path.data(), w) || !sees_only_tip(w, tip)) continue;
      path.push_back(w);
      detail::set_bit(on_path.data(), w);
      self(self, w);
      detail::clear_bit(on_path.data(), w);
      path.pop_back();
    }
  };

  for (int body = 0; body < n; ++body) {
    path.assign(1, body);
    std::fill(on_path.begin(), on_path.end(), 0);
    detail::set_bit(on_path.data(), body);
    extend(extend, body);
  }
  return total;
}

BigCount count_scorpions_slicewise(const UndirectedGraph& g,
                                   const std::function<int(int)>& tail_of, int k) {
  if (!tail_of) throw parameter_error("count_scorpions_slicewise: empty tail function");
  const int ell = tail_of(k);
  if (ell < 1 || 2 * ell > k - 4)
    throw parameter_error("count_scorpions_slicewise: tail_of(" + std::to_string(k) +
                          ") = " + std::to_string(ell) +
                          " outside the valid range [1, (k - 4) / 2]");
  return count_scorpions(g, ell, k);
}

}  // namespace scorpion
