#include "scorpion/basis.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "scorpion/errors.hpp"
#include "scorpion/graph_io.hpp"
#include "scorpion/oracle.hpp"
#include "scorpion/recognition.hpp"

namespace scorpion {

namespace {

void check_slice(int ell, int k, const char* who) {
  if (ell < 1) throw parameter_error(std::string(who) + ": ell must be >= 1");
  if (k < ell + 4) throw parameter_error(std::string(who) + ": k must be >= ell + 4");
}

void check_census_budget(int k, std::uint64_t max_graphs, const char* who) {
  const int pair_count = k * (k - 1) / 2;
  if (pair_count > 28)
    throw budget_error(std::string(who) + ": " + std::to_string(pair_count) +
                       " vertex pairs exceed the enumerable range");
  if ((std::uint64_t{1} << pair_count) > max_graphs)
    throw budget_error(std::string(who) + ": census of " +
                       std::to_string(std::uint64_t{1} << pair_count) +
                       " graphs exceeds the budget of " + std::to_string(max_graphs));
}

}  // namespace

BigCount alternating_enumerator(const PropertySpec& property, const UndirectedGraph& h,
                                int max_edges) {
  const auto edge_list = h.edges();
  const int m = static_cast<int>(edge_list.size());
  if (m > max_edges)
    throw budget_error("alternating_enumerator: " + std::to_string(m) +
                       " edges exceed the budget of " + std::to_string(max_edges));

  const int n = h.vertex_count();
  const int words = h.row_words();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * words, 0);

  auto evaluate_current = [&] {
    return property.evaluate(detail::make_graph_unchecked(n, rows)) ? 1 : 0;
  };

  // Gray-code walk over the spanning subgraphs: step i toggles the edge
  // indexed by the lowest set bit of i.
  long long accumulated = evaluate_current();
  int subset_parity = 0;
  const std::uint64_t subset_count = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < subset_count; ++i) {
    const auto [u, v] = edge_list[std::countr_zero(i)];
    detail::flip_bit(rows.data() + static_cast<std::size_t>(u) * words, v);
    detail::flip_bit(rows.data() + static_cast<std::size_t>(v) * words, u);
    subset_parity ^= 1;
    accumulated += subset_parity ? -evaluate_current() : evaluate_current();
  }

  BigCount result = to_bigcount(accumulated);
  if (m % 2 == 1) result = -result;
  return result;
}

FossilCheckReport verify_fossil_characterization(int ell, int k,
                                                 std::uint64_t max_graphs) {
  check_slice(ell, k, "verify_fossil_characterization");
  check_census_budget(k, max_graphs, "verify_fossil_characterization");

  const auto property = PropertySpec::scorpion(ell);
  FossilCheckReport report;
  report.ell = ell;
  report.k = k;
  for (LabeledGraphEnumerator graphs(k); !graphs.done(); graphs.advance()) {
    const auto h = graphs.current();
    ++report.census;
    const bool nonzero = alternating_enumerator(property, h) != 0;
    if (nonzero) ++report.fossils;
    if (nonzero != is_fossil(h, ell)) {
      ++report.counterexamples;
      if (!report.first_counterexample) report.first_counterexample = serialize(h);
    }
  }
  return report;
}

AnatomyCheckReport verify_anatomy_uniqueness(int ell, int k, std::uint64_t max_graphs) {
  check_slice(ell, k, "verify_anatomy_uniqueness");
  check_census_budget(k, max_graphs, "verify_anatomy_uniqueness");

  AnatomyCheckReport report;
  report.ell = ell;
  report.k = k;
  for (LabeledGraphEnumerator graphs(k); !graphs.done(); graphs.advance()) {
    const auto h = graphs.current();
    ++report.census;
    const auto located = locate_anatomy(h, ell);
    const auto all = enumerate_anatomies(h, ell);
    const bool consistent =
        located ? (all.size() == 1 && all.front() == *located) : all.empty();
    if (located) ++report.scorpions;
    if (!consistent) {
      ++report.counterexamples;
      if (!report.first_counterexample) report.first_counterexample = serialize(h);
    }
  }
  return report;
}

int vertex_cover_number(const UndirectedGraph& h) {
  const int n = h.vertex_count();
  if (n > kMaxVertexCoverVertices)
    throw budget_error("vertex_cover_number: graphs above " +
                       std::to_string(kMaxVertexCoverVertices) + " vertices");
  if (h.edge_count() == 0) return 0;

  std::vector<std::uint64_t> row(n);
  for (int v = 0; v < n; ++v) row[v] = h.row(v)[0];

  int best = n;
  auto branch = [&](auto&& self, std::uint64_t chosen, int size) -> void {
    if (size >= best) return;
    // find an edge not yet covered and branch on its endpoints
    for (int u = 0; u < n; ++u) {
      if ((chosen >> u) & 1u) continue;
      const std::uint64_t uncovered = row[u] & ~chosen;
      if (!uncovered) continue;
      const int v = std::countr_zero(uncovered);
      self(self, chosen | (std::uint64_t{1} << u), size + 1);
      self(self, chosen | (std::uint64_t{1} << v), size + 1);
      return;
    }
    best = size;
  };
  branch(branch, 0, 0);
  return best;
}

int tau_slice(int ell, int k, std::uint64_t max_graphs) {
  check_slice(ell, k, "tau_slice");
  check_census_budget(k, max_graphs, "tau_slice");

  const auto property = PropertySpec::scorpion(ell);
  int largest = 0;
  for (LabeledGraphEnumerator graphs(k); !graphs.done(); graphs.advance()) {
    const auto h = graphs.current();
    if (alternating_enumerator(property, h) == 0) continue;
    largest = std::max(largest, vertex_cover_number(h));
  }
  return largest;
}

WeightSpectrum attained_weights(int ell, int k) {
  check_slice(ell, k, "attained_weights");
  const int leg_count = k - ell - 2;
  const int optional_edges = leg_count * (leg_count - 1) / 2;
  WeightSpectrum spectrum;
  spectrum.k = k;
  for (int extra = 0; extra <= optional_edges; ++extra)
    spectrum.attained.push_back(k - 1 + extra);
  return spectrum;
}

WeightSpectrum brute_attained_weights(const PropertySpec& property, int k,
                                      std::uint64_t max_graphs) {
  if (k < 1) throw parameter_error("brute_attained_weights: k must be positive");
  check_census_budget(k, max_graphs, "brute_attained_weights");

  std::set<int> weights;
  for (LabeledGraphEnumerator graphs(k); !graphs.done(); graphs.advance()) {
    const auto h = graphs.current();
    if (property.evaluate(h)) weights.insert(static_cast<int>(h.edge_count()));
  }
  WeightSpectrum spectrum;
  spectrum.k = k;
  spectrum.attained.assign(weights.begin(), weights.end());
  return spectrum;
}

}  // namespace scorpion
