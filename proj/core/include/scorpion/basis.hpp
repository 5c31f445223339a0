#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scorpion/bigcount.hpp"
#include "scorpion/graph.hpp"
#include "scorpion/property.hpp"

namespace scorpion {

/// Edge bound for the alternating sum over spanning subgraphs (2^edges
/// property evaluations).
inline constexpr int kDefaultAlternatingEdgeBudget = 30;

/// Graph cap for sweeps over all labeled k-vertex graphs.
inline constexpr std::uint64_t kDefaultCensusBudget = std::uint64_t{1} << 15;

/// Vertex bound for the exact vertex cover solver.
inline constexpr int kMaxVertexCoverVertices = 24;

/// Alternating sum over all spanning subgraphs of h:
///   (-1)^|E(h)| * sum over S subset of E(h) of (-1)^|S| * property(h[S]).
/// Nonzero value means the property genuinely depends on h's slice of the
/// subgraph basis. Spanning subgraphs are visited in Gray-code order, one
/// edge toggled per step, and the property is re-evaluated from scratch
/// each time. |result| <= 2^|E(h)|. Throws budget_error when h has more
/// than max_edges edges.
BigCount alternating_enumerator(const PropertySpec& property, const UndirectedGraph& h,
                                int max_edges = kDefaultAlternatingEdgeBudget);

/// Outcome of sweeping all labeled k-vertex graphs and comparing the
/// alternating enumerator of scorpion(ell) against the fossil predicate.
struct FossilCheckReport {
  int ell = 0;
  int k = 0;
  std::uint64_t census = 0;           // labeled graphs examined
  std::uint64_t fossils = 0;          // graphs with nonzero enumerator
  std::uint64_t counterexamples = 0;  // enumerator and predicate disagree
  std::optional<std::string> first_counterexample;  // serialized graph

  bool passed() const { return counterexamples == 0; }
};

/// Checks, over every labeled k-vertex graph, that the alternating
/// enumerator of scorpion(ell) is nonzero exactly on fossils. Throws
/// parameter_error when ell < 1 or k < ell + 4, budget_error when the
/// census exceeds max_graphs.
FossilCheckReport verify_fossil_characterization(
    int ell, int k, std::uint64_t max_graphs = kDefaultCensusBudget);

/// Outcome of checking anatomy uniqueness over all labeled k-vertex
/// graphs: the exhaustive tuple search must agree with locate_anatomy and
/// find exactly one anatomy per scorpion.
struct AnatomyCheckReport {
  int ell = 0;
  int k = 0;
  std::uint64_t census = 0;
  std::uint64_t scorpions = 0;
  std::uint64_t counterexamples = 0;
  std::optional<std::string> first_counterexample;

  bool passed() const { return counterexamples == 0; }
};

AnatomyCheckReport verify_anatomy_uniqueness(
    int ell, int k, std::uint64_t max_graphs = kDefaultCensusBudget);

/// Exact minimum vertex cover size, by branch and bound on an uncovered
/// edge. Throws budget_error above kMaxVertexCoverVertices vertices.
int vertex_cover_number(const UndirectedGraph& h);

/// Largest vertex cover number among the k-vertex graphs with nonzero
/// alternating enumerator for scorpion(ell). Equals ell + 2 whenever
/// k >= ell + 4.
int tau_slice(int ell, int k, std::uint64_t max_graphs = kDefaultCensusBudget);

/// Edge counts a property attains on its k-vertex slice.
struct WeightSpectrum {
  int k = 0;
  std::vector<int> attained;  // increasing, distinct

  /// Avoided weights, counted as binomial(k, 2) - |attained|.
  long long avoided_count() const {
    return static_cast<long long>(k) * (k - 1) / 2 -
           static_cast<long long>(attained.size());
  }

  friend bool operator==(const WeightSpectrum&, const WeightSpectrum&) = default;
};

/// Closed form for scorpion(ell) on the k-slice: every edge count from
/// k - 1 (skeleton) through k - 1 + binomial(k - ell - 2, 2) (all leg
/// pairs filled in). Throws parameter_error when ell < 1 or k < ell + 4.
WeightSpectrum attained_weights(int ell, int k);

/// Reference spectrum: sweeps all labeled k-vertex graphs and records the
/// edge counts of those satisfying the property.
WeightSpectrum brute_attained_weights(const PropertySpec& property, int k,
                                      std::uint64_t max_graphs = kDefaultCensusBudget);

}  // namespace scorpion
