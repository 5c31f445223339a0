// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Every grid, seed and tolerance is pinned here.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "scorpion/basis.hpp"
#include "scorpion/bench.hpp"
#include "scorpion/fast_count.hpp"
#include "scorpion/generators.hpp"
#include "scorpion/oracle.hpp"
#include "scorpion/recognition.hpp"
#include "testutil.hpp"

namespace {

using namespace scorpion;

const EdgeProbability kProbabilities[] = {{1, 5}, {1, 2}, {4, 5}};
constexpr int kCorpusEll[] = {1, 2};
constexpr int kCorpusMinN = 8;
constexpr int kCorpusMaxN = 12;
constexpr int kCorpusSeeds = 50;
constexpr long long kOracleEquivalenceTimeLimitMs = 300'000;

constexpr int kSinkMaxN = 12;
constexpr int kSinkSeeds = 50;

constexpr int kSkeletonMaxK = 8;

struct Slice {
  int ell;
  int k;
};
constexpr Slice kSweepSlices[] = {{1, 5}, {1, 6}, {2, 6}};
constexpr long long kFossilSweepTimeLimitMs = 600'000;

constexpr int kCoverMaxEll = 3;
constexpr int kCoverSpan = 4;  // k ranges over ell+4 .. ell+8

constexpr int kLargeInstanceN = 300;
constexpr std::uint64_t kLargeInstanceSeed = 2026;
constexpr long long kLargeInstanceTimeLimitMs = 120'000;
const std::vector<int> kSlopeSizes = {50, 100, 200};
constexpr int kSlopeRepeats = 5;
constexpr double kSlopeLimit = 4.5;

constexpr int kComplementInstances = 100;

std::uint64_t corpus_seed(int ell, int n, int p_index, int seed) {
  return ((static_cast<std::uint64_t>(ell) * 100 + n) * 10 + p_index) * 1000 + seed;
}

long long ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

struct Outcome {
  bool passed = false;
  std::string detail;
};

// Walks the shared random corpus: every (ell, n, p, seed) combination.
template <typename Fn>
void for_each_corpus_graph(Fn&& fn) {
  for (int ell : kCorpusEll)
    for (int n = kCorpusMinN; n <= kCorpusMaxN; ++n)
      for (int p_index = 0; p_index < 3; ++p_index)
        for (int seed = 1; seed <= kCorpusSeeds; ++seed)
          fn(ell, n,
             random_graph(n, kProbabilities[p_index], corpus_seed(ell, n, p_index, seed)));
}

Outcome scorpion_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  long long comparisons = 0;
  long long mismatches = 0;
  for_each_corpus_graph([&](int ell, int n, const UndirectedGraph& g) {
    const auto spec = PropertySpec::scorpion(ell);
    for (int k = ell + 4; k <= n; ++k) {
      ++comparisons;
      if (count_scorpions(g, ell, k) != brute_count(g, k, spec)) ++mismatches;
    }
  });
  const long long elapsed = ms_since(start);
  Outcome outcome;
  outcome.passed = mismatches == 0 && elapsed < kOracleEquivalenceTimeLimitMs;
  outcome.detail = std::to_string(comparisons) + " comparisons, " +
                   std::to_string(mismatches) + " mismatches, " + std::to_string(elapsed) +
                   " ms (limit " + std::to_string(kOracleEquivalenceTimeLimitMs) + ")";
  return outcome;
}

Outcome sink_oracle_equivalence() {
  const auto spec = PropertySpec::sink();
  long long comparisons = 0;
  long long mismatches = 0;
  for (int n = 1; n <= kSinkMaxN; ++n)
    for (int seed = 1; seed <= kSinkSeeds; ++seed) {
      const auto d = testutil::random_orientation(n, corpus_seed(0, n, 0, seed));
      for (int k = 1; k <= n; ++k) {
        ++comparisons;
        if (count_sinks_slice(d, k) != brute_count(d, k, spec)) ++mismatches;
      }
    }
  Outcome outcome;
  outcome.passed = mismatches == 0;
  outcome.detail = std::to_string(comparisons) + " comparisons, " +
                   std::to_string(mismatches) + " mismatches";
  return outcome;
}

Outcome anatomy_uniqueness() {
  long long scorpions = 0;
  long long violations = 0;
  for_each_corpus_graph([&](int ell, int n, const UndirectedGraph& g) {
    for (int k = ell + 4; k <= n; ++k)
      for (SubsetIterator it(n, k); !it.done(); it.advance()) {
        const auto h = induced_subgraph(g, it.current());
        const auto located = locate_anatomy(h, ell);
        if (!located) continue;
        ++scorpions;
        const auto all = enumerate_anatomies(h, ell);
        if (all.size() != 1 || !(all.front() == *located)) ++violations;
      }
  });

  long long skeletons = 0;
  for (int k = 5; k <= kSkeletonMaxK; ++k)
    for (int ell = 1; ell + 4 <= k; ++ell) {
      ++skeletons;
      const auto [g, anatomy] = gen_skeleton(ell, k);
      const auto located = locate_anatomy(g, ell);
      const auto all = enumerate_anatomies(g, ell);
      if (!located || !(*located == anatomy) || all.size() != 1 ||
          !(all.front() == anatomy))
        ++violations;
    }

  Outcome outcome;
  outcome.passed = violations == 0;
  outcome.detail = std::to_string(scorpions) + " corpus scorpions, " +
                   std::to_string(skeletons) + " skeletons, " +
                   std::to_string(violations) + " violations";
  return outcome;
}

Outcome fossil_characterization() {
  const auto start = std::chrono::steady_clock::now();
  std::string pieces;
  std::uint64_t counterexamples = 0;
  bool censuses_ok = true;
  for (const auto& slice : kSweepSlices) {
    const auto report = verify_fossil_characterization(slice.ell, slice.k);
    counterexamples += report.counterexamples;
    const std::uint64_t expected_census =
        std::uint64_t{1} << (slice.k * (slice.k - 1) / 2);
    if (report.census != expected_census) censuses_ok = false;
    if (!pieces.empty()) pieces += ", ";
    pieces += "(" + std::to_string(slice.ell) + "," + std::to_string(slice.k) +
              "): census=" + std::to_string(report.census) +
              " cex=" + std::to_string(report.counterexamples);
  }
  const long long elapsed = ms_since(start);
  Outcome outcome;
  outcome.passed =
      counterexamples == 0 && censuses_ok && elapsed < kFossilSweepTimeLimitMs;
  outcome.detail = pieces + ", " + std::to_string(elapsed) + " ms (limit " +
                   std::to_string(kFossilSweepTimeLimitMs) + ")";
  return outcome;
}

Outcome cover_number_extremes() {
  long long checks = 0;
  long long violations = 0;
  std::string pieces;
  for (const auto& slice : kSweepSlices) {
    ++checks;
    const int tau = tau_slice(slice.ell, slice.k);
    if (tau != slice.ell + 2) ++violations;
    if (!pieces.empty()) pieces += ", ";
    pieces += "tau(" + std::to_string(slice.ell) + "," + std::to_string(slice.k) +
              ")=" + std::to_string(tau);
  }
  for (int ell = 1; ell <= kCoverMaxEll; ++ell)
    for (int k = ell + 4; k <= ell + 4 + kCoverSpan; ++k) {
      ++checks;
      if (vertex_cover_number(gen_augmented_biclique(ell + 2, k - ell - 2)) != ell + 2)
        ++violations;
    }
  Outcome outcome;
  outcome.passed = violations == 0;
  outcome.detail = pieces + ", " + std::to_string(checks) + " checks, " +
                   std::to_string(violations) + " violations";
  return outcome;
}

Outcome weight_census() {
  const auto spectrum = attained_weights(1, 7);
  const long long closed_form = 7LL * (1 + 2) - 1 * (1 + 5) / 2 - 4;
  const bool pinned_ok = spectrum.attained.size() == 7 &&
                         spectrum.avoided_count() == 14 &&
                         spectrum.avoided_count() == closed_form;

  long long disagreements = 0;
  for (const auto& slice : kSweepSlices) {
    const auto brute =
        brute_attained_weights(PropertySpec::scorpion(slice.ell), slice.k);
    if (!(brute == attained_weights(slice.ell, slice.k))) ++disagreements;
  }

  Outcome outcome;
  outcome.passed = pinned_ok && disagreements == 0;
  outcome.detail = "(1,7): " + std::to_string(spectrum.attained.size()) +
                   " attained, " + std::to_string(spectrum.avoided_count()) +
                   " avoided; " + std::to_string(disagreements) +
                   " analytic/brute disagreements";
  return outcome;
}

Outcome large_instance_scaling() {
  const auto g =
      random_graph(kLargeInstanceN, EdgeProbability{1, 2}, kLargeInstanceSeed);
  const auto start = std::chrono::steady_clock::now();
  const auto count = count_scorpions(g, 1, 5);
  const long long elapsed = ms_since(start);

  const auto bench = scaling_bench(1, 5, kSlopeSizes, EdgeProbability{1, 2},
                                   kLargeInstanceSeed, kSlopeRepeats);
  const double slope = bench.slope.value_or(99.0);

  Outcome outcome;
  outcome.passed = elapsed < kLargeInstanceTimeLimitMs && slope <= kSlopeLimit;
  char slope_text[32];
  std::snprintf(slope_text, sizeof(slope_text), "%.2f", slope);
  outcome.detail = "n=" + std::to_string(kLargeInstanceN) + " count=" +
                   count.get_str() + " in " + std::to_string(elapsed) +
                   " ms (limit " + std::to_string(kLargeInstanceTimeLimitMs) +
                   "), slope=" + slope_text + " (limit 4.5)";
  return outcome;
}

Outcome complement_identity() {
  long long checks = 0;
  long long violations = 0;
  const auto even_edges = PropertySpec::custom(
      "even-edges", [](const UndirectedGraph& h) { return h.edge_count() % 2 == 0; });
  for (int i = 0; i < kComplementInstances; ++i) {
    const int n = 6 + i % 7;
    const int k = 1 + i % n;
    ++checks;
    if (i % 4 == 3) {
      const auto d = testutil::random_orientation(n, 5000 + i);
      const auto spec = PropertySpec::sink();
      if (brute_count(d, k, spec) + brute_count(d, k, spec.negated()) != binomial(n, k))
        ++violations;
    } else {
      const auto g = random_graph(n, kProbabilities[i % 3], 6000 + i);
      const auto spec = (i % 4 == 1) ? even_edges : PropertySpec::scorpion(1 + i % 2);
      if (brute_count(g, k, spec) + brute_count(g, k, spec.negated()) != binomial(n, k))
        ++violations;
    }
  }
  Outcome outcome;
  outcome.passed = violations == 0;
  outcome.detail = std::to_string(checks) + " instances, " +
                   std::to_string(violations) + " violations";
  return outcome;
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
};

constexpr Criterion kCriteria[] = {
    {1, "fast scorpion counter matches the subset oracle", scorpion_oracle_equivalence},
    {2, "linear sink counter matches the subset oracle", sink_oracle_equivalence},
    {3, "anatomy uniqueness on corpus scorpions and skeletons", anatomy_uniqueness},
    {4, "alternating enumerator nonzero exactly on fossils", fossil_characterization},
    {5, "heaviest enumerator slice needs ell+2 cover vertices", cover_number_extremes},
    {6, "attained and avoided edge-weight census", weight_census},
    {7, "large-instance runtime and scaling slope", large_instance_scaling},
    {8, "complement identity over random instances", complement_identity},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int run_count = 0;
  int pass_count = 0;
  for (const auto& criterion : kCriteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), criterion.id) == selected.end())
      continue;
    ++run_count;
    const auto start = std::chrono::steady_clock::now();
    const auto outcome = criterion.run();
    const long long elapsed = ms_since(start);
    if (outcome.passed) ++pass_count;
    std::printf("criterion %d [%s]: %s (%s) [%lld ms]\n", criterion.id, criterion.name,
                outcome.passed ? "PASS" : "FAIL", outcome.detail.c_str(), elapsed);
    std::fflush(stdout);
  }
  std::printf("ACCEPTANCE: %d/%d passed\n", pass_count, run_count);
  return pass_count == run_count ? 0 : 1;
}
