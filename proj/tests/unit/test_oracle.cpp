#include "doctest.h"
#include "scorpion/errors.hpp"
#include "scorpion/generators.hpp"
#include "scorpion/oracle.hpp"
#include "testutil.hpp"

using namespace scorpion;

TEST_CASE("subset iteration is lexicographic and complete") {
  std::vector<VertexSubset> seen;
  for (SubsetIterator it(5, 3); !it.done(); it.advance()) seen.push_back(it.current());
  const std::vector<VertexSubset> expected{
      {0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4},
      {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  CHECK(seen == expected);

  SubsetIterator empty_subset(4, 0);
  CHECK_FALSE(empty_subset.done());
  CHECK(empty_subset.current().empty());
  empty_subset.advance();
  CHECK(empty_subset.done());

  CHECK(SubsetIterator(3, 5).done());
  CHECK_THROWS_AS(SubsetIterator(3, -1), parameter_error);
}

TEST_CASE("brute counting on pinned examples") {
  CHECK(brute_count(testutil::complete_graph(5), 5, PropertySpec::scorpion(1)) == 0);
  CHECK(brute_count(gen_skeleton(1, 5).first, 5, PropertySpec::scorpion(1)) == 1);
  const auto star = DirectedGraph::from_edges(4, {{1, 0}, {2, 0}, {3, 0}});
  CHECK(brute_count(star, 3, PropertySpec::sink()) == 3);
  CHECK_THROWS_AS(brute_count(star, 0, PropertySpec::sink()), parameter_error);
}

TEST_CASE("an always-true property counts every subset") {
  const auto always = PropertySpec::custom("always", [](const UndirectedGraph&) { return true; });
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 8);
    const auto g = random_graph(n, {1, 2}, rng());
    for (int k = 1; k <= n; ++k) CHECK(brute_count(g, k, always) == binomial(n, k));
  }
}

TEST_CASE("complement identity: counts of a property and its negation") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 6);
    const auto g = random_graph(n, {1, 2}, rng());
    const auto spec = PropertySpec::scorpion(1);
    for (int k = 2; k <= n; k += 2)
      CHECK(brute_count(g, k, spec) + brute_count(g, k, spec.negated()) == binomial(n, k));

    const auto d = testutil::random_orientation(n, rng());
    const auto sink = PropertySpec::sink();
    for (int k = 1; k <= n; k += 3)
      CHECK(brute_count(d, k, sink) + brute_count(d, k, sink.negated()) == binomial(n, k));
  }
}

TEST_CASE("brute counting is permutation invariant") {
  std::mt19937_64 rng(67);
  const auto spec = PropertySpec::scorpion(1);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 8 + static_cast<int>(rng() % 3);
    const auto g = random_graph(n, {1, 2}, rng());
    const auto h = testutil::apply_permutation(g, testutil::random_permutation(n, rng));
    CHECK(brute_count(g, 5, spec) == brute_count(h, 5, spec));
  }
}

TEST_CASE("kind mismatches and budget overruns are rejected") {
  const auto g = testutil::complete_graph(4);
  const auto d = DirectedGraph(4);
  CHECK_THROWS_AS(brute_count(g, 2, PropertySpec::sink()), parameter_error);
  CHECK_THROWS_AS(brute_count(d, 2, PropertySpec::scorpion(1)), parameter_error);
  CHECK_THROWS_AS(brute_count(g, 2, PropertySpec::sink().negated()), parameter_error);

  const auto big = UndirectedGraph(40);
  CHECK_THROWS_AS(
      brute_count(big, 20, PropertySpec::custom("t", [](const UndirectedGraph&) { return true; })),
      budget_error);
  CHECK(brute_count(big, 2, PropertySpec::custom("t", [](const UndirectedGraph&) { return true; }),
                    780) == 780);
  CHECK_THROWS_AS(
      brute_count(big, 2, PropertySpec::custom("t", [](const UndirectedGraph&) { return true; }),
                  779),
      budget_error);
}

TEST_CASE("labeled graph enumeration covers each edge set once") {
  LabeledGraphEnumerator graphs(3);
  CHECK(graphs.total() == 8);
  std::vector<UndirectedGraph> seen;
  for (; !graphs.done(); graphs.advance()) seen.push_back(graphs.current());
  REQUIRE(seen.size() == 8);
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (std::size_t j = i + 1; j < seen.size(); ++j) CHECK_FALSE(seen[i] == seen[j]);

  long long total_edges = 0;
  for (const auto& h : seen) total_edges += h.edge_count();
  CHECK(total_edges == 12);  // each of 3 pairs present in half of the 8 graphs

  CHECK(LabeledGraphEnumerator(0).total() == 1);
  CHECK(LabeledGraphEnumerator(1).total() == 1);
  CHECK_THROWS_AS(LabeledGraphEnumerator(9), budget_error);
}

TEST_CASE("isomorphism testing distinguishes small graphs") {
  const auto c4 = testutil::cycle_graph(4);
  const auto relabeled = UndirectedGraph::from_edges(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  CHECK(are_isomorphic(c4, relabeled));
  CHECK_FALSE(are_isomorphic(c4, testutil::path_graph(4)));
  CHECK_FALSE(are_isomorphic(testutil::cycle_graph(6), gen_augmented_biclique(3, 3)));
  CHECK(are_isomorphic(UndirectedGraph(0), UndirectedGraph(0)));
  CHECK_FALSE(are_isomorphic(UndirectedGraph(3), UndirectedGraph(4)));

  // same degree sequence, different structure: two triangles vs a hexagon
  const auto two_triangles =
      UndirectedGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(are_isomorphic(two_triangles, testutil::cycle_graph(6)));

  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 5);
    const auto g = random_graph(n, {1, 2}, rng());
    const auto h = testutil::apply_permutation(g, testutil::random_permutation(n, rng));
    CHECK(are_isomorphic(g, h));
  }

  CHECK_THROWS_AS(are_isomorphic(UndirectedGraph(11), UndirectedGraph(11)), budget_error);
}
