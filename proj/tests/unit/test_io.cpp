#include "doctest.h"
#include "scorpion/errors.hpp"
#include "scorpion/generators.hpp"
#include "scorpion/graph_io.hpp"
#include "testutil.hpp"

using namespace scorpion;

TEST_CASE("parses an undirected edge list") {
  const auto g = parse_undirected("3 2\n0 1\n1 2\n");
  CHECK(g == testutil::path_graph(3));
}

TEST_CASE("comments and blank lines are ignored") {
  const auto g = parse_undirected(
      "# a path on three vertices\n"
      "\n"
      "3 2\n"
      "  # indented comment\n"
      "0 1\n"
      "\t\n"
      "1 2\n"
      "# trailing comment\n");
  CHECK(g == testutil::path_graph(3));
}

TEST_CASE("edgeless and empty graphs parse") {
  CHECK(parse_undirected("4 0\n") == UndirectedGraph(4));
  CHECK(parse_undirected("0 0\n") == UndirectedGraph(0));
}

TEST_CASE("malformed input reports the offending line") {
  auto line_of = [](const std::string& text) {
    try {
      parse_undirected(text);
    } catch (const parse_error& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("x 2\n0 1\n1 2\n") == 1);
  CHECK(line_of("3\n") == 1);
  CHECK(line_of("3 1\n0 1 2\n") == 2);
  CHECK(line_of("3 1\n0 9\n") == 2);
  CHECK(line_of("3 1\n1 1\n") == 2);
  CHECK(line_of("# leading comment\n3 1\n0 1\n0 2\n") == 4);
  CHECK(line_of("") == 0);
  CHECK(line_of("3 2\n0 1\n") == 0);
}

TEST_CASE("duplicate edges collapse unless strict") {
  const auto g = parse_undirected("3 3\n0 1\n1 0\n1 2\n");
  CHECK(g.edge_count() == 2);
  try {
    parse_undirected("3 3\n0 1\n1 0\n1 2\n", true);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("directed parsing enforces orientation invariants") {
  const auto d = parse_directed("3 2\n0 1\n2 1\n");
  CHECK(d.has_edge(0, 1));
  CHECK(d.has_edge(2, 1));
  CHECK(d.in_degree(1) == 2);

  try {
    parse_directed("2 2\n0 1\n1 0\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_directed("2 1\n1 1\n"), parse_error);
}

TEST_CASE("serialization is canonical and round-trips") {
  CHECK(serialize(testutil::path_graph(3)) == "3 2\n0 1\n1 2\n");
  CHECK(serialize(UndirectedGraph(2)) == "2 0\n");

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_graph(1 + static_cast<int>(rng() % 25), {1, 3}, rng());
    CHECK(parse_undirected(serialize(g)) == g);
  }
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = testutil::random_orientation(1 + static_cast<int>(rng() % 25), rng());
    CHECK(parse_directed(serialize(d)) == d);
  }
}
