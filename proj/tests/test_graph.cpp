#include "topoidx/graph.hpp"

#include <doctest.h>

#include <numeric>
#include <sstream>
#include <vector>

using namespace topoidx;

namespace {

// Degrees recomputed straight from the edge list, independent of the
// cached sequence inside Graph.
std::vector<int> recount_degrees(const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : g.edges()) {
    ++deg[static_cast<std::size_t>(e.first)];
    ++deg[static_cast<std::size_t>(e.second)];
  }
  return deg;
}

void check_handshake(const Graph& g) {
  const long sum =
      std::accumulate(g.degrees().begin(), g.degrees().end(), 0L);
  CHECK(sum == 2L * g.size());
  CHECK(g.degrees() == recount_degrees(g));
}

}  // namespace

TEST_CASE("graph construction validates input") {
  CHECK_NOTHROW(Graph(0, {}));
  CHECK_NOTHROW(Graph(3, {{2, 0}}));  // endpoints normalized
  CHECK(Graph(3, {{2, 0}}).edges() == std::vector<Edge>{{0, 2}});
  CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("path graphs") {
  const Graph p1 = path_graph(1);
  CHECK(p1.order() == 1);
  CHECK(p1.size() == 0);

  const Graph p2 = path_graph(2);
  CHECK(p2.size() == 1);
  CHECK(p2.degrees() == std::vector<int>{1, 1});

  const Graph p4 = path_graph(4);
  CHECK(p4.size() == 3);
  CHECK(p4.degrees() == std::vector<int>{1, 2, 2, 1});

  CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
}

TEST_CASE("cycle graphs") {
  const Graph c3 = cycle_graph(3);
  CHECK(c3.order() == 3);
  CHECK(c3.degrees() == std::vector<int>{2, 2, 2});

  const Graph c5 = cycle_graph(5);
  CHECK(c5.size() == 5);
  check_handshake(c5);

  // C_4: four vertices of degree 2, sum of squares 16
  const Graph c4 = cycle_graph(4);
  int m1 = 0;
  for (int d : c4.degrees()) m1 += d * d;
  CHECK(m1 == 16);

  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(cycle_graph(0), std::invalid_argument);
}

TEST_CASE("complete graphs") {
  CHECK(complete_graph(1).size() == 0);
  CHECK(complete_graph(2).size() == 1);

  const Graph k4 = complete_graph(4);
  CHECK(k4.size() == 6);
  CHECK(k4.degrees() == std::vector<int>(4, 3));

  CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
}

TEST_CASE("star graphs") {
  CHECK(star_graph(1) == complete_graph(2));

  const Graph s3 = star_graph(3);
  CHECK(s3.degrees() == std::vector<int>{3, 1, 1, 1});

  const Graph s5 = star_graph(5);
  int m1 = 0;
  for (int d : s5.degrees()) m1 += d * d;
  CHECK(m1 == 30);

  CHECK_THROWS_AS(star_graph(0), std::invalid_argument);
}

TEST_CASE("splitmix64 reference stream") {
  SplitMix64 a(1234567);
  CHECK(a.next() == 0x599ed017fb08fc85ULL);
  CHECK(a.next() == 0x2c73f08458540fa5ULL);
  CHECK(a.next() == 0x883ebce5a3f27c77ULL);
  CHECK(a.next() == 0x3fbef740e9177b3fULL);
  CHECK(a.next() == 0xe3b8346708cb5ecdULL);

  SplitMix64 b(0);
  CHECK(b.next() == 0xe220a8397b1dcdafULL);
  CHECK(b.next() == 0x6e789e6aa1b965f4ULL);
  CHECK(b.next() == 0x06c45d188009454fULL);

  SplitMix64 c(7);
  const double u = c.next_unit();
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
}

TEST_CASE("random graphs") {
  SUBCASE("p = 0 gives isolated vertices") {
    const Graph g = random_graph(5, 0.0, 99);
    CHECK(g.order() == 5);
    CHECK(g.size() == 0);
  }
  SUBCASE("p = 1 gives the complete graph") {
    CHECK(random_graph(5, 1.0, 99) == complete_graph(5));
  }
  SUBCASE("pure function of (n, p, seed)") {
    const Graph a = random_graph(6, 0.5, 42);
    const Graph b = random_graph(6, 0.5, 42);
    CHECK(a == b);
    CHECK(a != random_graph(6, 0.5, 43));
  }
  SUBCASE("frozen edge set for (6, 0.5, 42)") {
    const std::vector<Edge> expected{{0, 2}, {0, 3}, {0, 4}, {0, 5},
                                     {1, 3}, {1, 5}, {2, 4}, {2, 5}};
    CHECK(random_graph(6, 0.5, 42).edges() == expected);
  }
  SUBCASE("handshake on a sweep of seeds") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      check_handshake(random_graph(9, 0.37, seed));
    }
  }
  SUBCASE("rejects bad parameters") {
    CHECK_THROWS_AS(random_graph(-1, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_graph(5, -0.1, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_graph(5, 1.5, 0), std::invalid_argument);
  }
}

TEST_CASE("connectivity query") {
  CHECK(is_connected(Graph(0, {})));
  CHECK(is_connected(Graph(1, {})));
  CHECK_FALSE(is_connected(Graph(2, {})));
  CHECK(is_connected(path_graph(6)));
  CHECK(is_connected(cycle_graph(5)));
  CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("edge list parsing") {
  SUBCASE("smallest graph") {
    const Graph g = read_edge_list("2 1\n0 1\n");
    CHECK(g == complete_graph(2));
  }
  SUBCASE("comments, blank lines, missing trailing newline") {
    const Graph g = read_edge_list("# a triangle\n3 3\n\n0 1\n1 2\n# mid\n0 2");
    CHECK(g == cycle_graph(3));
  }
  SUBCASE("self-loop reported with its line") {
    try {
      read_edge_list("3 1\n0 0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
  }
  SUBCASE("endpoint out of range reported with its line") {
    try {
      read_edge_list("2 2\n0 1\n1 2\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
  }
  SUBCASE("duplicate edge reported with its line, both orientations") {
    try {
      read_edge_list("3 2\n0 1\n1 0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
  }
  SUBCASE("malformed header") {
    CHECK_THROWS_AS(read_edge_list(""), ParseError);
    CHECK_THROWS_AS(read_edge_list("banana\n"), ParseError);
    CHECK_THROWS_AS(read_edge_list("3\n"), ParseError);
    CHECK_THROWS_AS(read_edge_list("3 1 4\n"), ParseError);
    CHECK_THROWS_AS(read_edge_list("-2 0\n"), ParseError);
  }
  SUBCASE("edge count mismatches") {
    CHECK_THROWS_AS(read_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(read_edge_list("3 1\n0 1\n1 2\n"), ParseError);
  }
  SUBCASE("malformed edge line") {
    CHECK_THROWS_AS(read_edge_list("3 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(read_edge_list("3 1\n0 1 2\n"), ParseError);
  }
}

TEST_CASE("edge list writing and round trip") {
  CHECK(write_edge_list(cycle_graph(3)) == "3 3\n0 1\n0 2\n1 2\n");
  CHECK(write_edge_list(Graph(1, {})) == "1 0\n");

  // round trip across a spread of generated graphs
  std::vector<Graph> samples{path_graph(1),          path_graph(7),
                             cycle_graph(6),         complete_graph(5),
                             star_graph(4),          random_graph(10, 0.4, 1),
                             random_graph(10, 0.9, 2)};
  for (const Graph& g : samples) {
    CHECK(read_edge_list(write_edge_list(g)) == g);
  }
}

TEST_CASE("has_edge and degree accessors") {
  const Graph g = path_graph(4);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(1, 1));
  CHECK(g.degree(1) == 2);
  CHECK_THROWS(g.degree(9));
}
