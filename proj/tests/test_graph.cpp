#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "egcert/errors.hpp"
#include "egcert/families.hpp"
#include "egcert/graph.hpp"
#include "egcert/graph_io.hpp"
#include "support/oracles.hpp"

using namespace egcert;

TEST_CASE("vertex set across word boundaries") {
  VertexSet s(130);
  for (int v : {0, 63, 64, 129}) s.insert(v);
  CHECK(s.count() == 4);
  CHECK(s.members() == std::vector<int>{0, 63, 64, 129});
  CHECK(s.next(63) == 64);
  CHECK(s.next(129) == -1);
  s.erase(64);
  CHECK_FALSE(s.contains(64));
  CHECK_FALSE(s.contains(130));
  CHECK_FALSE(s.contains(-1));

  const VertexSet a = VertexSet::of(10, {1, 2, 3});
  const VertexSet b = VertexSet::of(10, {3, 4});
  CHECK((a & b).members() == std::vector<int>{3});
  CHECK((a | b).count() == 4);
  CHECK((a - b).members() == std::vector<int>{1, 2});
  CHECK(lex_less(a, b));
  CHECK(lex_less(VertexSet::of(10, {1, 2}), a));
  CHECK_FALSE(lex_less(a, a));
}

TEST_CASE("graph construction") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(g.size() == 1);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(-1, 0), std::invalid_argument);
  validate(g);
}

TEST_CASE("degree statistics") {
  auto k4 = degree_stats(families::complete(4));
  CHECK(k4.min_degree == 3);
  CHECK(k4.max_degree == 3);
  auto p8 = degree_stats(families::path(8));
  CHECK(p8.min_degree == 1);
  CHECK(p8.max_degree == 2);
  auto pet = degree_stats(oracle::kneser_petersen());
  CHECK(pet.min_degree == 3);
  CHECK(pet.max_degree == 3);
  CHECK(degree_stats(Graph(0)).degree_sequence.empty());
}

TEST_CASE("components after deletion") {
  const Graph c5 = families::cycle(5);
  auto k4 = components(families::complete(4));
  REQUIRE(k4.size() == 1);
  CHECK(k4[0].members() == std::vector<int>{0, 1, 2, 3});
  auto one = components(c5, VertexSet::of(5, {0}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].members() == std::vector<int>{1, 2, 3, 4});
  auto two = components(c5, VertexSet::of(5, {0, 2}));
  REQUIRE(two.size() == 2);
  CHECK(two[0].members() == std::vector<int>{1});
  CHECK(two[1].members() == std::vector<int>{3, 4});
}

TEST_CASE("induced subgraphs") {
  auto k3 = induced_subgraph(families::complete(4), VertexSet::of(4, {0, 1, 2}));
  CHECK(k3.graph == families::complete(3));
  auto c5 = induced_subgraph(families::cycle(5), VertexSet::of(5, {0, 1, 3}));
  CHECK(c5.graph.edges() == std::vector<Edge>{{0, 1}});
  CHECK(c5.to_parent == std::vector<int>{0, 1, 3});

  // The outer ring of the standard drawing.
  const Graph pet = families::petersen();
  auto ring = induced_subgraph(pet, VertexSet::of(10, {0, 1, 2, 3, 4}));
  CHECK(ring.graph.size() == 5);
  CHECK(degree_stats(ring.graph).max_degree == 2);
  CHECK(is_connected(ring.graph));
}

TEST_CASE("named graphs match their characterisations") {
  // Cubic with girth 5 on 10 vertices, and cubic with girth 6 on 14, are unique.
  const Graph pet = families::petersen();
  CHECK(pet.order() == 10);
  CHECK(degree_stats(pet).max_degree == 3);
  CHECK(degree_stats(pet).min_degree == 3);
  CHECK(*oracle::cycle_lengths(oracle::matrix(pet)).begin() == 5);

  const Graph hea = families::heawood();
  CHECK(hea.order() == 14);
  CHECK(degree_stats(hea).min_degree == 3);
  CHECK(degree_stats(hea).max_degree == 3);
  CHECK(*oracle::cycle_lengths(oracle::matrix(hea)).begin() == 6);

  const Graph k33 = families::complete_bipartite(3, 3);
  CHECK(k33.size() == 9);
}

TEST_CASE("graph6 examples") {
  const Graph k4 = parse_graph6("C~");
  CHECK(k4 == families::complete(4));
  const Graph one = parse_graph6("@");
  CHECK(one.order() == 1);
  CHECK(one.size() == 0);

  const Graph g = parse_graph6("D?{");
  int n = 0;
  const auto edges = oracle::decode_graph6_small("D?{", n);
  CHECK(n == 5);
  CHECK(g.edges() == edges);
  CHECK(g.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(write_graph6(g) == "D?{");

  CHECK(parse_graph6(">>graph6<<C~\n") == families::complete(4));
  CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 agrees with the reference decoder") {
  for (const Graph& g : {families::petersen(), families::heawood(), families::complete_bipartite(3, 4),
                         families::path(8), families::cycle(13)}) {
    const std::string s = write_graph6(g);
    int n = 0;
    CHECK(oracle::decode_graph6_small(s, n) == g.edges());
    CHECK(n == g.order());
    CHECK(parse_graph6(s) == g);
  }
}

TEST_CASE("graph6 long orders round-trip") {
  Graph big(100);
  for (int v = 0; v + 1 < 100; v += 3) big.add_edge(v, v + 1);
  big.add_edge(0, 99);
  const std::string s = write_graph6(big);
  CHECK(s[0] == '~');
  CHECK(parse_graph6(s) == big);
}

TEST_CASE("graph6 errors carry byte offsets") {
  auto offset_of = [](const std::string& text) -> long {
    try {
      parse_graph6(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("D?}x") == 3);   // trailing garbage
  CHECK(offset_of("D?") == 2);     // truncated
  CHECK(offset_of("C\x7f") == 1);  // byte outside 63..126
  CHECK(offset_of("") == 0);
  CHECK(offset_of("~") >= 0);  // malformed length prefix
}

TEST_CASE("graph6 streams report line numbers") {
  std::istringstream ok("C~\n\n@\n");
  CHECK(read_graph6_stream(ok).size() == 2);
  std::istringstream bad("C~\nC\x01\n");
  try {
    read_graph6_stream(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(e.offset() == 1);
  }
}

TEST_CASE("edge lists") {
  const Graph k4 = parse_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  CHECK(k4 == families::complete(4));
  CHECK(parse_edge_list(write_edge_list(families::petersen())) == families::petersen());
  CHECK(parse_edge_list("# comment\n3 1 # trailing\n0 2\n").edges() == std::vector<Edge>{{0, 2}});
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);

  std::istringstream two("2 1\n0 1\n3 0\n");
  CHECK(read_edge_lists(two).size() == 2);
  CHECK(detect_format("4 6\n0 1\n") == GraphFormat::kEdgeList);
  CHECK(detect_format("C~\n") == GraphFormat::kGraph6);
}
