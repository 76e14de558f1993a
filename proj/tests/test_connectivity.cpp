#include <doctest.h>

#include "egcert/errors.hpp"
#include "egcert/families.hpp"
#include "egcert/random_graphs.hpp"
#include "egcert/witness.hpp"
#include "support/oracles.hpp"

using namespace egcert;

TEST_CASE("minimum cuts of small graphs") {
  auto c5 = min_vertex_cut(families::cycle(5));
  CHECK(c5.connectivity() == 2);
  CHECK(c5.component_count == 2);

  const Graph two = families::two_k4_sharing_vertex();
  auto s = min_vertex_cut(two);
  REQUIRE(s.cut_vertices.size() == 1);
  CHECK(s.cut_vertices == oracle::min_cut(oracle::matrix(two)));
  CHECK(s.component_count == 2);
  CHECK(s.is_cnc(s.cut_vertices[0], 0));
  CHECK(s.is_cnc(s.cut_vertices[0], 1));

  auto pet = min_vertex_cut(families::petersen());
  CHECK(pet.connectivity() == 3);
  CHECK(pet.cut_vertices == oracle::min_cut(oracle::matrix(families::petersen())));

  CHECK_THROWS_AS(min_vertex_cut(families::complete(5)), CompleteGraphError);
  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK_THROWS_AS(min_vertex_cut(split), DisconnectedError);
  CHECK(vertex_connectivity(split) == 0);
  CHECK(vertex_connectivity(families::complete(5)) == 4);
}

TEST_CASE("cut with the CNC relation") {
  const Graph k33 = families::complete_bipartite(3, 3);
  auto a = cut_analysis_cnc(k33);
  const auto expected = oracle::min_cut(oracle::matrix(k33));
  CHECK(a.cut_vertices == expected);
  CHECK(a.connectivity() == 3);
  // K3,3 minus one side: three isolated vertices, each joined to the whole cut.
  CHECK(a.component_count == 3);
  for (int x : a.cut_vertices)
    for (std::size_t d = 0; d < a.components.size(); ++d) {
      CHECK(a.components[d].count() == 1);
      CHECK(a.is_cnc(x, d));
    }

  CHECK_THROWS_AS(cut_analysis_cnc(families::cycle(5)), MinDegreeError);
  CHECK_THROWS_AS(cut_analysis_cnc(families::complete(4)), CompleteGraphError);
}

TEST_CASE("cuts agree with brute force on random graphs") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = random_test_graph(seed, 11);
    if (is_complete(g)) continue;
    const auto m = oracle::matrix(g);
    const auto cut = min_vertex_cut(g);
    CAPTURE(seed);
    CHECK(cut.cut_vertices == oracle::min_cut(m));
    CHECK(static_cast<int>(detail::smallest_cut_by_flow(g).count()) == cut.connectivity());
    CHECK(vertex_connectivity(g) == cut.connectivity());
  }
}

TEST_CASE("flow and enumeration pick the same cut") {
  for (std::uint64_t seed = 200; seed < 260; ++seed) {
    const Graph g = random_test_graph(seed, 14);
    if (is_complete(g)) continue;
    const auto by_enum = detail::smallest_cut_by_enumeration(g, 4);
    if (!by_enum) continue;
    CAPTURE(seed);
    CHECK(*by_enum == detail::smallest_cut_by_flow(g));
  }
}
