#include <doctest.h>

#include "egcert/detect.hpp"
#include "egcert/families.hpp"
#include "egcert/random_graphs.hpp"
#include "support/oracles.hpp"

using namespace egcert;

namespace {

std::set<int> oracle_spectrum(const Graph& g, int max_len) {
  std::set<int> out;
  for (int len : oracle::cycle_lengths(oracle::matrix(g)))
    if (len <= max_len) out.insert(len);
  return out;
}

}  // namespace

TEST_CASE("4-cycles") {
  auto k4 = find_c4(families::complete(4));
  REQUIRE(k4);
  CHECK(is_cycle(families::complete(4), *k4, false));
  CHECK_FALSE(find_c4(families::petersen()));
  CHECK_FALSE(find_c4(families::cycle(8)));
  CHECK_FALSE(find_c4(families::heawood()));
}

TEST_CASE("cycles of a given length") {
  const Graph c8 = families::cycle(8);
  auto self = find_cycle_of_length(c8, 8);
  REQUIRE(self);
  CHECK(self->vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
  auto pet8 = find_cycle_of_length(families::petersen(), 8);
  REQUIRE(pet8);
  CHECK(is_cycle(families::petersen(), *pet8, false));
  CHECK_FALSE(find_cycle_of_length(families::heawood(), 4));
  CHECK_FALSE(find_cycle_of_length(families::cycle(5), 6));
  CHECK_THROWS_AS(find_cycle_of_length(c8, 2), std::invalid_argument);
}

TEST_CASE("cycle spectra") {
  CHECK(cycle_spectrum(families::cycle(8), 12) == std::set<int>{8});
  CHECK(cycle_spectrum(families::complete(4), 12) == std::set<int>{3, 4});
  CHECK(cycle_spectrum(families::petersen(), 12) == std::set<int>{5, 6, 8, 9});
  CHECK(cycle_spectrum(families::petersen(), 12) == oracle_spectrum(families::petersen(), 12));
  CHECK(cycle_spectrum(families::heawood(), 14) == oracle_spectrum(families::heawood(), 14));
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_test_graph(seed, 11);
    CAPTURE(seed);
    CHECK(cycle_spectrum(g, 11) == oracle_spectrum(g, 11));
  }
}

TEST_CASE("power-of-two cycles") {
  auto k4 = power_of_two_cycle(families::complete(4));
  REQUIRE(k4);
  CHECK(k4->exponent == 2);
  auto pet = power_of_two_cycle(families::petersen());
  REQUIRE(pet);
  CHECK(pet->exponent == 3);
  CHECK(pet->cycle.length() == 8);
  CHECK(is_cycle(families::petersen(), pet->cycle, false));
  CHECK_FALSE(power_of_two_cycle(families::cycle(7)));
}

TEST_CASE("longest induced paths") {
  CHECK(longest_induced_path(families::path(8), 8).count == 8);
  CHECK(is_path(families::path(8), longest_induced_path(families::path(8), 8).path, true));
  CHECK(longest_induced_path(families::cycle(7), 8).count < 8);
  CHECK(is_pk_free(families::cycle(7), 8));

  const Graph pet = families::petersen();
  const int expected = oracle::longest_induced_path(oracle::matrix(pet));
  auto r = longest_induced_path(pet, pet.order());
  CHECK(r.count == expected);
  CHECK(r.count == 5);
  CHECK(is_path(pet, r.path, true));
  CHECK(is_pk_free(pet, 6));
  CHECK_FALSE(is_pk_free(pet, 5));

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_test_graph(seed, 12);
    CAPTURE(seed);
    const auto got = longest_induced_path(g, g.order());
    CHECK(got.count == oracle::longest_induced_path(oracle::matrix(g)));
    CHECK(is_path(g, got.path, true));
  }
}

TEST_CASE("shortest induced cycles") {
  auto pet = shortest_induced_cycle_at_least(families::petersen(), 5);
  REQUIRE(pet);
  CHECK(pet->length() == 5);
  CHECK(is_cycle(families::petersen(), *pet, true));
  auto hea = shortest_induced_cycle_at_least(families::heawood(), 5);
  REQUIRE(hea);
  CHECK(hea->length() == 6);
  CHECK_FALSE(shortest_induced_cycle_at_least(families::complete(4), 5));

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_test_graph(seed, 12);
    CAPTURE(seed);
    auto c = shortest_induced_cycle_at_least(g, 5);
    const int expected = oracle::shortest_hole_at_least(oracle::matrix(g), 5);
    CHECK((c ? c->length() : 0) == expected);
    if (c) CHECK(is_cycle(g, *c, true));
  }
}

TEST_CASE("structural checks") {
  const Graph c8 = families::cycle(8);
  CHECK(is_cycle(c8, VertexCycle{{0, 1, 2, 3, 4, 5, 6, 7}}, true));
  CHECK_FALSE(is_path(c8, VertexPath{{0, 1, 2, 3, 4, 5, 6, 7}}, true));
  CHECK(is_path(c8, VertexPath{{0, 1, 2, 3, 4, 5, 6, 7}}, false));
  CHECK_FALSE(is_cycle(c8, VertexCycle{{0, 1, 2}}, false));
  CHECK_FALSE(is_cycle(families::complete(4), VertexCycle{{0, 1, 2, 3}}, true));
}
