#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "egcert/enumerate.hpp"
#include "egcert/errors.hpp"
#include "egcert/families.hpp"
#include "egcert/graph_io.hpp"
#include "egcert/random_graphs.hpp"
#include "egcert/sweep.hpp"
#include "support/oracles.hpp"

using namespace egcert;

namespace {

Graph shuffled(const Graph& g, std::uint64_t seed) {
  std::vector<int> p(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) p[i] = i;
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(p[u], p[v]);
  return h;
}

std::set<std::string> forms(const std::vector<Graph>& graphs) {
  std::set<std::string> out;
  for (const Graph& g : graphs) out.insert(adjacency_string(g));
  return out;
}

}  // namespace

TEST_CASE("canonical form matches the permutation oracle") {
  CHECK(adjacency_string(families::complete(4)) == "111111");
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(seed);
    const Graph g = random_gnp(6 + static_cast<int>(seed % 2), 0.5, rng);
    CAPTURE(seed);
    CHECK(canonical_form(g) == oracle::canonical_string(oracle::matrix(g)));
    CHECK(canonical_form(shuffled(g, seed + 7)) == canonical_form(g));
    CHECK(is_canonical(canonical_graph(g)));
    CHECK(adjacency_string(canonical_graph(g)) == canonical_form(g));
  }
  CHECK(canonical_form(families::petersen()) == canonical_form(oracle::kneser_petersen()));
  CHECK(canonical_form(families::petersen()) != canonical_form(families::heawood()));
}

TEST_CASE("small orders") {
  CHECK(generate_nonisomorphic(4, 3).size() == 1);
  CHECK(generate_nonisomorphic(4, 3)[0] == families::complete(4));
  CHECK(generate_nonisomorphic(5, 3).size() == 3);
  CHECK(generate_nonisomorphic(6, 3).size() == 19);
  CHECK(generate_nonisomorphic(3, 3).empty());
  CHECK(generate_nonisomorphic(0, 3).empty());
  CHECK_THROWS_AS(generate_nonisomorphic(kMaxGeneratedOrder + 1, 3), OrderTooLargeError);
}

TEST_CASE("generation agrees with label-and-dedupe") {
  for (int n = 1; n <= 6; ++n)
    for (int d : {0, 1, 3}) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(forms(generate_nonisomorphic(n, d)) == oracle::label_and_dedupe(n, d));
    }
}

TEST_CASE("connected graph counts") {
  // Connected graphs on n unlabelled vertices: 1, 1, 2, 6, 21, 112, 853, 11117.
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) CHECK(generate_nonisomorphic(n, 0).size() == connected[n - 1]);
  CHECK(generate_nonisomorphic(7, 3).size() == 150);
  CHECK(generate_nonisomorphic(8, 3).size() == 2589);
}

TEST_CASE("generated graphs are canonical, sorted and qualify") {
  const auto graphs = generate_nonisomorphic(7, 3);
  std::string prev;
  for (const Graph& g : graphs) {
    const std::string s = adjacency_string(g);
    CHECK(s > prev);
    prev = s;
    CHECK(is_canonical(g));
    CHECK(is_connected(g));
    CHECK(degree_stats(g).min_degree >= 3);
  }
}

TEST_CASE("sweep over K4") {
  SweepConfig cfg;
  cfg.n_min = cfg.n_max = 4;
  cfg.checks.insert(SweepCheck::kOracle);
  const SweepReport r = sweep(cfg);
  REQUIRE(r.orders.size() == 1);
  const OrderReport& o = r.orders[0];
  CHECK(o.graphs_connected_min_deg == 1);
  CHECK(o.theorem1_witnesses == std::map<std::string, long>{{"Cycle4", 1}});
  CHECK(o.theorem2_witnesses == std::map<std::string, long>{{"Cycle4", 1}});
  CHECK(o.failures.empty());
  CHECK(r.ok());
}

TEST_CASE("sweep n = 4..7 has no failures and reports stable counts") {
  SweepConfig cfg;
  cfg.n_max = 7;
  cfg.checks.insert(SweepCheck::kOracle);
  const SweepReport r = sweep(cfg);
  CHECK(r.failure_count() == 0);
  REQUIRE(r.orders.size() == 4);
  CHECK(r.orders[2].graphs_connected_min_deg == 19);
  CHECK(r.orders[3].graphs_connected_min_deg == 150);
  for (const auto& o : r.orders) {
    CHECK(o.c4_free_count == 0);
    CHECK(o.power_of_two_cycle_count == o.graphs_connected_min_deg);
  }
  const std::string table = format_sweep_table(r);
  CHECK(table.find("150") != std::string::npos);
}

TEST_CASE("sweep over a graph6 stream") {
  std::ostringstream out;
  out << write_graph6(families::petersen()) << '\n'
      << write_graph6(families::heawood()) << '\n'
      << write_graph6(families::complete(4)) << '\n'
      << write_graph6(families::cycle(6)) << '\n';
  std::istringstream in(out.str());
  SweepConfig cfg;
  cfg.source = SweepSource::kGraph6Stream;
  cfg.input = &in;
  const SweepReport r = sweep(cfg);
  CHECK(r.ok());
  long checked = 0;
  long total = 0;
  for (const auto& o : r.orders) {
    checked += o.graphs_connected_min_deg;
    total += o.graphs_total;
  }
  CHECK(total == 4);
  CHECK(checked == 3);
}

TEST_CASE("sweep configuration errors") {
  SweepConfig cfg;
  cfg.n_min = 6;
  cfg.n_max = 5;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.jobs = 0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.source = SweepSource::kGraph6Stream;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  for (auto c : {SweepCheck::kTheorem1, SweepCheck::kTheorem2, SweepCheck::kLemma21, SweepCheck::kEgReport,
                 SweepCheck::kOracle})
    CHECK(parse_sweep_check(to_string(c)) == c);
  CHECK_FALSE(parse_sweep_check("theorem3"));
}
