#include <doctest.h>

#include <fstream>
#include <sstream>

#include "egcert/check.hpp"
#include "egcert/families.hpp"
#include "egcert/json.hpp"
#include "egcert/random_graphs.hpp"
#include "egcert/sweep.hpp"

using namespace egcert;

namespace {

Json golden(const std::string& name) {
  std::ifstream in(std::string(EGCERT_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  return Json::parse(in);
}

}  // namespace

TEST_CASE("witness and trace round-trip") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = random_test_graph(seed);
    const Certificate c = eg_witness(g);
    CHECK(witness_from_json(to_json(c.witness)) == c.witness);
    CHECK(trace_from_json(to_json(c.trace)) == c.trace);
    CHECK(trace_from_json(Json::parse(to_json(c.trace).dump())) == c.trace);
  }
  CHECK_THROWS(witness_from_json(Json::parse(R"({"kind": "Cycle5", "vertices": [0]})")));
  CHECK_THROWS(witness_from_json(Json::parse(R"({"vertices": [0]})")));
}

TEST_CASE("certificate JSON omits the trace unless asked") {
  const Certificate c = eg_witness(families::petersen());
  CHECK_FALSE(to_json(c, false).contains("trace"));
  CHECK(to_json(c, true).contains("trace"));
}

TEST_CASE("golden: Petersen certificate with trace") {
  CHECK(to_json(eg_witness(families::petersen()), true) == golden("petersen_eg.json"));
  CHECK(to_json(p5_witness(families::petersen()), true) == golden("petersen_p5.json"));
}

TEST_CASE("golden: check output") {
  CHECK(to_json(run_check(families::complete(4)), false) == golden("k4_check.json"));
  CHECK(to_json(run_check(families::petersen()), false) == golden("petersen_check.json"));
  CheckOptions bare;
  bare.witnesses = false;
  CHECK(to_json(run_check(families::path(8), bare), false) == golden("p8_check.json"));
}

TEST_CASE("golden: sweep report n = 4..6") {
  SweepConfig cfg;
  cfg.n_max = 6;
  CHECK(to_json(sweep(cfg)) == golden("sweep_4_6.json"));
}

TEST_CASE("timing is only reported on request") {
  SweepConfig cfg;
  cfg.n_max = 5;
  CHECK(to_json(sweep(cfg)).dump().find("wall_time") == std::string::npos);
  cfg.timing = true;
  CHECK(to_json(sweep(cfg)).dump().find("wall_time") != std::string::npos);
}
