#pragma once

#include <optional>
#include <set>
#include <string>

#include "egcert/detect.hpp"
#include "egcert/graph.hpp"
#include "egcert/witness.hpp"

namespace egcert {

struct CheckOptions {
  bool witnesses = true;  // run both extractors (needs minimum degree >= 3)
  int max_cycle = 12;     // cycle spectrum bound
};

// Everything `egcert check` reports for one graph, recomputed from the graph.
struct CheckOutput {
  int n = 0;
  std::size_t m = 0;
  int min_degree = 0;
  int max_degree = 0;
  bool complete = false;
  int connectivity = 0;  // kappa; n - 1 for complete graphs
  bool p5_free = false;
  bool p8_free = false;
  int spectrum_bound = 0;
  std::set<int> cycle_spectrum;
  std::optional<PowerOfTwoCycle> power_of_two;
  std::optional<Certificate> p5_certificate;
  std::optional<Certificate> p8_certificate;
};

// Throws MinDegreeError when witnesses are requested and some vertex has
// degree < 3; InternalInvariantError from the extractors propagates.
CheckOutput run_check(const Graph& g, const CheckOptions& options = {});

}  // namespace egcert
