#pragma once

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "egcert/graph.hpp"

namespace egcert {

enum class SweepCheck { kTheorem1, kTheorem2, kLemma21, kEgReport, kOracle };

std::string_view to_string(SweepCheck check);
// Accepts "theorem1", "theorem2", "lemma21", "eg-conjecture-report", "oracle".
std::optional<SweepCheck> parse_sweep_check(std::string_view name);

enum class SweepSource { kInternal, kGraph6Stream };

struct SweepConfig {
  int n_min = 4;
  int n_max = 8;
  int min_degree = 3;
  SweepSource source = SweepSource::kInternal;
  std::istream* input = nullptr;  // graph6 records when source is a stream
  std::set<SweepCheck> checks{SweepCheck::kTheorem1, SweepCheck::kTheorem2, SweepCheck::kLemma21,
                              SweepCheck::kEgReport};
  int jobs = 1;
  bool timing = false;  // record wall time (makes reports run-dependent)
};

// Throws std::invalid_argument for n_min > n_max, min_degree < 0, jobs < 1,
// or a stream source without an input.
void validate(const SweepConfig& cfg);

struct SweepFailure {
  std::string graph6;
  std::string reason;
  bool operator==(const SweepFailure&) const = default;
};

struct OrderReport {
  int n = 0;
  long graphs_total = 0;
  long graphs_connected_min_deg = 0;  // connected with minimum degree >= 3: the checked graphs
  long c4_free_count = 0;
  long p5_free_count = 0;
  long p8_free_count = 0;
  long power_of_two_cycle_count = 0;  // checked graphs with a 2^m-cycle (report only)
  std::map<std::string, long> theorem1_witnesses;
  std::map<std::string, long> theorem2_witnesses;
  std::vector<SweepFailure> failures;
  double wall_time_seconds = 0;
};

struct SweepReport {
  SweepConfig config;
  std::vector<OrderReport> orders;

  long failure_count() const;
  bool ok() const { return failure_count() == 0; }
};

// Runs the configured checks on every graph from the source. Graphs are
// checked in parallel and merged in source order, so the report does not
// depend on cfg.jobs. Per-graph problems become failures; generation and
// stream parse errors propagate.
SweepReport sweep(const SweepConfig& cfg);

// Fixed-width text table of the per-order counts.
std::string format_sweep_table(const SweepReport& report);

}  // namespace egcert
