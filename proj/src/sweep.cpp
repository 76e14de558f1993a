#include "egcert/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "egcert/detect.hpp"
#include "egcert/enumerate.hpp"
#include "egcert/errors.hpp"
#include "egcert/graph_io.hpp"
#include "egcert/oracle.hpp"
#include "egcert/witness.hpp"

namespace egcert {
namespace {

constexpr std::array<std::pair<SweepCheck, std::string_view>, 5> kCheckNames{{
    {SweepCheck::kTheorem1, "theorem1"},
    {SweepCheck::kTheorem2, "theorem2"},
    {SweepCheck::kLemma21, "lemma21"},
    {SweepCheck::kEgReport, "eg-conjecture-report"},
    {SweepCheck::kOracle, "oracle"},
}};

struct GraphResult {
  bool checked = false;
  bool c4_free = false;
  bool p5_free = false;
  bool p8_free = false;
  bool power_of_two = false;
  std::string theorem1_kind;
  std::string theorem2_kind;
  std::vector<std::string> failures;
};

// Runs one extractor and its conformance checks. `free` says whether the
// graph has no induced path of the size the extractor's contrapositive uses.
std::string check_extractor(const Graph& g, bool theorem1, bool free, std::vector<std::string>& failures) {
  const char* name = theorem1 ? "theorem1" : "theorem2";
  try {
    const Certificate cert = theorem1 ? p5_witness(g) : eg_witness(g);
    const WitnessCheck verdict = check_witness(g, cert.witness);
    if (verdict != WitnessCheck::kOk)
      failures.push_back(std::string(name) + ": witness rejected (" + std::string(to_string(verdict)) + ")");
    std::string why;
    if (!replay_trace(g, cert.trace, &why)) failures.push_back(std::string(name) + ": trace replay failed: " + why);
    const WitnessKind path_kind = theorem1 ? WitnessKind::kInducedP5 : WitnessKind::kInducedP8;
    if (free && cert.witness.kind == path_kind)
      failures.push_back(std::string(name) + ": induced path witness on a path-free graph");
    if (free && theorem1 && cert.witness.kind != WitnessKind::kCycle4)
      failures.push_back("theorem1: P5-free graph without a Cycle4 witness");
    if (free && !theorem1 && !is_cycle_kind(cert.witness.kind))
      failures.push_back("theorem2: P8-free graph without a Cycle4/Cycle8 witness");
    return std::string(to_string(cert.witness.kind));
  } catch (const InternalInvariantError& e) {
    failures.push_back(std::string(name) + ": " + e.what());
  } catch (const std::exception& e) {
    failures.push_back(std::string(name) + ": unexpected error: " + e.what());
  }
  return {};
}

GraphResult check_graph(const Graph& g, const std::set<SweepCheck>& checks) {
  GraphResult r;
  if (g.order() == 0 || !is_connected(g) || degree_stats(g).min_degree < 3) return r;
  r.checked = true;
  const std::optional<VertexCycle> c4 = find_c4(g);
  r.c4_free = !c4;
  r.p5_free = is_pk_free(g, 5);
  r.p8_free = is_pk_free(g, 8);

  if (checks.count(SweepCheck::kTheorem1)) r.theorem1_kind = check_extractor(g, true, r.p5_free, r.failures);
  if (checks.count(SweepCheck::kTheorem2)) r.theorem2_kind = check_extractor(g, false, r.p8_free, r.failures);
  if (checks.count(SweepCheck::kLemma21) && r.c4_free) {
    const std::optional<VertexCycle> hole = shortest_induced_cycle_at_least(g, 5);
    if (!hole || hole->length() < 5 || !is_cycle(g, *hole, true))
      r.failures.push_back("lemma21: C4-free graph without an induced cycle of length >= 5");
  }
  if (checks.count(SweepCheck::kEgReport)) r.power_of_two = power_of_two_cycle(g).has_value();
  if (checks.count(SweepCheck::kOracle) && g.order() <= kMaxOracleOrder) {
    const std::array<std::pair<WitnessKind, bool>, 4> detected{{
        {WitnessKind::kCycle4, c4.has_value()},
        {WitnessKind::kCycle8, find_cycle_of_length(g, 8).has_value()},
        {WitnessKind::kInducedP5, !r.p5_free},
        {WitnessKind::kInducedP8, !r.p8_free},
    }};
    for (const auto& [kind, found] : detected)
      if (brute_force_witness_exists(g, kind) != found)
        r.failures.push_back("oracle: detector and brute force disagree on " + std::string(to_string(kind)));
  }
  return r;
}

std::vector<GraphResult> check_all(const std::vector<Graph>& graphs, const std::set<SweepCheck>& checks, int jobs) {
  std::vector<GraphResult> results(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) results[i] = check_graph(graphs[i], checks);
  };
  const int extra = std::min<int>(jobs, static_cast<int>(graphs.size())) - 1;
  std::vector<std::thread> pool;
  for (int t = 0; t < extra; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return results;
}

OrderReport report_order(int n, const std::vector<Graph>& graphs, const SweepConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  OrderReport out;
  out.n = n;
  out.graphs_total = static_cast<long>(graphs.size());
  const std::vector<GraphResult> results = check_all(graphs, cfg.checks, cfg.jobs);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const GraphResult& r = results[i];
    if (!r.checked) continue;
    ++out.graphs_connected_min_deg;
    out.c4_free_count += r.c4_free;
    out.p5_free_count += r.p5_free;
    out.p8_free_count += r.p8_free;
    out.power_of_two_cycle_count += r.power_of_two;
    if (!r.theorem1_kind.empty()) ++out.theorem1_witnesses[r.theorem1_kind];
    if (!r.theorem2_kind.empty()) ++out.theorem2_witnesses[r.theorem2_kind];
    for (const std::string& why : r.failures) out.failures.push_back({write_graph6(graphs[i]), why});
  }
  if (cfg.timing) out.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

std::string_view to_string(SweepCheck check) {
  for (const auto& [c, name] : kCheckNames)
    if (c == check) return name;
  return "unknown";
}

std::optional<SweepCheck> parse_sweep_check(std::string_view name) {
  for (const auto& [c, n] : kCheckNames)
    if (n == name) return c;
  return std::nullopt;
}

void validate(const SweepConfig& cfg) {
  if (cfg.n_min > cfg.n_max) throw std::invalid_argument("n_min must not exceed n_max");
  if (cfg.min_degree < 0) throw std::invalid_argument("min_degree must be non-negative");
  if (cfg.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  if (cfg.source == SweepSource::kGraph6Stream && cfg.input == nullptr)
    throw std::invalid_argument("graph6 source without an input stream");
}

long SweepReport::failure_count() const {
  long total = 0;
  for (const OrderReport& o : orders) total += static_cast<long>(o.failures.size());
  return total;
}

SweepReport sweep(const SweepConfig& cfg) {
  validate(cfg);
  SweepReport report;
  report.config = cfg;
  report.config.input = nullptr;
  if (cfg.source == SweepSource::kInternal) {
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
      report.orders.push_back(report_order(n, generate_nonisomorphic(n, cfg.min_degree), cfg));
    return report;
  }
  // Stream: group by order, keeping stream order inside each group.
  std::map<int, std::vector<Graph>> by_order;
  for (Graph& g : read_graph6_stream(*cfg.input)) by_order[g.order()].push_back(std::move(g));
  for (const auto& [n, graphs] : by_order) report.orders.push_back(report_order(n, graphs, cfg));
  return report;
}

std::string format_sweep_table(const SweepReport& report) {
  std::ostringstream out;
  const bool timing = report.config.timing;
  out << std::setw(3) << "n" << std::setw(10) << "graphs" << std::setw(10) << "checked" << std::setw(9) << "C4-free"
      << std::setw(9) << "P5-free" << std::setw(9) << "P8-free" << std::setw(8) << "2^m" << "  "
      << std::left << std::setw(28) << "theorem1" << std::setw(40) << "theorem2" << std::right << std::setw(9)
      << "failures";
  if (timing) out << std::setw(10) << "seconds";
  out << '\n';
  auto kinds = [](const std::map<std::string, long>& m) {
    std::string s;
    for (const auto& [k, v] : m) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
    return s.empty() ? std::string("-") : s;
  };
  for (const OrderReport& o : report.orders) {
    out << std::setw(3) << o.n << std::setw(10) << o.graphs_total << std::setw(10) << o.graphs_connected_min_deg
        << std::setw(9) << o.c4_free_count << std::setw(9) << o.p5_free_count << std::setw(9) << o.p8_free_count
        << std::setw(8) << o.power_of_two_cycle_count << "  " << std::left << std::setw(28)
        << kinds(o.theorem1_witnesses) << std::setw(40) << kinds(o.theorem2_witnesses) << std::right
        << std::setw(9) << o.failures.size();
    if (timing) out << std::setw(10) << std::fixed << std::setprecision(3) << o.wall_time_seconds;
    out << '\n';
  }
  for (const OrderReport& o : report.orders)
    for (const SweepFailure& f : o.failures) out << "FAIL n=" << o.n << ' ' << f.graph6 << ": " << f.reason << '\n';
  return out.str();
}

}  // namespace egcert
