// egcert: check graphs, extract certificates, run theorem sweeps.
//
// Exit codes: 0 ok, 2 unreadable or malformed input, 3 minimum degree below 3
// where witnesses were requested, 4 internal invariant violated (a bug; the
// trace is dumped), 5 sweep failures.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "egcert/check.hpp"
#include "egcert/errors.hpp"
#include "egcert/graph_io.hpp"
#include "egcert/json.hpp"
#include "egcert/sweep.hpp"
#include "egcert/enumerate.hpp"

namespace {

using namespace egcert;

enum Exit { kOk = 0, kBadInput = 2, kMinDegree = 3, kInvariant = 4, kSweepFailures = 5 };

struct InputError {
  std::string message;
};

std::string slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot read " + path};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<Graph> load(const std::string& path, const std::string& format) {
  const std::string text = slurp(path);
  GraphFormat f = GraphFormat::kGraph6;
  if (format == "edgelist") f = GraphFormat::kEdgeList;
  else if (format == "auto") f = detect_format(text);
  std::istringstream in(text);
  try {
    std::vector<Graph> graphs = read_graphs(in, f);
    if (graphs.empty()) throw InputError{path + ": no graph found"};
    return graphs;
  } catch (const ParseError& e) {
    throw InputError{path + ": " + e.what()};
  }
}

void print_trace(std::ostream& out, const ExtractionTrace& trace) {
  for (const TraceEvent& ev : trace.events) {
    out << "  " << ev.claim << " / " << ev.case_id;
    for (const auto& [label, v] : ev.bind) out << ' ' << label << '=' << v;
    out << '\n';
  }
}

void print_witness(std::ostream& out, const std::string& goal, const Certificate& c, bool trace) {
  out << goal << ": " << to_string(c.witness.kind);
  for (int v : c.witness.vertices) out << ' ' << v;
  out << '\n';
  if (trace) print_trace(out, c.trace);
}

void report_invariant(const InternalInvariantError& e, std::size_t index) {
  std::cerr << "graph " << index << ": " << e.what() << '\n';
  std::cerr << to_json(e.trace()).dump(2) << '\n';
}

void print_check(const CheckOutput& c, bool trace) {
  std::cout << "n=" << c.n << " m=" << c.m << " min_degree=" << c.min_degree << " max_degree=" << c.max_degree
            << " connectivity=";
  if (c.complete) std::cout << "complete";
  else std::cout << c.connectivity;
  std::cout << '\n';
  std::cout << "P5-free: " << (c.p5_free ? "yes" : "no") << "  P8-free: " << (c.p8_free ? "yes" : "no") << '\n';
  std::cout << "cycle lengths <= " << c.spectrum_bound << ":";
  if (c.cycle_spectrum.empty()) std::cout << " none";
  for (int len : c.cycle_spectrum) std::cout << ' ' << len;
  std::cout << '\n';
  if (c.power_of_two) {
    std::cout << "power-of-two cycle: C" << (1 << c.power_of_two->exponent) << ':';
    for (int v : c.power_of_two->cycle.vertices) std::cout << ' ' << v;
    std::cout << '\n';
  } else {
    std::cout << "power-of-two cycle: none\n";
  }
  if (c.p5_certificate) print_witness(std::cout, "p5 witness", *c.p5_certificate, trace);
  if (c.p8_certificate) print_witness(std::cout, "p8 witness", *c.p8_certificate, trace);
}

int cmd_check(const std::string& path, const std::string& format, bool json, bool trace, bool no_witness,
              int max_cycle) {
  const std::vector<Graph> graphs = load(path, format);
  int code = kOk;
  auto fail = [&](int c) {
    if (code == kOk) code = c;
  };
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    CheckOptions options;
    options.witnesses = !no_witness;
    options.max_cycle = max_cycle;
    CheckOutput out;
    try {
      out = run_check(graphs[i], options);
    } catch (const MinDegreeError& e) {
      std::cerr << "graph " << i << ": " << e.what() << '\n';
      fail(kMinDegree);
      options.witnesses = false;
      out = run_check(graphs[i], options);
    } catch (const InternalInvariantError& e) {
      report_invariant(e, i);
      fail(kInvariant);
      continue;
    }
    if (json) {
      std::cout << to_json(out, trace).dump() << '\n';
    } else {
      if (graphs.size() > 1) std::cout << "# graph " << i << '\n';
      print_check(out, trace);
    }
  }
  return code;
}

int cmd_extract(const std::string& path, const std::string& format, const std::string& goal, bool json, bool trace) {
  const std::vector<Graph> graphs = load(path, format);
  int code = kOk;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    try {
      const Certificate c = goal == "p5" ? p5_witness(graphs[i]) : eg_witness(graphs[i]);
      if (!verify_witness(graphs[i], c.witness)) {
        std::cerr << "graph " << i << ": extracted witness failed verification\n";
        if (code == kOk) code = kInvariant;
        continue;
      }
      if (json) std::cout << to_json(c, trace).dump() << '\n';
      else print_witness(std::cout, graphs.size() > 1 ? "graph " + std::to_string(i) : "witness", c, trace);
    } catch (const MinDegreeError& e) {
      std::cerr << "graph " << i << ": " << e.what() << '\n';
      if (code == kOk) code = kMinDegree;
    } catch (const InternalInvariantError& e) {
      report_invariant(e, i);
      if (code == kOk) code = kInvariant;
    }
  }
  return code;
}

int cmd_verify(SweepConfig cfg, const std::string& input, const std::vector<std::string>& checks, bool json) {
  if (!checks.empty()) {
    cfg.checks.clear();
    for (const std::string& name : checks) {
      const auto c = parse_sweep_check(name);
      if (!c) throw InputError{"unknown check " + name};
      cfg.checks.insert(*c);
    }
  }
  std::istringstream stream;
  if (!input.empty()) {
    stream.str(slurp(input));
    cfg.source = SweepSource::kGraph6Stream;
    cfg.input = &stream;
  } else if (cfg.n_max > kMaxGeneratedOrder) {
    throw InputError{"internal generation stops at n = " + std::to_string(kMaxGeneratedOrder) +
                     "; pass larger orders as a graph6 stream with --input"};
  }
  SweepReport report;
  try {
    report = sweep(cfg);
  } catch (const ParseError& e) {
    throw InputError{input + ": " + e.what()};
  } catch (const std::invalid_argument& e) {
    throw InputError{e.what()};
  }
  if (json) std::cout << to_json(report).dump(2) << '\n';
  else std::cout << format_sweep_table(report);
  return report.ok() ? kOk : kSweepFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates for 4-cycles, 8-cycles and induced paths in graphs of minimum degree >= 3"};
  app.require_subcommand(1);

  std::string path = "-";
  std::string format = "auto";
  bool json = false;
  bool trace = false;

  auto* check = app.add_subcommand("check", "Summarise each input graph and extract both witnesses");
  bool no_witness = false;
  int max_cycle = 12;
  check->add_option("path", path, "Input file, '-' for standard input")->capture_default_str();
  check->add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}))
      ->capture_default_str();
  check->add_flag("--json", json, "One JSON object per graph");
  check->add_flag("--trace", trace, "Include extraction traces");
  check->add_flag("--no-witness", no_witness, "Skip the extractors (no minimum-degree requirement)");
  check->add_option("--max-cycle", max_cycle, "Largest cycle length in the spectrum")
      ->check(CLI::Range(3, 64))
      ->capture_default_str();

  auto* extract = app.add_subcommand("extract", "Extract a verified witness");
  std::string goal = "p8";
  extract->add_option("path", path, "Input file, '-' for standard input")->capture_default_str();
  extract->add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}))
      ->capture_default_str();
  extract->add_option("--goal", goal, "p5: C4 or induced P5; p8: C4, C8 or induced P8")
      ->check(CLI::IsMember({"p5", "p8"}))
      ->capture_default_str();
  extract->add_flag("--json", json, "JSON output");
  extract->add_flag("--trace", trace, "Print the claim/case path");

  auto* verify = app.add_subcommand("verify-theorems", "Exhaustive sweep over generated or streamed graphs");
  SweepConfig cfg;
  std::string input;
  std::vector<std::string> checks;
  bool timing = false;
  verify->add_option("--n-min", cfg.n_min, "Smallest order")->capture_default_str();
  verify->add_option("--n-max", cfg.n_max, "Largest order")->capture_default_str();
  verify->add_option("--min-degree", cfg.min_degree, "Minimum degree for generation")->capture_default_str();
  verify->add_option("--input", input, "graph6 stream instead of internal generation ('-' for stdin)");
  verify->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--checks", checks,
                     "Subset of theorem1, theorem2, lemma21, eg-conjecture-report, oracle "
                     "(default: all but oracle)");
  verify->add_flag("--timing", timing, "Report wall time per order");
  verify->add_flag("--json", json, "JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return cmd_check(path, format, json, trace, no_witness, max_cycle);
    if (*extract) return cmd_extract(path, format, goal, json, trace);
    cfg.timing = timing;
    return cmd_verify(cfg, input, checks, json);
  } catch (const InputError& e) {
    std::cerr << "egcert: " << e.message << '\n';
    return kBadInput;
  }
}
