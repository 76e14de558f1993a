#include <array>
#include <string>

#include "egcert/witness.hpp"

namespace egcert {
namespace {

constexpr std::array<std::string_view, 4> kKindNames = {"Cycle4", "Cycle8", "InducedP8", "InducedP5"};

}  // namespace

std::string_view to_string(WitnessKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<WitnessKind> parse_witness_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == name) return static_cast<WitnessKind>(i);
  return std::nullopt;
}

int witness_size(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kCycle4:
      return 4;
    case WitnessKind::kInducedP5:
      return 5;
    case WitnessKind::kCycle8:
    case WitnessKind::kInducedP8:
      return 8;
  }
  return 0;
}

bool is_cycle_kind(WitnessKind kind) { return kind == WitnessKind::kCycle4 || kind == WitnessKind::kCycle8; }

std::string_view to_string(WitnessCheck check) {
  switch (check) {
    case WitnessCheck::kOk:
      return "ok";
    case WitnessCheck::kWrongSize:
      return "wrong_size";
    case WitnessCheck::kOutOfRange:
      return "vertex_out_of_range";
    case WitnessCheck::kRepeatedVertex:
      return "repeated_vertex";
    case WitnessCheck::kMissingEdge:
      return "missing_edge";
    case WitnessCheck::kChord:
      return "chord";
  }
  return "unknown";
}

WitnessCheck check_witness(const Graph& g, const Witness& w) {
  const int n = g.order();
  const std::vector<int>& vs = w.vertices;
  const std::size_t k = vs.size();
  if (static_cast<int>(k) != witness_size(w.kind)) return WitnessCheck::kWrongSize;
  for (int v : vs)
    if (v < 0 || v >= n) return WitnessCheck::kOutOfRange;

  // Plain adjacency matrix over the witness positions, filled from the edge list.
  std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
  for (const auto& [u, v] : g.edges())
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if ((vs[i] == u && vs[j] == v) || (vs[i] == v && vs[j] == u)) adj[i][j] = 1;
  auto edge = [&](std::size_t i, std::size_t j) { return adj[i][j] != 0; };

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (vs[i] == vs[j]) return WitnessCheck::kRepeatedVertex;

  const bool cyclic = is_cycle_kind(w.kind);
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (!edge(i, i + 1)) return WitnessCheck::kMissingEdge;
  if (cyclic && !edge(k - 1, 0)) return WitnessCheck::kMissingEdge;

  if (!cyclic)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 2; j < k; ++j)
        if (edge(i, j)) return WitnessCheck::kChord;
  return WitnessCheck::kOk;
}

bool replay_trace(const Graph& g, const ExtractionTrace& trace, std::string* failure) {
  auto fail = [&](const std::string& why) {
    if (failure) *failure = why;
    return false;
  };
  for (std::size_t e = 0; e < trace.events.size(); ++e) {
    const TraceEvent& ev = trace.events[e];
    const std::string where = "event " + std::to_string(e) + " (" + ev.claim + "/" + ev.case_id + ")";
    for (const auto& [label, v] : ev.bind)
      if (v < 0 || v >= g.order()) return fail(where + ": label " + label + " bound out of range");
    auto check = [&](const auto& facts, bool want) -> std::string {
      for (const auto& [a, b] : facts) {
        const int u = ev.lookup(a);
        const int v = ev.lookup(b);
        if (u < 0 || v < 0) return where + ": unbound label in fact " + a + "," + b;
        if (g.adjacent(u, v) != want)
          return where + ": expected " + a + (want ? " ~ " : " !~ ") + b;
      }
      return {};
    };
    if (auto why = check(ev.adjacent, true); !why.empty()) return fail(why);
    if (auto why = check(ev.nonadjacent, false); !why.empty()) return fail(why);
  }
  return true;
}

}  // namespace egcert
