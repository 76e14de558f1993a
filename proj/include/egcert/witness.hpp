#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "egcert/connectivity.hpp"
#include "egcert/detect.hpp"
#include "egcert/graph.hpp"
#include "egcert/trace.hpp"

namespace egcert {

enum class WitnessKind { kCycle4, kCycle8, kInducedP8, kInducedP5 };

std::string_view to_string(WitnessKind kind);
std::optional<WitnessKind> parse_witness_kind(std::string_view name);

// Number of vertices a witness of this kind carries (4, 8, 8, 5).
int witness_size(WitnessKind kind);
bool is_cycle_kind(WitnessKind kind);

// Cycle4/Cycle8: distinct vertices, cyclically consecutive-adjacent, chords
// allowed. InducedP8/InducedP5: distinct vertices, consecutive-adjacent,
// every non-consecutive pair non-adjacent.
struct Witness {
  WitnessKind kind = WitnessKind::kCycle4;
  std::vector<int> vertices;
  bool operator==(const Witness&) const = default;
};

enum class WitnessCheck { kOk, kWrongSize, kOutOfRange, kRepeatedVertex, kMissingEdge, kChord };

std::string_view to_string(WitnessCheck check);

// Independent checker; does not share code with the extractors.
WitnessCheck check_witness(const Graph& g, const Witness& w);
inline bool verify_witness(const Graph& g, const Witness& w) { return check_witness(g, w) == WitnessCheck::kOk; }

struct FoundC4 {
  Witness witness;
};
struct Chordless {
  VertexCycle cycle;
};
using CycleReduction = std::variant<FoundC4, Chordless>;

// Splits `c` at its smallest chord until a 4-cycle appears or no chord is
// left. Each split continues on the shorter side that has at least four
// vertices (ties: the side whose interior holds the smaller vertex).
// Throws std::invalid_argument if `c` is not a cycle of g.
CycleReduction reduce_cycle(const Graph& g, const VertexCycle& c);

// Minimum cut with the CNC relation for a connected, non-complete graph of
// minimum degree >= 3. Also checks that every cut vertex has a neighbour in
// every component (a property of any minimum cut).
// Throws MinDegreeError, DisconnectedError, CompleteGraphError.
CutAnalysis cut_analysis_cnc(const Graph& g);

struct Certificate {
  Witness witness;
  ExtractionTrace trace;
  bool operator==(const Certificate&) const = default;
};

// 4-cycle or induced P5 for a graph with minimum degree >= 3. Disconnected
// inputs are handled on the component of vertex 0.
// Throws MinDegreeError; InternalInvariantError signals a bug.
Certificate p5_witness(const Graph& g);

// 4-cycle, 8-cycle or induced P8 for a graph with minimum degree >= 3.
// Throws MinDegreeError; InternalInvariantError signals a bug.
Certificate eg_witness(const Graph& g);

// Re-checks every adjacency fact recorded in the trace against g.
bool replay_trace(const Graph& g, const ExtractionTrace& trace, std::string* failure = nullptr);

}  // namespace egcert
