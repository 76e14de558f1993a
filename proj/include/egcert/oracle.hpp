#pragma once

#include "egcert/graph.hpp"
#include "egcert/witness.hpp"

namespace egcert {

inline constexpr int kMaxOracleOrder = 12;

// Exhaustive existence test over vertex subsets (and, for cycles, their
// cyclic orders). Uses only a plain adjacency matrix; shares no code with
// the detectors or extractors. Throws OrderTooLargeError for n > 12.
bool brute_force_witness_exists(const Graph& g, WitnessKind kind);

}  // namespace egcert
