#pragma once

#include <json.hpp>  // nlohmann/json, single header

#include "egcert/check.hpp"
#include "egcert/sweep.hpp"
#include "egcert/trace.hpp"
#include "egcert/witness.hpp"

namespace egcert {

using Json = nlohmann::ordered_json;

// {"kind": "Cycle4", "vertices": [...]}
Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);

// {"events": [{"claim", "case", "bind": {label: vertex}, "adj": [[a, b]], "nonadj": [[a, b]]}]}
Json to_json(const ExtractionTrace& t);
ExtractionTrace trace_from_json(const Json& j);

// {"witness": ..., "trace": ...}; the trace is omitted unless requested.
Json to_json(const Certificate& c, bool with_trace);

Json to_json(const CheckOutput& c, bool with_traces);

// Wall time is included only when the sweep was configured with timing.
Json to_json(const SweepReport& r);

}  // namespace egcert
