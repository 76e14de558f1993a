#pragma once

#include <string>
#include <utility>
#include <vector>

namespace egcert {

// One proof step: which claim/case was entered, the labelled vertices it
// binds, and the adjacency facts it relies on (stated over the labels).
struct TraceEvent {
  std::string claim;
  std::string case_id;
  std::vector<std::pair<std::string, int>> bind;
  std::vector<std::pair<std::string, std::string>> adjacent;
  std::vector<std::pair<std::string, std::string>> nonadjacent;

  // Vertex bound to `label` in this event, or -1.
  int lookup(const std::string& label) const {
    for (const auto& [name, v] : bind)
      if (name == label) return v;
    return -1;
  }
  bool operator==(const TraceEvent&) const = default;
};

struct ExtractionTrace {
  std::vector<TraceEvent> events;
  bool operator==(const ExtractionTrace&) const = default;
};

}  // namespace egcert
