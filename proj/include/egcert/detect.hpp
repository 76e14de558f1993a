#pragma once

#include <optional>
#include <set>
#include <vector>

#include "egcert/graph.hpp"

namespace egcert {

struct VertexPath {
  std::vector<int> vertices;
  bool operator==(const VertexPath&) const = default;
};

// Vertices in cyclic order; the edge last->first closes the cycle.
struct VertexCycle {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const VertexCycle&) const = default;
};

// Structural checks used by tests and by the sweep. With `induced` set, all
// non-consecutive pairs must be non-adjacent.
bool is_path(const Graph& g, const VertexPath& p, bool induced);
bool is_cycle(const Graph& g, const VertexCycle& c, bool induced);

// A 4-cycle a-x-b-y where (a, b) is the lexicographically smallest pair
// (a < b) with two common neighbours and x < y are the two smallest of them.
std::optional<VertexCycle> find_c4(const Graph& g);

// Some cycle subgraph (chords allowed) on exactly `length` vertices. The
// search is anchored at the cycle's smallest vertex and returns the
// lexicographically smallest vertex sequence. Returns nullopt when
// length > n. Throws std::invalid_argument when length < 3.
std::optional<VertexCycle> find_cycle_of_length(const Graph& g, int length);

struct InducedPathResult {
  int count = 0;  // number of vertices on `path`
  VertexPath path;
};

// Backtracking over induced paths. Returns the first induced path that
// reaches `stop_at` vertices, otherwise a longest induced path.
InducedPathResult longest_induced_path(const Graph& g, int stop_at);

// True iff g has no induced path on k vertices.
bool is_pk_free(const Graph& g, int k);

// A chordless cycle of minimum length among those with length >= lo; ties
// go to the lexicographically smallest vertex sequence.
std::optional<VertexCycle> shortest_induced_cycle_at_least(const Graph& g, int lo);

// { L : 3 <= L <= max_len, g has a cycle subgraph on L vertices }.
std::set<int> cycle_spectrum(const Graph& g, int max_len);

struct PowerOfTwoCycle {
  int exponent = 0;
  VertexCycle cycle;
};

// Smallest m >= 2 such that g has a 2^m-cycle, with a witness.
std::optional<PowerOfTwoCycle> power_of_two_cycle(const Graph& g);

}  // namespace egcert
