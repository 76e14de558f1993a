#pragma once

#include <array>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "egcert/errors.hpp"
#include "egcert/witness.hpp"

namespace egcert::detail {

// Thrown once a certificate is in hand; unwinds the proof-step recursion.
struct Resolved {
  Witness witness;
};

// Shared state of one certificate extraction: the graph, the growing trace,
// and the helpers that turn "otherwise X is a cycle/path" into a return.
class Extraction {
 public:
  explicit Extraction(const Graph& g) : g_(g) {}

  const Graph& graph() const { return g_; }
  ExtractionTrace& trace() { return trace_; }

  void step(std::string claim, std::string case_id);

  // Binds `label` in the current event. Rebinding a label to a different
  // vertex inside one event is a bug.
  void bind(const std::string& label, int v);

  // Records u ~ v (or u !~ v) between two labelled vertices after checking it.
  void fact(const std::string& a, int u, const std::string& b, int v, bool adjacent);

  [[noreturn]] void fail(const std::string& what) const;

  // Verifies and returns `w` by unwinding.
  [[noreturn]] void resolve(Witness w);

  // `cycle` is a cycle of g that the current proof step forbids. Lengths 4
  // and 8 are returned as they are; lengths 5 and 6 are reduced to a
  // 4-cycle (a chordless outcome contradicts the minimality of the
  // shortest induced cycle and is reported as a bug).
  [[noreturn]] void resolve_cycle(const std::vector<int>& cycle);

  // The `count` smallest neighbours of `v` outside `excluded`.
  std::vector<int> smallest_neighbours(int v, const VertexSet& excluded, int count) const;

 private:
  TraceEvent& current();

  const Graph& g_;
  ExtractionTrace trace_;
};

// Vertex ids for the proof labels v1..v13 plus trace bookkeeping.
class CycleLabels {
 public:
  static constexpr int kMaxLabel = 13;

  explicit CycleLabels(Extraction& ex) : ex_(ex) { vertex_.fill(-1); }

  int operator[](int label) const;
  void bind(int label, int v);
  void bind_cycle(const std::vector<int>& cycle);

  bool adjacent(int a, int b);

  // The proof asserts v_a !~ v_b because otherwise `cycle` (given as labels)
  // exists; returns that cycle if the adjacency holds.
  void forbid(int a, int b, std::initializer_list<int> cycle);

  // Records v_a !~ v_b, which the preceding choice guarantees.
  void expect_nonadjacent(int a, int b);

  // Smallest `count` neighbours of v_from outside {v_1, ..., v_upto}.
  std::vector<int> pick(int from, int upto, int count);

  // Two neighbours a, b of v_from: returns them ordered so the first is not
  // adjacent to v_target, preferring a. Both adjacent gives the 4-cycle
  // a v_target b v_from.
  std::pair<int, int> prefer_nonadjacent(std::pair<int, int> ab, int from, int target);

  // The pair reordered with the member adjacent to v_target first, or
  // nullopt if neither is adjacent. Both adjacent gives the 4-cycle
  // a v_target b v_from.
  std::optional<std::pair<int, int>> adjacent_first(std::pair<int, int> ab, int from, int target);

  [[noreturn]] void induced_p8(std::initializer_list<int> path);
  std::vector<int> vertices(std::initializer_list<int> labels) const;

  Extraction& extraction() { return ex_; }

 private:
  static std::string name(int label) { return "v" + std::to_string(label); }

  Extraction& ex_;
  std::array<int, kMaxLabel + 1> vertex_{};
};

}  // namespace egcert::detail

namespace egcert::detail {

// Throws MinDegreeError unless every vertex has degree >= 3.
void require_min_degree(const Graph& g);

// Runs `extract` on the component of vertex 0 and maps the certificate
// (witness and trace bindings) back to the vertex ids of g.
template <class Fn>
Certificate on_first_component(const Graph& g, Fn extract) {
  require_min_degree(g);
  const std::vector<VertexSet> comps = components(g);
  if (comps.size() == 1) return extract(g);
  InducedSubgraph sub = induced_subgraph(g, comps.front());
  Certificate cert = extract(sub.graph);
  auto up = [&](int v) { return sub.to_parent[static_cast<std::size_t>(v)]; };
  for (int& v : cert.witness.vertices) v = up(v);
  for (TraceEvent& ev : cert.trace.events)
    for (auto& binding : ev.bind) binding.second = up(binding.second);
  return cert;
}

}  // namespace egcert::detail
