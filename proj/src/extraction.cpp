#include "extraction.hpp"

#include <algorithm>

namespace egcert::detail {

void Extraction::step(std::string claim, std::string case_id) {
  TraceEvent ev;
  ev.claim = std::move(claim);
  ev.case_id = std::move(case_id);
  trace_.events.push_back(std::move(ev));
}

TraceEvent& Extraction::current() {
  if (trace_.events.empty()) step("Setup", "start");
  return trace_.events.back();
}

void Extraction::bind(const std::string& label, int v) {
  TraceEvent& ev = current();
  const int old = ev.lookup(label);
  if (old == v) return;
  if (old >= 0) fail("label " + label + " rebound inside one step");
  ev.bind.emplace_back(label, v);
}

void Extraction::fact(const std::string& a, int u, const std::string& b, int v, bool adjacent) {
  if (g_.adjacent(u, v) != adjacent)
    fail("recorded fact " + a + (adjacent ? " ~ " : " !~ ") + b + " does not hold");
  bind(a, u);
  bind(b, v);
  TraceEvent& ev = current();
  (adjacent ? ev.adjacent : ev.nonadjacent).emplace_back(a, b);
}

void Extraction::fail(const std::string& what) const {
  throw InternalInvariantError(what, trace_);
}

void Extraction::resolve(Witness w) {
  const WitnessCheck check = check_witness(g_, w);
  if (check != WitnessCheck::kOk)
    fail("extracted " + std::string(to_string(w.kind)) + " fails verification (" + std::string(to_string(check)) + ")");
  throw Resolved{std::move(w)};
}

void Extraction::resolve_cycle(const std::vector<int>& cycle) {
  if (cycle.size() == 4) resolve(Witness{WitnessKind::kCycle4, cycle});
  if (cycle.size() == 8) resolve(Witness{WitnessKind::kCycle8, cycle});
  if (!is_cycle(g_, VertexCycle{cycle}, false)) fail("forbidden configuration is not a cycle");
  CycleReduction r = reduce_cycle(g_, VertexCycle{cycle});
  if (auto* c4 = std::get_if<FoundC4>(&r)) resolve(c4->witness);
  fail("chordless " + std::to_string(cycle.size()) + "-cycle shorter than the shortest induced cycle");
}

std::vector<int> Extraction::smallest_neighbours(int v, const VertexSet& excluded, int count) const {
  std::vector<int> out;
  for (int w : g_.neighbors(v) - excluded) {
    if (static_cast<int>(out.size()) == count) break;
    out.push_back(w);
  }
  return out;
}

int CycleLabels::operator[](int label) const {
  const int v = vertex_.at(static_cast<std::size_t>(label));
  if (v < 0) ex_.fail("label v" + std::to_string(label) + " used before it was bound");
  return v;
}

void CycleLabels::bind(int label, int v) {
  vertex_.at(static_cast<std::size_t>(label)) = v;
  ex_.bind(name(label), v);
}

void CycleLabels::bind_cycle(const std::vector<int>& cycle) {
  for (std::size_t i = 0; i < cycle.size(); ++i) bind(static_cast<int>(i) + 1, cycle[i]);
}

bool CycleLabels::adjacent(int a, int b) {
  const bool adj = ex_.graph().adjacent((*this)[a], (*this)[b]);
  ex_.fact(name(a), (*this)[a], name(b), (*this)[b], adj);
  return adj;
}

void CycleLabels::forbid(int a, int b, std::initializer_list<int> cycle) {
  if (adjacent(a, b)) ex_.resolve_cycle(vertices(cycle));
}

void CycleLabels::expect_nonadjacent(int a, int b) {
  if (adjacent(a, b)) ex_.fail(name(a) + " ~ " + name(b) + " after a choice that excludes it");
}

std::vector<int> CycleLabels::pick(int from, int upto, int count) {
  VertexSet excluded = ex_.graph().empty_set();
  for (int i = 1; i <= upto; ++i) excluded.insert((*this)[i]);
  std::vector<int> out = ex_.smallest_neighbours((*this)[from], excluded, count);
  if (static_cast<int>(out.size()) < count)
    ex_.fail(name(from) + " has fewer than " + std::to_string(count) + " neighbours outside v1..v" +
             std::to_string(upto));
  return out;
}

std::pair<int, int> CycleLabels::prefer_nonadjacent(std::pair<int, int> ab, int from, int target) {
  const Graph& g = ex_.graph();
  const auto [a, b] = ab;
  if (!g.adjacent(a, (*this)[target])) return {a, b};
  if (!g.adjacent(b, (*this)[target])) return {b, a};
  ex_.resolve_cycle({a, (*this)[target], b, (*this)[from]});
}

std::optional<std::pair<int, int>> CycleLabels::adjacent_first(std::pair<int, int> ab, int from, int target) {
  const Graph& g = ex_.graph();
  const auto [a, b] = ab;
  const bool adj_a = g.adjacent(a, (*this)[target]);
  const bool adj_b = g.adjacent(b, (*this)[target]);
  if (adj_a && adj_b) ex_.resolve_cycle({a, (*this)[target], b, (*this)[from]});
  if (adj_a) return std::pair{a, b};
  if (adj_b) return std::pair{b, a};
  return std::nullopt;
}

void CycleLabels::induced_p8(std::initializer_list<int> path) {
  ex_.resolve(Witness{WitnessKind::kInducedP8, vertices(path)});
}

std::vector<int> CycleLabels::vertices(std::initializer_list<int> labels) const {
  std::vector<int> out;
  out.reserve(labels.size());
  for (int l : labels) out.push_back((*this)[l]);
  return out;
}

}  // namespace egcert::detail

namespace egcert::detail {

void require_min_degree(const Graph& g) {
  if (g.order() == 0) throw MinDegreeError();
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) < 3) throw MinDegreeError(v, g.degree(v));
}

}  // namespace egcert::detail
