#include "egcert/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace egcert {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range for n=" +
                                std::to_string(n_));
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) return;
  adj_[static_cast<std::size_t>(u)].insert(v);
  adj_[static_cast<std::size_t>(v)].insert(u);
  ++edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v = neighbors(u).next(u); v >= 0; v = neighbors(u).next(v)) out.emplace_back(u, v);
  return out;
}

void validate(const Graph& g) {
  std::size_t degree_sum = 0;
  for (int u = 0; u < g.order(); ++u) {
    if (g.neighbors(u).universe() != g.order()) throw std::logic_error("neighbor set universe mismatch");
    if (g.adjacent(u, u)) throw std::logic_error("loop at vertex " + std::to_string(u));
    for (int v : g.neighbors(u))
      if (!g.adjacent(v, u)) throw std::logic_error("asymmetric adjacency " + std::to_string(u) + "-" + std::to_string(v));
    degree_sum += static_cast<std::size_t>(g.degree(u));
  }
  if (degree_sum != 2 * g.size()) throw std::logic_error("edge count does not match degree sum");
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  for (int v = 0; v < g.order(); ++v) s.degree_sequence.push_back(g.degree(v));
  std::sort(s.degree_sequence.begin(), s.degree_sequence.end());
  if (!s.degree_sequence.empty()) {
    s.min_degree = s.degree_sequence.front();
    s.max_degree = s.degree_sequence.back();
  }
  return s;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices() - removed;
  std::vector<int> stack;
  for (int root = unseen.first(); root >= 0; root = unseen.first()) {
    VertexSet comp(g.order());
    comp.insert(root);
    unseen.erase(root);
    stack.assign(1, root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v) & unseen) {
        unseen.erase(w);
        comp.insert(w);
        stack.push_back(w);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.empty_set()); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_complete(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != g.order() - 1) return false;
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_parent = s.members();
  std::vector<int> to_child(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) to_child[static_cast<std::size_t>(out.to_parent[i])] = static_cast<int>(i);
  out.graph = Graph(static_cast<int>(out.to_parent.size()));
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    int u = out.to_parent[i];
    for (int v : g.neighbors(u) & s)
      if (v > u) out.graph.add_edge(static_cast<int>(i), to_child[static_cast<std::size_t>(v)]);
  }
  return out;
}

}  // namespace egcert
