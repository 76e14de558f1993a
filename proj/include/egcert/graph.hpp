#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "egcert/vertex_set.hpp"

namespace egcert {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }

  // Adds u-v. Throws std::invalid_argument on a loop or out-of-range vertex;
  // adding an existing edge is a no-op.
  void add_edge(int u, int v);

  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  // All edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<VertexSet> adj_;
};

// Throws std::logic_error when symmetry, loop-freeness or the cached edge
// count is broken.
void validate(const Graph& g);

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  std::vector<int> degree_sequence;  // ascending
};

// For n = 0 the sequence is empty and both extremes are 0.
DegreeStats degree_stats(const Graph& g);

// Connected components of g - removed, each listed in order of its smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  // new index -> original vertex
};

// G[s], relabelled in increasing order of original index.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace egcert
