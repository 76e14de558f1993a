#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "egcert/graph.hpp"

namespace egcert {

// A minimum vertex cut S together with the components of G - S and the
// complete-neighbourhood-component (CNC) relation: component D is a CNC of
// x in S iff x is adjacent to every vertex of D.
struct CutAnalysis {
  VertexSet cut;
  std::vector<int> cut_vertices;        // members of `cut`, ascending
  std::vector<VertexSet> components;    // components of G - S, by smallest member
  int component_count = 0;              // c(G - S)
  std::vector<std::vector<bool>> cnc;   // cnc[i][d]: component d is a CNC of cut_vertices[i]

  bool is_cnc(int x, std::size_t component) const;
  int connectivity() const { return static_cast<int>(cut_vertices.size()); }
};

// Minimum vertex cut, ties broken by the lexicographically smallest sorted
// vertex list. Cuts of size <= 4 are found by subset enumeration, larger
// ones through vertex-split max-flow.
// Throws DisconnectedError or CompleteGraphError.
CutAnalysis min_vertex_cut(const Graph& g);

// kappa(G): 0 for disconnected graphs, n-1 for complete graphs.
int vertex_connectivity(const Graph& g);

// Fills components and the CNC relation for an arbitrary separating set.
CutAnalysis analyse_cut(const Graph& g, const VertexSet& cut);

namespace detail {

// Lexicographically smallest disconnecting set of size <= max_size, if any.
std::optional<VertexSet> smallest_cut_by_enumeration(const Graph& g, int max_size);

// Lexicographically smallest minimum cut computed with max-flow only.
VertexSet smallest_cut_by_flow(const Graph& g);

// Maximum number of internally disjoint s-t paths inside G[alive]
// (s and t non-adjacent).
int local_vertex_connectivity(const Graph& g, const VertexSet& alive, int s, int t);

// kappa(G[alive]) via max-flow.
int vertex_connectivity(const Graph& g, const VertexSet& alive);

}  // namespace detail
}  // namespace egcert
