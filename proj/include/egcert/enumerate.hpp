#pragma once

#include <functional>
#include <string>
#include <vector>

#include "egcert/graph.hpp"

namespace egcert {

// Largest order generate_nonisomorphic accepts; bigger orders come in as
// graph6 streams from an external generator.
inline constexpr int kMaxGeneratedOrder = 9;

// Upper-triangle adjacency bits in column order (0,1), (0,2), (1,2), (0,3), ...
// as a '0'/'1' string. This is the order graph6 uses.
std::string adjacency_string(const Graph& g);

// Lexicographically smallest adjacency_string over all vertex permutations.
std::string canonical_form(const Graph& g);

// g relabelled so its adjacency_string is canonical_form(g).
Graph canonical_graph(const Graph& g);

// True iff adjacency_string(g) == canonical_form(g).
bool is_canonical(const Graph& g);

// One representative per isomorphism class of connected graphs on n vertices
// with minimum degree >= min_degree, each in canonical labelling, sorted by
// canonical form. Throws OrderTooLargeError for n > kMaxGeneratedOrder.
std::vector<Graph> generate_nonisomorphic(int n, int min_degree);

}  // namespace egcert
