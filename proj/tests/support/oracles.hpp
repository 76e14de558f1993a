#pragma once

// Test-side reference implementations. They work on plain adjacency
// matrices and share no code with the library beyond the Graph container.

#include <set>
#include <string>
#include <vector>

#include "egcert/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

Matrix matrix(const egcert::Graph& g);

// Bit-by-bit graph6 decoder for orders < 63: returns the sorted edge list.
std::vector<std::pair<int, int>> decode_graph6_small(const std::string& s, int& n);

// Connected after deleting `removed`?
bool connected_without(const Matrix& m, const std::vector<bool>& removed);

// Smallest separating set: by size, then lexicographically. Empty if none.
std::vector<int> min_cut(const Matrix& m);

// Every cycle length present (simple cycles, each found from its smallest vertex).
std::set<int> cycle_lengths(const Matrix& m);

// Number of vertices in a longest induced path, by subset enumeration.
int longest_induced_path(const Matrix& m);

// Shortest chordless cycle of length >= lo, or 0.
int shortest_hole_at_least(const Matrix& m, int lo);

// Lexicographically smallest upper-triangle column string over all n! orders.
std::string canonical_string(const Matrix& m);

// Canonical strings of all connected graphs on n vertices with minimum degree
// >= d, from every labelled graph (n <= 6).
std::set<std::string> label_and_dedupe(int n, int d);

// K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
egcert::Graph kneser_petersen();

}  // namespace oracle
