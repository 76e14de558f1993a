#pragma once

#include <vector>

#include "egcert/graph.hpp"

namespace support {

// Subgraph left after repeatedly deleting vertices of degree < k.
egcert::Graph k_core(const egcert::Graph& g, int k);

// Each edge replaced by a path of length 2.
egcert::Graph subdivide(const egcert::Graph& g);

egcert::Graph line_graph(const egcert::Graph& g);

// Seeded C4-free graphs of minimum degree >= 3 (none exist below 10
// vertices): Petersen, Heawood, maximal C4-free graphs, and 3-cores of
// maximal graphs avoiding {4,5} and {4,5,6} (shortest holes 6 and 7), and
// line graphs of subdivided K4, K3,3, Petersen and Heawood (shortest holes
// 6, 8, 10, 12).
std::vector<egcert::Graph> c4_free_family();

}  // namespace support
