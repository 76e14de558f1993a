#pragma once

#include "egcert/graph.hpp"

namespace egcert::families {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete_bipartite(int a, int b);

// Kneser graph K(5,2): outer ring 0..4, spokes i-(i+5), inner pentagram.
Graph petersen();

// Incidence graph of the Fano plane; cubic, girth 6, 14 vertices.
Graph heawood();

// Two copies of K4 glued at vertex 0.
Graph two_k4_sharing_vertex();

}  // namespace egcert::families
