#include "egcert/families.hpp"

namespace egcert::families {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph heawood() {
  // Points 0..6, lines 7..13; line j holds points {j, j+1, j+3} mod 7.
  Graph g(14);
  for (int j = 0; j < 7; ++j)
    for (int d : {0, 1, 3}) g.add_edge((j + d) % 7, 7 + j);
  return g;
}

Graph two_k4_sharing_vertex() {
  Graph g(7);
  const int blocks[2][4] = {{0, 1, 2, 3}, {0, 4, 5, 6}};
  for (const auto& b : blocks)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) g.add_edge(b[i], b[j]);
  return g;
}

}  // namespace egcert::families
