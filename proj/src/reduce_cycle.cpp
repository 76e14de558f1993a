#include <algorithm>
#include <limits>
#include <stdexcept>

#include "egcert/witness.hpp"

namespace egcert {
namespace {

struct Side {
  std::vector<int> vertices;
  int smallest_interior = std::numeric_limits<int>::max();
};

// Vertices cur[from], cur[from+1], ..., cur[to] walking forward cyclically.
Side arc(const std::vector<int>& cur, std::size_t from, std::size_t to) {
  Side s;
  const std::size_t k = cur.size();
  for (std::size_t i = from;; i = (i + 1) % k) {
    s.vertices.push_back(cur[i]);
    if (i == to) break;
  }
  for (std::size_t i = 1; i + 1 < s.vertices.size(); ++i) s.smallest_interior = std::min(s.smallest_interior, s.vertices[i]);
  return s;
}

}  // namespace

CycleReduction reduce_cycle(const Graph& g, const VertexCycle& c) {
  if (!is_cycle(g, c, false)) throw std::invalid_argument("reduce_cycle: input is not a cycle of the graph");
  std::vector<int> cur = c.vertices;
  while (true) {
    const std::size_t k = cur.size();
    if (k == 4) return FoundC4{Witness{WitnessKind::kCycle4, cur}};

    // Smallest chord by (min endpoint, max endpoint).
    std::size_t p = k;
    std::size_t q = k;
    std::pair<int, int> best{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 2; j < k; ++j) {
        if (i == 0 && j == k - 1) continue;
        if (!g.adjacent(cur[i], cur[j])) continue;
        std::pair<int, int> key{std::min(cur[i], cur[j]), std::max(cur[i], cur[j])};
        if (key < best) {
          best = key;
          p = i;
          q = j;
        }
      }
    if (p == k) return Chordless{VertexCycle{cur}};

    Side first = arc(cur, p, q);
    Side second = arc(cur, q, p);
    std::vector<Side*> usable;
    for (Side* s : {&first, &second})
      if (s->vertices.size() >= 4) usable.push_back(s);
    std::sort(usable.begin(), usable.end(), [](const Side* a, const Side* b) {
      if (a->vertices.size() != b->vertices.size()) return a->vertices.size() < b->vertices.size();
      return a->smallest_interior < b->smallest_interior;
    });
    cur = usable.front()->vertices;
  }
}

}  // namespace egcert
