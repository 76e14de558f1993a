#include "egcert/random_graphs.hpp"

#include <algorithm>
#include <stdexcept>

namespace egcert {
namespace {

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

// True if u-a-b-v exists, i.e. adding uv would close a 4-cycle.
bool has_path_of_length_three(const Graph& g, int u, int v) {
  for (int a : g.neighbors(u)) {
    if (a == v) continue;
    VertexSet far = g.neighbors(a) & g.neighbors(v);
    far.erase(u);
    if (!far.empty()) return true;
  }
  return false;
}

void connect_components(Graph& g, Rng& rng) {
  std::vector<VertexSet> comps = components(g);
  for (std::size_t i = 1; i < comps.size(); ++i) {
    const std::vector<int> a = comps[i - 1].members();
    const std::vector<int> b = comps[i].members();
    std::uniform_int_distribution<std::size_t> pa(0, a.size() - 1);
    std::uniform_int_distribution<std::size_t> pb(0, b.size() - 1);
    g.add_edge(a[pa(rng)], b[pb(rng)]);
  }
}

void raise_min_degree(Graph& g, int min_degree, Rng& rng) {
  for (int v = 0; v < g.order(); ++v) {
    while (g.degree(v) < min_degree) {
      std::vector<int> options = (g.vertices() - g.neighbors(v)).members();
      options.erase(std::remove(options.begin(), options.end(), v), options.end());
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      g.add_edge(v, options[pick(rng)]);
    }
  }
}

}  // namespace

Graph random_gnp(int n, double p, Rng& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (const auto& [u, v] : all_pairs(n))
    if (coin(rng)) g.add_edge(u, v);
  return g;
}

Graph random_min_degree_graph(int n, int min_degree, double p, Rng& rng) {
  if (n <= min_degree) throw std::invalid_argument("order must exceed the minimum degree");
  Graph g = random_gnp(n, p, rng);
  raise_min_degree(g, min_degree, rng);
  connect_components(g, rng);
  return g;
}

Graph random_maximal_c4_free(int n, Rng& rng) {
  Graph g(n);
  std::vector<Edge> pairs = all_pairs(n);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (const auto& [u, v] : pairs)
    if (!has_path_of_length_three(g, u, v)) g.add_edge(u, v);
  return g;
}

Graph random_avoiding_cycles(int n, const std::vector<int>& lengths, int max_degree, Rng& rng) {
  int longest = 0;
  for (int len : lengths) longest = std::max(longest, len);
  std::vector<bool> banned(static_cast<std::size_t>(longest) + 1, false);
  for (int len : lengths) banned[static_cast<std::size_t>(len)] = true;

  Graph g(n);
  std::vector<Edge> pairs = all_pairs(n);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (const auto& [u, v] : pairs) {
    if (g.degree(u) >= max_degree || g.degree(v) >= max_degree) continue;
    // Adding uv closes a cycle of length L + 1 for every u-v path of length L.
    bool closes = false;
    VertexSet on_path = VertexSet::of(n, {u});
    auto dfs = [&](auto&& self, int last, int len) -> void {
      for (int w : g.neighbors(last) - on_path) {
        if (closes) return;
        if (w == v) {
          if (len + 2 <= longest && banned[static_cast<std::size_t>(len + 2)]) closes = true;
          continue;
        }
        if (len + 3 > longest) continue;
        on_path.insert(w);
        self(self, w, len + 1);
        on_path.erase(w);
      }
    };
    dfs(dfs, u, 0);
    if (!closes) g.add_edge(u, v);
  }
  return g;
}

Graph random_cubic(int n, Rng& rng) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("cubic graphs need an even order >= 4");
  while (true) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < 3; ++k) points.push_back(v);
    std::shuffle(points.begin(), points.end(), rng);
    Graph g(n);
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      const int u = points[i];
      const int v = points[i + 1];
      if (u == v || g.adjacent(u, v)) simple = false;
      else g.add_edge(u, v);
    }
    if (simple) return g;
  }
}

Graph random_test_graph(std::uint64_t seed, int max_order) {
  Rng rng(seed);
  std::uniform_int_distribution<int> order(4, max_order);
  switch (seed % 3) {
    case 0: {
      const int n = order(rng);
      std::uniform_real_distribution<double> p(0.05, 0.6);
      return random_min_degree_graph(n, 3, p(rng), rng);
    }
    case 1: {
      // Maximal C4-free graphs often have a vertex of degree < 3; those
      // vertices get extra edges, which may close 4-cycles again.
      const int n = std::max(order(rng), 5);
      Graph g = random_maximal_c4_free(n, rng);
      raise_min_degree(g, 3, rng);
      connect_components(g, rng);
      return g;
    }
    default: {
      int n = order(rng);
      if (n % 2 != 0) --n;
      Graph g = random_cubic(n, rng);
      connect_components(g, rng);
      return g;
    }
  }
}

}  // namespace egcert
