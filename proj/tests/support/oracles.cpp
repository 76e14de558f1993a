#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

Matrix matrix(const egcert::Graph& g) {
  const int n = g.order();
  Matrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v)) m[u][v] = 1;
  return m;
}

std::vector<std::pair<int, int>> decode_graph6_small(const std::string& s, int& n) {
  n = s[0] - 63;
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int x = s[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((x >> b) & 1);
  }
  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (bits.at(k)) edges.emplace_back(i, j);
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool connected_without(const Matrix& m, const std::vector<bool>& removed) {
  const int n = static_cast<int>(m.size());
  int start = -1;
  int alive = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (m[v][w] && !removed[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == alive;
}

std::vector<int> min_cut(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  for (int k = 1; k <= n - 2; ++k) {
    std::vector<bool> select(n, false);
    std::fill(select.begin(), select.begin() + k, true);
    do {
      if (!connected_without(m, select)) {
        std::vector<int> cut;
        for (int v = 0; v < n; ++v)
          if (select[v]) cut.push_back(v);
        return cut;
      }
    } while (std::prev_permutation(select.begin(), select.end()));
  }
  return {};
}

std::set<int> cycle_lengths(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::set<int> out;
  std::vector<bool> on(n, false);
  std::function<void(int, int, int)> walk = [&](int start, int v, int len) {
    for (int w = start; w < n; ++w) {
      if (!m[v][w]) continue;
      if (w == start && len >= 3) out.insert(len);
      if (w > start && !on[w]) {
        on[w] = true;
        walk(start, w, len + 1);
        on[w] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    on[s] = true;
    walk(s, s, 1);
    on[s] = false;
  }
  return out;
}

namespace {

bool induces_path(const Matrix& m, const std::vector<int>& s) {
  int edges = 0;
  for (int a : s) {
    int deg = 0;
    for (int b : s) deg += m[a][b];
    if (deg > 2) return false;
    edges += deg;
  }
  if (edges / 2 != static_cast<int>(s.size()) - 1) return false;
  std::vector<bool> removed(m.size(), true);
  for (int v : s) removed[v] = false;
  return connected_without(m, removed);
}

bool induces_cycle(const Matrix& m, const std::vector<int>& s) {
  for (int a : s) {
    int deg = 0;
    for (int b : s) deg += m[a][b];
    if (deg != 2) return false;
  }
  std::vector<bool> removed(m.size(), true);
  for (int v : s) removed[v] = false;
  return connected_without(m, removed);
}

template <class Fn>
bool any_subset(int n, int k, Fn fn) {
  std::vector<bool> select(n, false);
  std::fill(select.begin(), select.begin() + k, true);
  do {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (select[v]) s.push_back(v);
    if (fn(s)) return true;
  } while (std::prev_permutation(select.begin(), select.end()));
  return false;
}

}  // namespace

int longest_induced_path(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  for (int k = n; k >= 1; --k)
    if (any_subset(n, k, [&](const std::vector<int>& s) { return induces_path(m, s); })) return k;
  return 0;
}

int shortest_hole_at_least(const Matrix& m, int lo) {
  const int n = static_cast<int>(m.size());
  for (int k = lo; k <= n; ++k)
    if (any_subset(n, k, [&](const std::vector<int>& s) { return induces_cycle(m, s); })) return k;
  return 0;
}

std::string canonical_string(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) s.push_back(m[p[i]][p[j]] ? '1' : '0');
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

std::set<std::string> label_and_dedupe(int n, int d) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::set<std::string> out;
  for (unsigned long mask = 0; mask < (1ul << pairs.size()); ++mask) {
    Matrix m(n, std::vector<int>(n, 0));
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1) m[pairs[e].first][pairs[e].second] = m[pairs[e].second][pairs[e].first] = 1;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = std::accumulate(m[v].begin(), m[v].end(), 0) >= d;
    if (!ok || !connected_without(m, std::vector<bool>(n, false))) continue;
    out.insert(canonical_string(m));
  }
  return out;
}

egcert::Graph kneser_petersen() {
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  egcert::Graph g(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      const auto [a, b] = subsets[i];
      const auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
    }
  return g;
}

}  // namespace oracle
