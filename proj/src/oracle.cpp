#include "egcert/oracle.hpp"

#include <algorithm>

#include "egcert/errors.hpp"

namespace egcert {
namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix matrix_of(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  Matrix m(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : g.edges()) {
    m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  return m;
}

bool adj(const Matrix& m, int u, int v) { return m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != 0; }

// Some cyclic order of `s` is a cycle. The first vertex stays fixed.
bool has_hamiltonian_cycle(const Matrix& m, std::vector<int> s) {
  do {
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i) ok = adj(m, s[i], s[(i + 1) % s.size()]);
    if (ok) return true;
  } while (std::next_permutation(s.begin() + 1, s.end()));
  return false;
}

// G[s] is a path: |s| - 1 edges, maximum degree <= 2, connected.
bool induces_path(const Matrix& m, const std::vector<int>& s) {
  const std::size_t k = s.size();
  std::size_t edges = 0;
  for (std::size_t i = 0; i < k; ++i) {
    int deg = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && adj(m, s[i], s[j])) ++deg;
    if (deg > 2) return false;
    edges += static_cast<std::size_t>(deg);
  }
  if (edges / 2 != k - 1) return false;
  std::vector<bool> seen(k, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < k; ++j)
      if (!seen[j] && adj(m, s[i], s[j])) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
  }
  return reached == k;
}

}  // namespace

bool brute_force_witness_exists(const Graph& g, WitnessKind kind) {
  const int n = g.order();
  if (n > kMaxOracleOrder) throw OrderTooLargeError(n, kMaxOracleOrder);
  const int k = witness_size(kind);
  if (k > n) return false;
  const Matrix m = matrix_of(g);
  const bool cycle = is_cycle_kind(kind);

  // Subsets of size k in lexicographic order via a selection mask.
  std::vector<char> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  do {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (pick[static_cast<std::size_t>(v)]) s.push_back(v);
    if (cycle ? has_hamiltonian_cycle(m, s) : induces_path(m, s)) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

}  // namespace egcert
