#include "egcert/enumerate.hpp"

#include <algorithm>

#include "egcert/errors.hpp"

namespace egcert {
namespace {

// Column-by-column search over vertex orders. Column j of the string holds
// the bits (0,j), ..., (j-1,j), so it depends only on the first j+1 chosen
// vertices and orders can be compared one column at a time.
class OrderSearch {
 public:
  explicit OrderSearch(const Graph& g) : g_(g), n_(g.order()) {}

  // Smallest string over all orders, with one order that attains it.
  std::pair<std::string, std::vector<int>> minimum() {
    best_.clear();
    best_order_.clear();
    order_.clear();
    used_.assign(static_cast<std::size_t>(n_), false);
    mode_ = Mode::kMinimum;
    current_.clear();
    descend();
    return {best_, best_order_};
  }

  // True iff some order beats the identity order.
  bool beaten() {
    target_ = adjacency_string(g_);
    order_.clear();
    used_.assign(static_cast<std::size_t>(n_), false);
    mode_ = Mode::kBeat;
    current_.clear();
    return descend();
  }

 private:
  enum class Mode { kMinimum, kBeat };

  std::string column(int w) const {
    std::string col;
    for (int u : order_) col.push_back(g_.adjacent(u, w) ? '1' : '0');
    return col;
  }

  // kBeat: returns true once a strictly smaller prefix appears.
  // kMinimum: keeps best_ and prunes prefixes worse than it.
  bool descend() {
    const std::size_t j = order_.size();
    if (static_cast<int>(j) == n_) {
      if (mode_ == Mode::kMinimum && (best_order_.empty() || current_ < best_)) {
        best_ = current_;
        best_order_ = order_;
      }
      return false;
    }
    const std::size_t start = current_.size();
    for (int w = 0; w < n_; ++w) {
      if (used_[static_cast<std::size_t>(w)]) continue;
      const std::string col = column(w);
      if (mode_ == Mode::kBeat) {
        const int cmp = col.compare(target_.substr(start, j));
        if (cmp > 0) continue;
        if (cmp < 0) return true;
      } else if (!best_order_.empty()) {
        const int cmp = col.compare(best_.substr(start, j));
        if (cmp > 0) continue;
        if (cmp < 0) best_order_.clear();  // whole old best is now beaten on this prefix
      }
      current_ += col;
      order_.push_back(w);
      used_[static_cast<std::size_t>(w)] = true;
      const bool hit = descend();
      used_[static_cast<std::size_t>(w)] = false;
      order_.pop_back();
      current_.resize(start);
      if (hit) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  Mode mode_ = Mode::kMinimum;
  std::string target_;
  std::string current_;
  std::string best_;
  std::vector<int> best_order_;
  std::vector<int> order_;
  std::vector<bool> used_;
};

bool can_reach_min_degree(const Graph& g, int n, int min_degree) {
  const int remaining = n - g.order();
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) + remaining < min_degree) return false;
  return true;
}

}  // namespace

std::string adjacency_string(const Graph& g) {
  std::string s;
  s.reserve(static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(std::max(g.order() - 1, 0)) / 2);
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) s.push_back(g.adjacent(i, j) ? '1' : '0');
  return s;
}

std::string canonical_form(const Graph& g) { return OrderSearch(g).minimum().first; }

Graph canonical_graph(const Graph& g) {
  const auto [form, order] = OrderSearch(g).minimum();
  Graph out(g.order());
  for (int j = 0; j < g.order(); ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)])) out.add_edge(i, j);
  return out;
}

bool is_canonical(const Graph& g) { return !OrderSearch(g).beaten(); }

std::vector<Graph> generate_nonisomorphic(int n, int min_degree) {
  if (n > kMaxGeneratedOrder) throw OrderTooLargeError(n, kMaxGeneratedOrder);
  if (n <= 0) return {};

  // Deleting the last vertex of a canonical graph leaves a canonical graph,
  // so every canonical graph on k vertices extends one on k - 1 vertices.
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    for (const Graph& parent : level) {
      const int p = parent.order();
      for (unsigned mask = 0; mask < (1u << p); ++mask) {
        Graph child(k);
        for (const auto& [u, v] : parent.edges()) child.add_edge(u, v);
        for (int i = 0; i < p; ++i)
          if (mask & (1u << i)) child.add_edge(i, p);
        if (!can_reach_min_degree(child, n, min_degree)) continue;
        if (is_canonical(child)) next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }

  std::vector<std::pair<std::string, Graph>> keyed;
  for (Graph& g : level) {
    if (!is_connected(g)) continue;
    if (g.order() > 1 && degree_stats(g).min_degree < min_degree) continue;
    if (g.order() == 1 && min_degree > 0) continue;
    keyed.emplace_back(adjacency_string(g), std::move(g));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

}  // namespace egcert
