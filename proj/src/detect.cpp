#include "egcert/detect.hpp"

#include <algorithm>
#include <stdexcept>

namespace egcert {
namespace {

// BFS distances to `target` inside the subgraph induced by `allowed`.
std::vector<int> distances_to(const Graph& g, const VertexSet& allowed, int target) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), g.order() + 1);
  dist[static_cast<std::size_t>(target)] = 0;
  std::vector<int> frontier{target};
  VertexSet unseen = allowed;
  unseen.erase(target);
  for (int d = 1; !frontier.empty(); ++d) {
    std::vector<int> next;
    for (int v : frontier)
      for (int w : g.neighbors(v) & unseen) {
        unseen.erase(w);
        dist[static_cast<std::size_t>(w)] = d;
        next.push_back(w);
      }
    frontier = std::move(next);
  }
  return dist;
}

// Depth-first cycle search anchored at the smallest vertex. With `induced`,
// each new vertex may touch only its predecessor (and the anchor when it
// closes the cycle).
class AnchoredCycleSearch {
 public:
  AnchoredCycleSearch(const Graph& g, int length, bool induced) : g_(g), length_(length), induced_(induced) {}

  std::optional<VertexCycle> run() {
    for (int anchor = 0; anchor < g_.order(); ++anchor) {
      allowed_ = g_.vertices();
      for (int v = 0; v < anchor; ++v) allowed_.erase(v);
      if ((g_.neighbors(anchor) & allowed_).count() < 2) continue;
      dist_ = distances_to(g_, allowed_, anchor);
      path_.assign(1, anchor);
      if (extend(g_.empty_set(), VertexSet::of(g_.order(), {anchor}))) return VertexCycle{path_};
    }
    return std::nullopt;
  }

 private:
  // `blocked`: closed neighbourhoods of path vertices other than the anchor
  // and the last vertex (only maintained for induced searches).
  bool extend(const VertexSet& blocked, const VertexSet& on_path) {
    const int j = static_cast<int>(path_.size());
    const int anchor = path_.front();
    const int last = path_.back();
    VertexSet candidates = (g_.neighbors(last) & allowed_) - on_path;
    if (induced_) candidates -= blocked;
    if (j == length_ - 1) {
      candidates &= g_.neighbors(anchor);
    } else if (induced_ && j >= 2) {
      candidates -= g_.neighbors(anchor);
    }
    for (int w : candidates) {
      if (dist_[static_cast<std::size_t>(w)] > length_ - j) continue;
      path_.push_back(w);
      if (j + 1 == length_) return true;
      VertexSet next_blocked = blocked;
      if (induced_ && j >= 2) {
        next_blocked |= g_.neighbors(last);
        next_blocked.insert(last);
      }
      VertexSet next_on_path = on_path;
      next_on_path.insert(w);
      if (extend(next_blocked, next_on_path)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int length_;
  bool induced_;
  VertexSet allowed_;
  std::vector<int> dist_;
  std::vector<int> path_;
};

class InducedPathSearch {
 public:
  InducedPathSearch(const Graph& g, int stop_at) : g_(g), stop_at_(stop_at) {}

  InducedPathResult run() {
    for (int s = 0; s < g_.order() && !done_; ++s) {
      path_.assign(1, s);
      dfs(g_.empty_set());
    }
    return {static_cast<int>(best_.size()), VertexPath{best_}};
  }

 private:
  // `blocked` holds N[p] for every path vertex except the last.
  void dfs(const VertexSet& blocked) {
    const int last = path_.back();
    if (path_.size() > best_.size() && (path_.size() == 1 || path_.front() < last)) {
      best_ = path_;
      if (static_cast<int>(best_.size()) >= stop_at_) {
        done_ = true;
        return;
      }
    }
    VertexSet next_blocked = blocked | g_.neighbors(last);
    next_blocked.insert(last);
    // Every future vertex lies outside next_blocked or in N(last) - blocked.
    VertexSet rest = g_.vertices() - blocked;
    rest.erase(last);
    if (static_cast<int>(path_.size()) + rest.count() <= static_cast<int>(best_.size())) return;
    for (int w : g_.neighbors(last) - blocked) {
      path_.push_back(w);
      dfs(next_blocked);
      path_.pop_back();
      if (done_) return;
    }
  }

  const Graph& g_;
  int stop_at_;
  bool done_ = false;
  std::vector<int> path_;
  std::vector<int> best_;
};

bool distinct_in_range(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= g.order()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (vs[i] == vs[j]) return false;
  }
  return true;
}

}  // namespace

bool is_path(const Graph& g, const VertexPath& p, bool induced) {
  const auto& vs = p.vertices;
  if (vs.empty() || !distinct_in_range(g, vs)) return false;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i)
    if (!g.adjacent(vs[i], vs[i + 1])) return false;
  if (induced)
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 2; j < vs.size(); ++j)
        if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_cycle(const Graph& g, const VertexCycle& c, bool induced) {
  const auto& vs = c.vertices;
  const std::size_t k = vs.size();
  if (k < 3 || !distinct_in_range(g, vs)) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (!g.adjacent(vs[i], vs[(i + 1) % k])) return false;
  if (induced)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 2; j < k; ++j)
        if (!(i == 0 && j == k - 1) && g.adjacent(vs[i], vs[j])) return false;
  return true;
}

std::optional<VertexCycle> find_c4(const Graph& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b) {
      VertexSet common = g.neighbors(a) & g.neighbors(b);
      int x = common.first();
      if (x < 0) continue;
      int y = common.next(x);
      if (y >= 0) return VertexCycle{{a, x, b, y}};
    }
  return std::nullopt;
}

std::optional<VertexCycle> find_cycle_of_length(const Graph& g, int length) {
  if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (length > g.order()) return std::nullopt;
  return AnchoredCycleSearch(g, length, false).run();
}

InducedPathResult longest_induced_path(const Graph& g, int stop_at) {
  if (stop_at < 1) throw std::invalid_argument("stop_at must be at least 1");
  return InducedPathSearch(g, stop_at).run();
}

bool is_pk_free(const Graph& g, int k) { return longest_induced_path(g, k).count < k; }

std::optional<VertexCycle> shortest_induced_cycle_at_least(const Graph& g, int lo) {
  if (lo < 3) throw std::invalid_argument("lower bound must be at least 3");
  for (int k = lo; k <= g.order(); ++k)
    if (auto c = AnchoredCycleSearch(g, k, true).run()) return c;
  return std::nullopt;
}

std::set<int> cycle_spectrum(const Graph& g, int max_len) {
  std::set<int> out;
  for (int len = 3; len <= std::min(max_len, g.order()); ++len)
    if (find_cycle_of_length(g, len)) out.insert(len);
  return out;
}

std::optional<PowerOfTwoCycle> power_of_two_cycle(const Graph& g) {
  for (int m = 2; (1 << m) <= g.order(); ++m)
    if (auto c = find_cycle_of_length(g, 1 << m)) return PowerOfTwoCycle{m, std::move(*c)};
  return std::nullopt;
}

}  // namespace egcert
