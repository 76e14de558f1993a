#include "egcert/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "egcert/errors.hpp"

namespace egcert {
namespace {

constexpr int kEnumerationLimit = 4;

// Unit-capacity flow network on the vertex-split graph: v_in = 2v, v_out = 2v+1.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, const VertexSet& alive, int s, int t) : head_(2 * static_cast<std::size_t>(g.order()), -1) {
    const int big = g.order() + 1;
    for (int v : alive) add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
    for (int u : alive)
      for (int v : g.neighbors(u) & alive) add_arc(2 * u + 1, 2 * v, big);
    source_ = 2 * s + 1;
    sink_ = 2 * t;
  }

  int max_flow() {
    int flow = 0;
    std::vector<int> parent_arc(head_.size());
    while (true) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::deque<int> queue{source_};
      parent_arc[static_cast<std::size_t>(source_)] = -2;
      while (!queue.empty() && parent_arc[static_cast<std::size_t>(sink_)] == -1) {
        int v = queue.front();
        queue.pop_front();
        for (int a = head_[static_cast<std::size_t>(v)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
          const Arc& arc = arcs_[static_cast<std::size_t>(a)];
          if (arc.cap > 0 && parent_arc[static_cast<std::size_t>(arc.to)] == -1) {
            parent_arc[static_cast<std::size_t>(arc.to)] = a;
            queue.push_back(arc.to);
          }
        }
      }
      if (parent_arc[static_cast<std::size_t>(sink_)] == -1) return flow;
      for (int v = sink_; v != source_;) {
        int a = parent_arc[static_cast<std::size_t>(v)];
        arcs_[static_cast<std::size_t>(a)].cap -= 1;
        arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
        v = arcs_[static_cast<std::size_t>(a ^ 1)].to;
      }
      ++flow;
    }
  }

 private:
  struct Arc {
    int to;
    int cap;
    int next;
  };

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, head_[static_cast<std::size_t>(from)]});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[static_cast<std::size_t>(to)]});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  int source_ = 0;
  int sink_ = 0;
};

bool separates(const Graph& g, const VertexSet& removed) { return components(g, removed).size() >= 2; }

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

bool is_complete_on(const Graph& g, const VertexSet& alive) {
  const int size = alive.count();
  for (int v : alive)
    if ((g.neighbors(v) & alive).count() != size - 1) return false;
  return true;
}

}  // namespace

bool CutAnalysis::is_cnc(int x, std::size_t component) const {
  auto it = std::lower_bound(cut_vertices.begin(), cut_vertices.end(), x);
  if (it == cut_vertices.end() || *it != x || component >= components.size()) return false;
  return cnc[static_cast<std::size_t>(it - cut_vertices.begin())][component];
}

CutAnalysis analyse_cut(const Graph& g, const VertexSet& cut) {
  CutAnalysis out;
  out.cut = cut;
  out.cut_vertices = cut.members();
  out.components = components(g, cut);
  out.component_count = static_cast<int>(out.components.size());
  for (int x : out.cut_vertices) {
    std::vector<bool> row;
    row.reserve(out.components.size());
    for (const auto& d : out.components) row.push_back(d.is_subset_of(g.neighbors(x)));
    out.cnc.push_back(std::move(row));
  }
  return out;
}

CutAnalysis min_vertex_cut(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedError();
  if (is_complete(g)) throw CompleteGraphError();
  std::optional<VertexSet> cut = detail::smallest_cut_by_enumeration(g, kEnumerationLimit);
  if (!cut) cut = detail::smallest_cut_by_flow(g);
  return analyse_cut(g, *cut);
}

int vertex_connectivity(const Graph& g) { return detail::vertex_connectivity(g, g.vertices()); }

namespace detail {

std::optional<VertexSet> smallest_cut_by_enumeration(const Graph& g, int max_size) {
  const int n = g.order();
  for (int k = 1; k <= std::min(max_size, n - 2); ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    do {
      VertexSet s = VertexSet::from_range(n, idx);
      if (separates(g, s)) return s;
    } while (next_combination(idx, n));
  }
  return std::nullopt;
}

int local_vertex_connectivity(const Graph& g, const VertexSet& alive, int s, int t) {
  SplitNetwork net(g, alive, s, t);
  return net.max_flow();
}

int vertex_connectivity(const Graph& g, const VertexSet& alive) {
  const int size = alive.count();
  if (size == 0) return 0;
  if (components(g, g.vertices() - alive).size() > 1) return 0;
  if (is_complete_on(g, alive)) return size - 1;
  int best = std::numeric_limits<int>::max();
  for (int s : alive)
    for (int t : alive - g.neighbors(s)) {
      if (t <= s) continue;
      best = std::min(best, local_vertex_connectivity(g, alive, s, t));
    }
  return best;
}

VertexSet smallest_cut_by_flow(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedError();
  if (is_complete(g)) throw CompleteGraphError();
  const int kappa = vertex_connectivity(g, g.vertices());
  VertexSet chosen(g.order());
  int last = -1;
  // Grow the cut greedily: the next member is the smallest vertex that still
  // extends the chosen prefix to some minimum cut.
  for (int size = 0; size < kappa; ++size) {
    const int need = kappa - size - 1;
    bool extended = false;
    for (int w = last + 1; w < g.order() && !extended; ++w) {
      VertexSet alive = g.vertices() - chosen;
      alive.erase(w);
      bool ok;
      if (need == 0)
        ok = components(g, g.vertices() - alive).size() > 1;
      else
        ok = !is_complete_on(g, alive) && vertex_connectivity(g, alive) == need;
      if (ok) {
        chosen.insert(w);
        last = w;
        extended = true;
      }
    }
    if (!extended) throw std::logic_error("flow cut reconstruction failed");
  }
  return chosen;
}

}  // namespace detail
}  // namespace egcert
