// Certificate extraction for "minimum degree >= 3 and P5-free implies C4":
// every step that the argument closes by contradiction returns the 4-cycle
// or induced P5 it exhibits.

#include <algorithm>
#include <deque>

#include "extraction.hpp"

namespace egcert {
namespace {

using detail::Extraction;

class P5Extraction {
 public:
  explicit P5Extraction(const Graph& g) : g_(g), ex_(g) {}

  Certificate run() {
    try {
      extract();
    } catch (detail::Resolved& r) {
      return Certificate{std::move(r.witness), std::move(ex_.trace())};
    }
    ex_.fail("extraction ended without a witness");
  }

 private:
  void extract() {
    ex_.step("Setup", "C4");
    if (auto c = find_c4(g_)) ex_.resolve(Witness{WitnessKind::kCycle4, c->vertices});
    if (is_complete(g_)) ex_.fail("complete component without a 4-cycle");
    cut_ = cut_analysis_cnc(g_);

    two_non_cncs();
    const auto [x, y] = nonadjacent_pair();
    x_ = x;
    y_ = y;
    common_cncs();
    if (cut_.component_count >= 4) ex_.fail("four or more components without two common CNCs");
    if (cut_.component_count == 3) three_components();
    two_components();
  }

  // Some x in S with two components that are not complete to x.
  void two_non_cncs() {
    for (int x : cut_.cut_vertices) {
      std::vector<std::size_t> non;
      for (std::size_t d = 0; d < cut_.components.size(); ++d)
        if (!cut_.is_cnc(x, d)) non.push_back(d);
      if (non.size() < 2) continue;
      ex_.step("Claim1.ii", "two_non_cnc");
      ex_.bind("x", x);
      const auto [u1, x1, pred1] = nearest_neighbour_path(x, cut_.components[non[0]]);
      const auto [u2, x2, pred2] = nearest_neighbour_path(x, cut_.components[non[1]]);
      ex_.bind("u1", u1);
      ex_.bind("u2", u2);
      ex_.fact("x1", x1, "x", x, true);
      ex_.fact("x2", x2, "x", x, true);
      ex_.resolve(Witness{WitnessKind::kInducedP5, {pred1, x1, x, x2, pred2}});
    }
  }

  struct NearestPath {
    int start;
    int end;
    int before_end;
  };

  // BFS inside `d` from its smallest non-neighbour of x to the nearest
  // neighbour of x; returns that neighbour and its predecessor.
  NearestPath nearest_neighbour_path(int x, const VertexSet& d) {
    const int u = (d - g_.neighbors(x)).first();
    if (u < 0) ex_.fail("non-CNC without a non-neighbour");
    std::vector<int> parent(static_cast<std::size_t>(g_.order()), -1);
    VertexSet seen = VertexSet::of(g_.order(), {u});
    std::deque<int> queue{u};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : (g_.neighbors(v) & d) - seen) {
        seen.insert(w);
        parent[static_cast<std::size_t>(w)] = v;
        if (g_.adjacent(w, x)) return {u, w, v};
        queue.push_back(w);
      }
    }
    ex_.fail("component without a neighbour of the cut vertex");
  }

  std::pair<int, int> nonadjacent_pair() {
    const int x = cut_.cut_vertices.front();
    std::size_t di = cut_.components.size();
    for (std::size_t d = 0; d < cut_.components.size(); ++d)
      if (cut_.is_cnc(x, d)) {
        di = d;
        break;
      }
    if (di == cut_.components.size()) ex_.fail("cut vertex without a CNC");
    const VertexSet& d = cut_.components[di];

    if (d.count() >= 3) {
      ex_.step("Claim1.iii", "large_cnc");
      ex_.bind("x", x);
      // A connected graph on >= 3 vertices has a vertex with two neighbours.
      for (int b : d) {
        VertexSet nb = g_.neighbors(b) & d;
        if (nb.count() < 2) continue;
        const int a = nb.first();
        const int c = nb.next(a);
        ex_.resolve(Witness{WitnessKind::kCycle4, {x, a, b, c}});
      }
      ex_.fail("connected component of order >= 3 without a path on three vertices");
    }

    ex_.step("Claim1.viii", "choose_xy");
    const int u = d.first();
    ex_.bind("x", x);
    ex_.bind("u", u);
    const std::vector<int> s_nbrs = (g_.neighbors(u) & cut_.cut).members();
    if (s_nbrs.size() >= 3) {
      for (std::size_t i = 0; i < s_nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < s_nbrs.size(); ++j)
          if (!g_.adjacent(s_nbrs[i], s_nbrs[j])) {
            ex_.step("Claim1.viii", "three_cut_neighbours");
            ex_.fact("x", s_nbrs[i], "y", s_nbrs[j], false);
            ex_.fact("u", u, "x", s_nbrs[i], true);
            ex_.fact("u", u, "y", s_nbrs[j], true);
            return {s_nbrs[i], s_nbrs[j]};
          }
      ex_.resolve(Witness{WitnessKind::kCycle4, {s_nbrs[0], s_nbrs[1], u, s_nbrs[2]}});
    }
    if (d.count() != 2) ex_.fail("singleton CNC whose vertex has fewer than three neighbours in S");
    const int v = d.next(u);
    ex_.fact("u", u, "v", v, true);
    int y = -1;
    for (int s : s_nbrs)
      if (s != x) {
        y = s;
        break;
      }
    if (y < 0) ex_.fail("CNC vertex without a second neighbour in S");
    if (g_.adjacent(x, y)) ex_.resolve(Witness{WitnessKind::kCycle4, {y, u, v, x}});
    ex_.fact("x", x, "y", y, false);
    return {x, y};
  }

  std::vector<std::size_t> common() const {
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < cut_.components.size(); ++d)
      if (cut_.is_cnc(x_, d) && cut_.is_cnc(y_, d)) out.push_back(d);
    return out;
  }

  void common_cncs() {
    const std::vector<std::size_t> shared = common();
    for (std::size_t d : shared) {
      const VertexSet& comp = cut_.components[d];
      if (comp.count() < 2) continue;
      ex_.step("Claim1.v", "large_common_cnc");
      ex_.bind("x", x_);
      ex_.bind("y", y_);
      const int a = comp.first();
      ex_.resolve(Witness{WitnessKind::kCycle4, {x_, a, y_, comp.next(a)}});
    }
    if (shared.size() >= 2) {
      ex_.step("Claim1.vi", "two_common_cncs");
      ex_.bind("x", x_);
      ex_.bind("y", y_);
      ex_.resolve(Witness{WitnessKind::kCycle4,
                          {x_, cut_.components[shared[0]].first(), y_, cut_.components[shared[1]].first()}});
    }
  }

  // The CNC of `s` other than `skip`, if exactly one exists.
  std::size_t other_cnc(int s, std::size_t skip) {
    std::size_t found = cut_.components.size();
    for (std::size_t d = 0; d < cut_.components.size(); ++d)
      if (d != skip && cut_.is_cnc(s, d)) {
        if (found != cut_.components.size()) ex_.fail("second common CNC missed");
        found = d;
      }
    if (found == cut_.components.size()) ex_.fail("cut vertex with two non-CNCs missed");
    return found;
  }

  void three_components() {
    ex_.step("Claim2", "three_components");
    const std::vector<std::size_t> shared = common();
    if (shared.size() != 1) ex_.fail("three components without exactly one common CNC");
    const std::size_t d1 = shared.front();
    const std::size_t d2 = other_cnc(x_, d1);
    const std::size_t d3 = other_cnc(y_, d1);
    if (d2 == d3) ex_.fail("x and y share a second CNC");
    const int u1 = cut_.components[d1].first();
    const int u2 = cut_.components[d2].first();
    const int u3 = cut_.components[d3].first();
    ex_.bind("x", x_);
    ex_.bind("y", y_);
    ex_.bind("u1", u1);
    ex_.bind("u2", u2);
    ex_.bind("u3", u3);
    if (g_.adjacent(u3, x_)) ex_.resolve(Witness{WitnessKind::kCycle4, {x_, u3, y_, u1}});
    if (g_.adjacent(u2, y_)) ex_.resolve(Witness{WitnessKind::kCycle4, {y_, u2, x_, u1}});
    ex_.fact("u3", u3, "x", x_, false);
    ex_.fact("u2", u2, "y", y_, false);
    ex_.resolve(Witness{WitnessKind::kInducedP5, {u3, y_, u1, x_, u2}});
  }

  void two_components() {
    if (cut_.component_count != 2) ex_.fail("fewer than two components after removing a cut");
    const std::vector<std::size_t> shared = common();
    if (shared.empty()) {
      ex_.step("T1.Case.NoCommonCNC", "c=2");
      std::size_t da = 0;
      if (!cut_.is_cnc(x_, da)) da = 1;
      const std::size_t db = 1 - da;
      if (!cut_.is_cnc(x_, da) || !cut_.is_cnc(y_, db)) ex_.fail("cut vertex with two non-CNCs missed");
      const int y1 = (g_.neighbors(y_) & cut_.components[da]).first();
      const int x1 = (g_.neighbors(x_) & cut_.components[db]).first();
      if (x1 < 0 || y1 < 0) ex_.fail("cut vertex without a neighbour in a component");
      ex_.bind("x", x_);
      ex_.bind("y", y_);
      ex_.bind("x1", x1);
      ex_.bind("y1", y1);
      ex_.resolve(Witness{WitnessKind::kCycle4, {x_, y1, y_, x1}});
    }

    ex_.step("T1.Case.CommonCNC", "c=2");
    const std::size_t d1 = shared.front();
    const std::size_t d2 = 1 - d1;
    if (cut_.components[d1].count() != 1) ex_.fail("common CNC of order >= 2 missed");
    const int u = cut_.components[d1].first();
    const int x1 = (g_.neighbors(x_) & cut_.components[d2]).first();
    const int y1 = (g_.neighbors(y_) & cut_.components[d2]).first();
    if (x1 < 0 || y1 < 0) ex_.fail("cut vertex without a neighbour in a component");
    ex_.bind("x", x_);
    ex_.bind("y", y_);
    ex_.bind("u", u);
    ex_.bind("x1", x1);
    ex_.bind("y1", y1);
    if (x1 == y1 || g_.adjacent(x1, y_)) ex_.resolve(Witness{WitnessKind::kCycle4, {x_, u, y_, x1}});
    if (g_.adjacent(y1, x_)) ex_.resolve(Witness{WitnessKind::kCycle4, {x_, u, y_, y1}});
    if (!g_.adjacent(x1, y1)) ex_.resolve(Witness{WitnessKind::kInducedP5, {x1, x_, u, y_, y1}});
    ex_.fact("x1", x1, "y1", y1, true);

    VertexSet rest = g_.neighbors(u) & cut_.cut;
    rest.erase(x_);
    rest.erase(y_);
    const int z = rest.first();
    if (z < 0) ex_.fail("u has no neighbour in S besides x and y");
    ex_.bind("z", z);
    if (g_.adjacent(z, x1)) ex_.resolve(Witness{WitnessKind::kCycle4, {z, u, x_, x1}});
    if (g_.adjacent(z, y1)) ex_.resolve(Witness{WitnessKind::kCycle4, {z, u, y_, y1}});
    ex_.fact("z", z, "x1", x1, false);
    ex_.fact("z", z, "y1", y1, false);
    if (!g_.adjacent(z, x_)) ex_.resolve(Witness{WitnessKind::kInducedP5, {z, u, x_, x1, y1}});
    if (!g_.adjacent(z, y_)) ex_.resolve(Witness{WitnessKind::kInducedP5, {z, u, y_, y1, x1}});
    ex_.resolve(Witness{WitnessKind::kCycle4, {x_, z, y_, u}});
  }

  const Graph& g_;
  Extraction ex_;
  CutAnalysis cut_;
  int x_ = -1;
  int y_ = -1;
};

}  // namespace

CutAnalysis cut_analysis_cnc(const Graph& g) {
  detail::require_min_degree(g);
  if (!is_connected(g)) throw DisconnectedError();
  if (is_complete(g)) throw CompleteGraphError();
  CutAnalysis cut = min_vertex_cut(g);
  for (int x : cut.cut_vertices)
    for (std::size_t d = 0; d < cut.components.size(); ++d)
      if (!g.neighbors(x).intersects(cut.components[d]))
        throw InternalInvariantError("cut vertex " + std::to_string(x) + " has no neighbour in component " +
                                         std::to_string(d) + " of a minimum cut",
                                     ExtractionTrace{});
  return cut;
}

Certificate p5_witness(const Graph& g) {
  return detail::on_first_component(g, [](const Graph& h) { return P5Extraction(h).run(); });
}

}  // namespace egcert
