// Certificate extraction for "minimum degree >= 3 implies C4, C8 or an
// induced P8". C is a shortest induced cycle of length >= 5 and the labels
// v1..v13 follow the case analysis on its length k in {5, 6, 7}.
//
// Conventions used below:
//   L.forbid(a, b, {cycle})  v_a !~ v_b, otherwise the listed labels form a
//                            cycle that the graph cannot contain unless it
//                            already has a C4 (or it is itself a C8).
//   L.pick(from, upto, n)    n smallest neighbours of v_from outside v1..v_upto.

#include <algorithm>

#include "extraction.hpp"

namespace egcert {
namespace {

using detail::CycleLabels;
using detail::Extraction;

class P8Extraction {
 public:
  explicit P8Extraction(const Graph& g) : g_(g), ex_(g) {}

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

    auto c = shortest_induced_cycle_at_least(g_, 5);
    if (!c) ex_.fail("C4-free graph of minimum degree 3 without an induced cycle of length >= 5");
    const int k = c->length();
    ex_.step("Lemma2.1", "k=" + std::to_string(k));
    CycleLabels L(ex_);
    bind_cycle(L, c->vertices);
    if (k == 8) ex_.resolve(Witness{WitnessKind::kCycle8, c->vertices});
    if (k >= 9) L.induced_p8({1, 2, 3, 4, 5, 6, 7, 8});
    if (k == 7) seven(L);
    if (k == 6) claim23(c->vertices);
    if (k == 5) claim22(L);
    ex_.fail("no branch produced a witness");
  }

  // Binds v1..vk to the cycle and records its edges.
  static void bind_cycle(CycleLabels& L, const std::vector<int>& cycle) {
    L.bind_cycle(cycle);
    const int k = static_cast<int>(cycle.size());
    for (int i = 1; i <= k; ++i) L.adjacent(i, i % k + 1);
  }

  [[noreturn]] void seven(CycleLabels& L) {
    ex_.step("K7Final", "v8");
    L.bind(8, L.pick(1, 7, 1)[0]);
    L.adjacent(8, 1);
    L.forbid(8, 2, {8, 2, 3, 4, 5, 6, 7, 1});
    L.forbid(8, 3, {8, 1, 2, 3});
    L.forbid(8, 4, {8, 1, 2, 3, 4});
    L.forbid(8, 5, {8, 5, 6, 7, 1});
    L.forbid(8, 6, {8, 6, 7, 1});
    L.forbid(8, 7, {8, 7, 6, 5, 4, 3, 2, 1});

    ex_.step("K7Final", "v9");
    const std::vector<int> ab = L.pick(8, 8, 2);
    L.bind(9, L.prefer_nonadjacent({ab[0], ab[1]}, 8, 1).first);
    L.adjacent(9, 8);
    L.expect_nonadjacent(9, 1);
    L.forbid(9, 2, {9, 2, 1, 8});
    L.forbid(9, 3, {9, 3, 4, 5, 6, 7, 1, 8});
    L.forbid(9, 4, {9, 4, 3, 2, 1, 8});
    L.forbid(9, 5, {9, 5, 6, 7, 1, 8});
    L.forbid(9, 6, {9, 6, 5, 4, 3, 2, 1, 8});
    L.forbid(9, 7, {9, 7, 1, 8});
    L.induced_p8({9, 8, 1, 2, 3, 4, 5, 6});
  }

  // Two consecutive vertices of the 6-cycle share the neighbour w outside it.
  // `rotated` lists the cycle starting at that pair.
  [[noreturn]] void claim23_case1(const std::vector<int>& rotated, int w) {
    ex_.step("Claim2.3", "Case1");
    CycleLabels L(ex_);
    bind_cycle(L, rotated);
    L.bind(7, w);
    L.adjacent(7, 1);
    L.adjacent(7, 2);
    L.forbid(7, 3, {7, 1, 2, 3});
    L.forbid(7, 4, {7, 2, 3, 4});
    L.forbid(7, 5, {7, 1, 6, 5});
    L.forbid(7, 6, {7, 2, 1, 6});

    ex_.step("Claim2.3", "Case1.v8");
    L.bind(8, L.pick(7, 7, 1)[0]);
    L.adjacent(8, 7);
    L.forbid(8, 1, {8, 1, 2, 7});
    L.forbid(8, 2, {8, 2, 1, 7});
    L.forbid(8, 3, {8, 3, 2, 7});
    L.forbid(8, 4, {8, 4, 3, 2, 7});
    L.forbid(8, 5, {8, 5, 6, 1, 7});
    L.forbid(8, 6, {8, 6, 1, 7});

    ex_.step("Claim2.3", "Case1.v9");
    const std::vector<int> ab = L.pick(8, 8, 2);
    L.bind(9, L.prefer_nonadjacent({ab[0], ab[1]}, 8, 7).first);
    L.adjacent(9, 8);
    L.expect_nonadjacent(9, 7);
    L.forbid(9, 1, {9, 1, 7, 8});
    L.forbid(9, 2, {9, 2, 7, 8});
    L.forbid(9, 3, {9, 3, 2, 7, 8});
    L.forbid(9, 4, {9, 4, 5, 6, 1, 2, 7, 8});
    L.forbid(9, 5, {9, 5, 4, 3, 2, 1, 7, 8});
    L.forbid(9, 6, {9, 6, 1, 7, 8});
    L.induced_p8({9, 8, 7, 2, 3, 4, 5, 6});
  }

  // k = 6.
  [[noreturn]] void claim23(const std::vector<int>& cycle) {
    const std::size_t k = cycle.size();
    for (std::size_t i = 0; i < k; ++i) {
      VertexSet shared = g_.neighbors(cycle[i]) & g_.neighbors(cycle[(i + 1) % k]);
      for (int v : cycle) shared.erase(v);
      if (shared.empty()) continue;
      std::vector<int> rotated(cycle.begin() + static_cast<std::ptrdiff_t>(i), cycle.end());
      rotated.insert(rotated.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(i));
      claim23_case1(rotated, shared.first());
    }

    ex_.step("Claim2.3", "Case2");
    CycleLabels L(ex_);
    bind_cycle(L, cycle);
    L.bind(7, L.pick(1, 6, 1)[0]);
    L.adjacent(7, 1);
    if (L.adjacent(7, 2) || L.adjacent(7, 6)) ex_.fail("consecutive cycle vertices share a neighbour in Case 2");
    L.forbid(7, 3, {7, 1, 2, 3});
    L.forbid(7, 4, {7, 1, 2, 3, 4});
    L.forbid(7, 5, {7, 5, 6, 1});

    ex_.step("Claim2.3", "Case2.v8");
    const std::vector<int> ab = L.pick(7, 7, 2);
    if (auto adj = L.adjacent_first({ab[0], ab[1]}, 7, 1)) {
      L.bind(9, adj->first);
      L.bind(8, adj->second);
      L.adjacent(9, 1);
      L.expect_nonadjacent(8, 1);
      if (L.adjacent(8, 4)) {
        // v8 v7 v1 v2 v3 v4 is a 6-cycle whose consecutive pair v7, v1 has the
        // common neighbour v9: back to Case 1.
        const std::vector<int> next = L.vertices({7, 1, 2, 3, 4, 8});
        const int w = L[9];
        CycleReduction r = reduce_cycle(g_, VertexCycle{next});
        if (auto* c4 = std::get_if<FoundC4>(&r)) ex_.resolve(c4->witness);
        claim23_case1(next, w);
      }
    } else {
      L.bind(8, L.prefer_nonadjacent({ab[0], ab[1]}, 7, 4).first);
      L.expect_nonadjacent(8, 1);
    }
    L.adjacent(8, 7);
    L.expect_nonadjacent(8, 4);
    L.forbid(8, 2, {8, 2, 1, 7});
    L.forbid(8, 3, {8, 3, 2, 1, 7});
    L.forbid(8, 5, {8, 5, 6, 1, 7});
    L.forbid(8, 6, {8, 6, 1, 7});

    ex_.step("Claim2.3", "Case2.v10");
    const std::vector<int> cd = L.pick(8, 8, 2);
    if (auto adj = L.adjacent_first({cd[0], cd[1]}, 8, 7)) {
      L.bind(11, adj->first);
      L.bind(10, adj->second);
      L.adjacent(11, 7);
      L.expect_nonadjacent(10, 7);
      if (L.adjacent(10, 4)) ex_.resolve_cycle(L.vertices({10, 8, 11, 7, 1, 2, 3, 4}));
    } else {
      L.bind(10, L.prefer_nonadjacent({cd[0], cd[1]}, 8, 4).first);
      L.expect_nonadjacent(10, 7);
    }
    L.adjacent(10, 8);
    L.expect_nonadjacent(10, 4);
    L.forbid(10, 1, {10, 1, 7, 8});
    L.forbid(10, 2, {10, 2, 1, 7, 8});
    L.forbid(10, 3, {10, 3, 4, 5, 6, 1, 7, 8});
    L.forbid(10, 5, {10, 5, 4, 3, 2, 1, 7, 8});
    L.forbid(10, 6, {10, 6, 1, 7, 8});
    L.induced_p8({10, 8, 7, 1, 2, 3, 4, 5});
  }

  // `cycle` is a 5-cycle (not yet known to be chordless) whose consecutive
  // vertices cycle[i], cycle[i+1] have the common neighbour w outside it.
  [[noreturn]] void claim21(const std::vector<int>& cycle, std::size_t i, int w) {
    ex_.step("Claim2.1", "Setup");
    CycleReduction r = reduce_cycle(g_, VertexCycle{cycle});
    if (auto* c4 = std::get_if<FoundC4>(&r)) ex_.resolve(c4->witness);
    std::vector<int> rotated(cycle.begin() + static_cast<std::ptrdiff_t>(i), cycle.end());
    rotated.insert(rotated.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(i));

    CycleLabels L(ex_);
    bind_cycle(L, rotated);
    L.bind(6, w);
    L.adjacent(6, 1);
    L.adjacent(6, 2);
    L.forbid(6, 3, {6, 1, 2, 3});
    L.forbid(6, 4, {6, 1, 5, 4});
    L.forbid(6, 5, {6, 2, 1, 5});

    ex_.step("Claim2.1", "v7");
    L.bind(7, L.pick(6, 6, 1)[0]);
    L.adjacent(7, 6);
    L.forbid(7, 1, {7, 1, 2, 6});
    L.forbid(7, 2, {7, 2, 1, 6});
    L.forbid(7, 3, {7, 3, 2, 6});
    L.forbid(7, 5, {7, 5, 1, 6});
    if (L.adjacent(7, 4)) claim21_case1(L);
    claim21_case2(L);
  }

  [[noreturn]] void claim21_case1(CycleLabels& L) {
    ex_.step("Claim2.1", "Case1");
    L.bind(8, L.pick(7, 7, 1)[0]);
    L.adjacent(8, 7);
    L.adjacent(7, 4);
    L.forbid(8, 1, {8, 1, 6, 7});
    L.forbid(8, 2, {8, 2, 6, 7});
    L.forbid(8, 3, {8, 3, 4, 7});
    L.forbid(8, 5, {8, 5, 4, 7});

    if (L.adjacent(8, 6)) {
      ex_.step("Claim2.1", "Subcase1.1");
      L.forbid(8, 4, {8, 4, 7, 6});
      L.bind(9, L.pick(8, 8, 1)[0]);
      L.adjacent(9, 8);
      L.forbid(9, 1, {9, 1, 6, 8});
      L.forbid(9, 2, {9, 2, 6, 8});
      L.forbid(9, 3, {9, 8, 7, 4, 5, 1, 2, 3});
      L.forbid(9, 4, {9, 8, 7, 4});
      L.forbid(9, 5, {9, 8, 7, 6, 2, 3, 4, 5});
      L.forbid(9, 6, {9, 8, 7, 6});
      L.forbid(9, 7, {9, 8, 6, 7});

      ex_.step("Claim2.1", "Subcase1.1.v10");
      const std::vector<int> ab = L.pick(9, 9, 2);
      L.bind(10, L.prefer_nonadjacent({ab[0], ab[1]}, 9, 8).first);
      L.adjacent(10, 9);
      L.expect_nonadjacent(10, 8);
      L.forbid(10, 7, {10, 9, 8, 7});
      L.forbid(10, 4, {10, 9, 8, 7, 6, 2, 3, 4});
      L.forbid(10, 5, {10, 9, 8, 7, 6, 2, 1, 5});
      L.forbid(10, 1, {10, 9, 8, 7, 4, 3, 2, 1});
      L.forbid(10, 2, {10, 9, 8, 7, 4, 5, 1, 2});
      L.induced_p8({10, 9, 8, 7, 4, 5, 1, 2});
    }

    if (!L.adjacent(8, 4)) {
      ex_.step("Claim2.1", "Subcase1.2");
      const std::vector<int> ab = L.pick(8, 8, 2);
      L.bind(9, L.prefer_nonadjacent({ab[0], ab[1]}, 8, 7).first);
      L.adjacent(9, 8);
      L.expect_nonadjacent(9, 7);
      L.forbid(9, 1, {9, 8, 7, 4, 3, 2, 6, 1});
      L.forbid(9, 2, {9, 8, 7, 4, 5, 1, 6, 2});
      L.forbid(9, 3, {9, 8, 7, 4, 5, 1, 2, 3});
      L.forbid(9, 4, {9, 8, 7, 4});
      L.forbid(9, 5, {9, 8, 7, 6, 2, 3, 4, 5});
      L.forbid(9, 6, {9, 8, 7, 6});

      ex_.step("Claim2.1", "Subcase1.2.v11");
      const std::vector<int> cd = L.pick(9, 9, 2);
      L.bind(11, L.prefer_nonadjacent({cd[0], cd[1]}, 9, 8).first);
      L.adjacent(11, 9);
      L.expect_nonadjacent(11, 8);
      L.forbid(11, 7, {11, 9, 8, 7});
      L.forbid(11, 4, {11, 9, 8, 7, 6, 2, 3, 4});
      L.forbid(11, 5, {11, 9, 8, 7, 6, 2, 1, 5});
      L.forbid(11, 1, {11, 9, 8, 7, 4, 3, 2, 1});
      L.forbid(11, 2, {11, 9, 8, 7, 4, 5, 1, 2});
      L.induced_p8({11, 9, 8, 7, 4, 5, 1, 2});
    }

    ex_.step("Claim2.1", "Subcase1.2.v8~v4");
    L.bind(9, L.pick(8, 8, 1)[0]);
    L.adjacent(9, 8);
    L.forbid(9, 1, {9, 8, 7, 4, 3, 2, 6, 1});
    L.forbid(9, 2, {9, 8, 7, 4, 5, 1, 6, 2});
    L.forbid(9, 3, {9, 8, 7, 4, 5, 1, 2, 3});
    L.forbid(9, 4, {9, 8, 7, 4});
    L.forbid(9, 5, {9, 8, 7, 6, 2, 3, 4, 5});
    L.forbid(9, 6, {9, 8, 7, 6});
    L.forbid(9, 7, {9, 8, 4, 7});

    ex_.step("Claim2.1", "Subcase1.2.v10");
    const std::vector<int> ab = L.pick(9, 9, 2);
    L.bind(10, L.prefer_nonadjacent({ab[0], ab[1]}, 9, 8).first);
    L.adjacent(10, 9);
    L.expect_nonadjacent(10, 8);
    L.forbid(10, 1, {10, 9, 8, 7, 4, 3, 2, 1});
    L.forbid(10, 2, {10, 9, 8, 4, 7, 6, 1, 2});
    L.forbid(10, 3, {10, 9, 8, 7, 6, 1, 2, 3});
    L.forbid(10, 4, {10, 9, 8, 4});
    L.forbid(10, 5, {10, 9, 8, 4, 3, 2, 1, 5});
    L.forbid(10, 6, {10, 9, 8, 7, 4, 3, 2, 6});
    L.forbid(10, 7, {10, 9, 8, 7});

    ex_.step("Claim2.1", "Subcase1.2.v12");
    const std::vector<int> cd = L.pick(10, 10, 2);
    L.bind(12, L.prefer_nonadjacent({cd[0], cd[1]}, 10, 9).first);
    L.adjacent(12, 10);
    L.expect_nonadjacent(12, 9);
    L.forbid(12, 1, {12, 10, 9, 8, 7, 6, 2, 1});
    L.forbid(12, 2, {12, 10, 9, 8, 7, 6, 1, 2});
    L.forbid(12, 5, {12, 10, 9, 8, 7, 6, 1, 5});
    L.forbid(12, 6, {12, 10, 9, 8, 4, 5, 1, 6});
    L.forbid(12, 8, {12, 10, 9, 8});
    const bool to4 = L.adjacent(12, 4);
    const bool to7 = L.adjacent(12, 7);
    if (to4 && to7) ex_.resolve_cycle(L.vertices({12, 7, 8, 4}));
    if (!to7) L.induced_p8({12, 10, 9, 8, 7, 6, 1, 5});
    L.induced_p8({12, 10, 9, 8, 4, 5, 1, 2});
  }

  [[noreturn]] void claim21_case2(CycleLabels& L) {
    ex_.step("Claim2.1", "Case2");
    const std::vector<int> ab = L.pick(7, 7, 2);
    if (auto adj = L.adjacent_first({ab[0], ab[1]}, 7, 4)) {
      L.bind(9, adj->first);
      L.bind(8, adj->second);
      L.adjacent(9, 4);
      L.expect_nonadjacent(8, 4);
      if (L.adjacent(8, 6)) ex_.resolve_cycle(L.vertices({8, 6, 2, 1, 5, 4, 9, 7}));
    } else {
      L.bind(8, L.prefer_nonadjacent({ab[0], ab[1]}, 7, 6).first);
      L.expect_nonadjacent(8, 4);
    }
    L.adjacent(8, 7);
    L.expect_nonadjacent(8, 6);
    L.forbid(8, 1, {8, 7, 6, 1});
    L.forbid(8, 2, {8, 7, 6, 2});
    L.forbid(8, 3, {8, 7, 6, 2, 1, 5, 4, 3});
    L.forbid(8, 5, {8, 7, 6, 1, 2, 3, 4, 5});

    ex_.step("Claim2.1", "Case2.v10");
    const std::vector<int> cd = L.pick(8, 8, 2);
    L.bind(10, L.prefer_nonadjacent({cd[0], cd[1]}, 8, 7).first);
    L.adjacent(10, 8);
    L.expect_nonadjacent(10, 7);
    L.forbid(10, 3, {10, 8, 7, 6, 1, 5, 4, 3});
    L.forbid(10, 4, {10, 8, 7, 6, 1, 2, 3, 4});
    L.forbid(10, 5, {10, 8, 7, 6, 2, 3, 4, 5});
    L.forbid(10, 6, {10, 8, 7, 6});
    const bool to1 = L.adjacent(10, 1);
    const bool to2 = L.adjacent(10, 2);
    if (to1 && to2) ex_.resolve_cycle(L.vertices({10, 1, 6, 2}));
    if (!to1) L.induced_p8({10, 8, 7, 6, 1, 5, 4, 3});
    L.induced_p8({10, 8, 7, 6, 2, 3, 4, 5});
  }

  // Throws Resolved if neighbour c of a labelled vertex is adjacent to
  // v_target; the cycle is c followed by `rest`.
  void forbid_candidate(CycleLabels& L, int c, int target, std::initializer_list<int> rest) {
    if (!g_.adjacent(c, L[target])) return;
    std::vector<int> cycle{c};
    for (int v : L.vertices(rest)) cycle.push_back(v);
    ex_.resolve_cycle(cycle);
  }

  // k = 5.
  [[noreturn]] void claim22(CycleLabels& L) {
    ex_.step("Claim2.2", "v6");
    L.bind(6, L.pick(1, 5, 1)[0]);
    L.adjacent(6, 1);
    if (L.adjacent(6, 2)) claim21(L.vertices({1, 2, 3, 4, 5}), 0, L[6]);
    L.forbid(6, 3, {6, 1, 2, 3});
    L.forbid(6, 4, {6, 1, 5, 4});
    if (L.adjacent(6, 5)) claim21(L.vertices({1, 2, 3, 4, 5}), 4, L[6]);

    ex_.step("Claim2.2", "v7v8");
    const std::vector<int> ab = L.pick(6, 5, 2);
    if (auto adj = L.adjacent_first({ab[0], ab[1]}, 6, 3)) {
      L.bind(8, adj->first);
      L.bind(7, adj->second);
      L.adjacent(8, 3);
      L.expect_nonadjacent(7, 3);
      if (L.adjacent(7, 4)) ex_.resolve_cycle(L.vertices({7, 6, 8, 3, 2, 1, 5, 4}));
    } else {
      const auto [first, second] = L.prefer_nonadjacent({ab[0], ab[1]}, 6, 4);
      L.bind(7, first);
      L.bind(8, second);
      L.expect_nonadjacent(7, 3);
    }
    L.expect_nonadjacent(7, 4);

    if (L.adjacent(7, 1)) {
      ex_.step("Claim2.2", "v7~v1");
      if (L.adjacent(8, 1)) ex_.resolve_cycle(L.vertices({7, 6, 8, 1}));
      if (L.adjacent(8, 3)) claim21(L.vertices({1, 2, 3, 8, 6}), 4, L[7]);
      if (L.adjacent(8, 4)) claim21(L.vertices({1, 6, 8, 4, 5}), 0, L[7]);
      ex_.step("Claim2.2", "swap_v7_v8");
      const int v7 = L[7];
      const int v8 = L[8];
      L.bind(7, v8);
      L.bind(8, v7);
      L.expect_nonadjacent(7, 1);
      L.expect_nonadjacent(7, 3);
      L.expect_nonadjacent(7, 4);
    }
    L.adjacent(7, 6);
    L.forbid(7, 2, {7, 2, 1, 6});
    L.forbid(7, 5, {7, 5, 1, 6});

    ex_.step("Claim2.2", "v9v10");
    const std::vector<int> cd = L.pick(7, 7, 2);
    for (int c : cd) {
      forbid_candidate(L, c, 1, {7, 6, 1});
      forbid_candidate(L, c, 2, {7, 6, 1, 5, 4, 3, 2});
      forbid_candidate(L, c, 5, {7, 6, 1, 2, 3, 4, 5});
    }
    if (auto adj = L.adjacent_first({cd[0], cd[1]}, 7, 6)) {
      L.bind(10, adj->first);
      L.bind(9, adj->second);
      L.adjacent(10, 6);
      if (L.adjacent(9, 3)) ex_.resolve_cycle(L.vertices({9, 7, 10, 6, 1, 5, 4, 3}));
      if (L.adjacent(9, 4)) ex_.resolve_cycle(L.vertices({9, 7, 10, 6, 1, 2, 3, 4}));
    } else if (auto adj3 = L.adjacent_first({cd[0], cd[1]}, 7, 3)) {
      L.bind(10, adj3->first);
      L.bind(9, adj3->second);
      L.adjacent(10, 3);
      if (L.adjacent(9, 4)) ex_.resolve_cycle(L.vertices({9, 7, 10, 3, 2, 1, 5, 4}));
    } else {
      const auto [first, second] = L.prefer_nonadjacent({cd[0], cd[1]}, 7, 4);
      L.bind(9, first);
      L.bind(10, second);
    }
    L.adjacent(9, 7);
    for (int t : {1, 2, 3, 4, 5, 6}) L.expect_nonadjacent(9, t);

    ex_.step("Claim2.2", "v11v12");
    const std::vector<int> ef = L.pick(9, 7, 2);
    for (int c : ef) {
      forbid_candidate(L, c, 6, {9, 7, 6});
      forbid_candidate(L, c, 3, {9, 7, 6, 1, 5, 4, 3});
      forbid_candidate(L, c, 4, {9, 7, 6, 1, 2, 3, 4});
    }
    if (auto adj = L.adjacent_first({ef[0], ef[1]}, 9, 7)) {
      L.bind(12, adj->first);
      L.bind(11, adj->second);
      L.adjacent(12, 7);
      if (L.adjacent(11, 1)) claim21(L.vertices({11, 9, 7, 6, 1}), 1, L[12]);
    } else {
      L.bind(11, L.prefer_nonadjacent({ef[0], ef[1]}, 9, 1).first);
    }
    L.adjacent(11, 9);
    for (int t : {1, 3, 4, 6, 7}) L.expect_nonadjacent(11, t);
    const bool to2 = L.adjacent(11, 2);
    const bool to5 = L.adjacent(11, 5);
    if (to2 && to5) ex_.resolve_cycle(L.vertices({11, 2, 1, 5}));
    if (!to5) L.induced_p8({11, 9, 7, 6, 1, 5, 4, 3});
    L.induced_p8({11, 9, 7, 6, 1, 2, 3, 4});
  }

  const Graph& g_;
  Extraction ex_;
};

}  // namespace

Certificate eg_witness(const Graph& g) {
  return detail::on_first_component(g, [](const Graph& h) { return P8Extraction(h).run(); });
}

}  // namespace egcert
