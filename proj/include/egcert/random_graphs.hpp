#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "egcert/graph.hpp"

namespace egcert {

using Rng = std::mt19937_64;

// G(n, p).
Graph random_gnp(int n, double p, Rng& rng);

// G(n, p), then edges to random non-neighbours until every vertex has degree
// >= min_degree, then random edges between components until connected.
// Requires n > min_degree.
Graph random_min_degree_graph(int n, int min_degree, double p, Rng& rng);

// Maximal C4-free graph built by trying all pairs in random order.
Graph random_maximal_c4_free(int n, Rng& rng);

// Maximal graph without cycles of the listed lengths, built by trying all
// pairs in random order and skipping edges that would make a vertex exceed
// `max_degree`.
Graph random_avoiding_cycles(int n, const std::vector<int>& lengths, int max_degree, Rng& rng);

// Random simple cubic graph from the pairing model (retries until simple).
// Requires n even and n >= 4.
Graph random_cubic(int n, Rng& rng);

// Connected graph of minimum degree >= 3 with at most 16 vertices, drawn from
// a mix of the generators above; deterministic in `seed`.
Graph random_test_graph(std::uint64_t seed, int max_order = 16);

}  // namespace egcert
