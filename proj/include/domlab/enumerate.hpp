#pragma once

#include "domlab/graph.hpp"

#include <cstdint>
#include <vector>

namespace domlab {

inline constexpr int kMaxEnumerationOrder = 8;

/// Canonical adjacency code for n <= 11: the maximum, over labellings
/// reachable by colour refinement plus individualisation, of the upper
/// triangle packed in graph6 order (x01 most significant). Isomorphic
/// graphs get equal codes.
std::uint64_t canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);

/// All pairwise non-isomorphic graphs of order n (1 <= n <= 8), each in
/// canonical labelling, sorted by canonical code. Throws SizeError for
/// n > 8; larger enumerations should be read from graph6 files.
std::vector<Graph> enumerate_small_graphs(int n, bool connected);

/// G(n, p) from a 64-bit Mersenne Twister (std::mt19937_64) seeded with
/// `seed`. Pairs (u, v), u < v, are visited in graph6 bit order; each draw
/// x keeps the edge iff (x >> 11) * 2^-53 < p.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace domlab
