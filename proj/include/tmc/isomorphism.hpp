#pragma once

#include <cstdint>
#include <vector>

#include "tmc/graph.hpp"

namespace tmc {

/// Orders handled by the factorial canonicalizer.
inline constexpr int kCanonicalMaxOrder = 8;
/// Orders handled by enumerate_connected_graphs.
inline constexpr int kEnumerateMaxOrder = 7;

/// Minimum upper-triangle adjacency bit string over all vertex permutations,
/// read in graph6 bit order (bit (i,j), i<j, column by column), packed MSB
/// first. Isomorphic graphs and only those share a code. Requires n <= 8.
std::uint64_t canonical_code(const Graph& g);

/// The graph whose adjacency string is canonical_code(g).
Graph canonical_form(const Graph& g);

/// Backtracking search for an edge-preserving bijection. Different orders
/// give false.
bool is_isomorphic(const Graph& a, const Graph& b);

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices, sorted by canonical code. Refuses n > 7.
std::vector<Graph> enumerate_connected_graphs(int n);

/// Same, without the connectivity filter.
std::vector<Graph> enumerate_graphs(int n);

}  // namespace tmc
