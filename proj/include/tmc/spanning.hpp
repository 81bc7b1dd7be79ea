#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tmc/graph.hpp"

namespace tmc {

/// Exact spanning-tree leaf statistics of a connected graph.
///
/// `l` is the maximum number of leaves over all spanning trees, `q = n - l`
/// the matching minimum number of internal vertices and `gamma_c` the
/// connected domination number. The witnesses attain `l` and `gamma_c`.
///
/// Degenerate orders: K_2 reports l = 2, q = 0, gamma_c = 0 with an empty
/// dominating set. K_1 reports l = q = gamma_c = 0 and `degenerate = true`;
/// callers must not read the leaf count of K_1 as meaningful.
struct SpanningStats {
  int l = 0;
  int q = 0;
  int gamma_c = 0;
  std::vector<Edge> witness_tree;
  std::vector<Vertex> witness_cds;
  bool degenerate = false;
};

/// Orders accepted by spanning_stats (vertex subsets are 64-bit masks).
inline constexpr int kSpanningMaxOrder = 64;

/// Exact stats via smallest-first search over connected dominating sets;
/// among minimum sets the lexicographically smallest is returned.
/// Throws DisconnectedError on disconnected input.
SpanningStats spanning_stats(const Graph& g);

/// Leaf count of a greedily grown spanning tree, a lower bound on l(G).
/// Starts from the lowest-indexed vertex of maximum degree and repeatedly
/// expands the tree vertex with the most neighbors outside the tree (ties to
/// the lowest index). Works at any order.
int leaf_lower_bound(const Graph& g);

/// The greedy tree behind leaf_lower_bound.
std::vector<Edge> greedy_spanning_tree(const Graph& g);

struct LeafProfile {
  std::vector<Vertex> leaves;
  std::vector<Vertex> internal;
};

/// Splits the vertices of a tree (given by its edges) into degree-1 and
/// degree >= 2 vertices. Only vertices touched by an edge are reported.
/// Throws tmc::Error when the edge set is not a tree.
LeafProfile tree_leaf_profile(std::span<const Edge> tree);

/// True iff the edges form a single tree (connected, acyclic) on the
/// vertices they touch.
bool is_tree(std::span<const Edge> edges);

/// True iff the edges form a spanning tree of a graph on n vertices.
bool is_spanning_tree(int n, std::span<const Edge> edges);

}  // namespace tmc
