#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "tmc/graph.hpp"

namespace tmc {

/// Edge patterns H for the K_n - H family. Each pattern lives on vertices
/// {0,1,2,3} (or a prefix of them).
enum class Pattern {
  kK2,       // single edge
  kP3,       // path on 3 vertices
  kK3,       // triangle
  kP4,       // path on 4 vertices
  k2K2,      // two disjoint edges
  kK4,       // complete graph on 4 vertices
  kK4MinusK2,  // K_4 with one edge removed
  kK4MinusP3,  // K_4 with a 2-edge path removed (the paw)
  kC4,       // 4-cycle
  kK13,      // claw K_{1,3}
};

inline constexpr Pattern kAllPatterns[] = {
    Pattern::kK2,        Pattern::kP3,        Pattern::kK3, Pattern::kP4,  Pattern::k2K2,
    Pattern::kK4,        Pattern::kK4MinusK2, Pattern::kK4MinusP3, Pattern::kC4, Pattern::kK13,
};

std::string_view pattern_name(Pattern p);
Pattern parse_pattern(std::string_view name);
/// Number of vertices the pattern touches.
int pattern_order(Pattern p);
/// The pattern itself as a graph on pattern_order(p) vertices.
Graph pattern_graph(Pattern p);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
/// Requires n >= 3.
Graph cycle_graph(int n);
/// K_{1,leaves}: center 0 and vertices 1..leaves.
Graph star_graph(int leaves);
Graph complete_multipartite(const MultipartiteSpec& spec);
/// K_n with the pattern's edges deleted on vertices {0,1,2,3}.
Graph complete_minus(int n, Pattern pattern);
/// Labeled tree decoded from a Pruefer sequence; n = seq.size() + 2.
Graph tree_from_prufer(std::span<const int> seq);
Graph petersen_graph();

}  // namespace tmc
