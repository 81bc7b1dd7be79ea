#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tmc/coloring.hpp"
#include "tmc/graph.hpp"

namespace tmc {

/// Result of a tmc computation: an exact value or a certified interval.
struct TmcOutcome {
  std::optional<int> value;  // set iff exact
  int lower = 0;
  int upper = 0;
  /// "exact-bnb", "oracle", "bounds-only", "disconnected" or a theorem rule id.
  std::string method;
  /// Present for exact values on connected graphs: a TMC-coloring with
  /// exactly `value` colors.
  std::optional<TotalColoring> certificate;
  /// Nontrivial color trees behind the certificate, when the solver built it.
  std::optional<TreeFamily> family;
  std::uint64_t nodes = 0;

  bool exact() const noexcept { return value.has_value(); }
};

struct SolverOptions {
  /// Larger orders degrade to a bounds-only outcome.
  int max_n = 8;
  /// Search nodes before giving up with bounds; 0 means unlimited.
  std::uint64_t node_limit = 0;
};

/// Hard ceiling on the exact solver (non-adjacent pairs are 64-bit masks).
inline constexpr int kSolverMaxOrder = 11;
/// Ceiling for the exhaustive oracle.
inline constexpr int kOracleMaxOrder = 5;

/// m - n + 2 + l(G); 1 for K_1 and 0 for disconnected graphs.
int tmc_lower_bound(const Graph& g);

/// m + n for complete graphs, otherwise min(m + n - 2, m - n + delta + 1 + l(G));
/// 0 for disconnected graphs.
int tmc_upper_bound(const Graph& g);

/// Exact tmc(G) by branch and bound over simple families of color trees.
///
/// tmc(G) = m + n - W where W is the least total waste of a family in which
/// every non-adjacent pair lies in a common tree. The search branches on the
/// first uncovered pair (lexicographic) and tries, cheapest first, every
/// candidate subtree containing it. Candidates are the subtrees of G whose
/// leaves all belong to some non-adjacent pair inside the tree; their waste is
/// capped below the incumbent given by the maximum-leaf spanning tree.
TmcOutcome tmc_exact(const Graph& g, const SolverOptions& options = {});

/// Exhaustive enumeration of every family of pairwise compatible subtrees,
/// without pruning. Independent check for tmc_exact; refuses n > 5.
int tmc_oracle(const Graph& g);

}  // namespace tmc
