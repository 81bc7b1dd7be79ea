#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tmc/generators.hpp"
#include "tmc/graph.hpp"

namespace tmc {

/// One theorem rule that applies to a graph, with the value it determines.
struct RuleHit {
  std::string rule;  // "complete", "example1", "thm2a".."thm2e", "thm3".."thm9"
  int value = 0;
  std::string detail;
};

struct TheoremVerdict {
  /// First matching rule in classification order, "disconnected" or "none".
  std::string rule = "none";
  std::optional<int> value;
  std::string detail;
  /// Every rule that fired, in classification order.
  std::vector<RuleHit> hits;
};

/// Rule order used by classify():
///   complete, example1, thm2b, thm2d, thm2e, thm2c, thm2a,
///   thm3, thm4, thm5, thm6, thm7, thm8, thm9.
/// All hits are reported; every hit on the same graph must carry the same
/// value. Needs n <= 64 (exact l(G)).
TheoremVerdict classify(const Graph& g);

/// Sufficient conditions for tmc = m - n + 2 + l (each requires n > 3).
bool complement_four_connected(const Graph& g);
/// Delta < n - (2m - 3(n-1)) / (n-3), compared exactly over the integers.
bool degree_condition(const Graph& g);

// Class predicates behind the small-value characterization. All expect a
// connected graph.
bool is_path(const Graph& g);
bool is_cycle(const Graph& g);
bool is_tree_graph(const Graph& g);
/// Trees with three leaves, or cycles other than K_3.
bool in_tmc4_class(const Graph& g);
/// Trees with four leaves, or unicyclic graphs with l(G) = 3.
bool in_tmc5_class(const Graph& g);
/// K_3, trees with five leaves, unicyclic graphs with l(G) = 4, or bicyclic
/// graphs with l(G) = 3 other than K_{2,1,1}.
bool in_tmc6_class(const Graph& g);

/// tmc(G) in {3,4,5,6} decided by the class predicates, if any applies.
std::optional<int> characterize_small(const Graph& g);

/// Whether g is isomorphic to K_n minus the pattern (n >= pattern order).
/// Compares the non-isolated part of the complement with the pattern, so it
/// works at any order.
bool matches_complete_minus(const Graph& g, Pattern pattern);

/// tmc(G) in {m+n, m+n-2, m+n-3, m+n-4} for K_n and the K_n - H templates.
std::optional<RuleHit> characterize_large(const Graph& g);

struct SweepOptions {
  int n_max = 6;
  /// At n = 7 only every k-th isomorphism class is checked.
  int sample_stride = 1;
  int jobs = 1;
};

struct SweepRow {
  std::string graph6;
  int n = 0;
  int m = 0;
  int l = 0;
  int tmc = 0;
  std::vector<std::string> rules;
  std::optional<int> predicted;
  bool agree = true;
};

struct SweepReport {
  std::vector<int> classes_per_order;  // index = n
  std::vector<SweepRow> rows;
  std::vector<std::string> discrepancies;

  int total_classes() const { return static_cast<int>(rows.size()); }
  bool passed() const { return discrepancies.empty(); }
};

/// Binds every theorem rule and class predicate to tmc_exact over all
/// connected isomorphism classes with 1 <= n <= n_max (n_max <= 7).
SweepReport sweep_crosscheck(const SweepOptions& options);

/// CSV with header graph6,n,m,l,tmc_exact,matched_rules,predicted_value,agree.
std::string sweep_csv(const SweepReport& report);

}  // namespace tmc
