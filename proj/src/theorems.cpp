#include "tmc/theorems.hpp"

#include <sstream>

#include "tmc/error.hpp"
#include "tmc/graph_io.hpp"
#include "tmc/isomorphism.hpp"
#include "tmc/parallel.hpp"
#include "tmc/solver.hpp"
#include "tmc/spanning.hpp"

namespace tmc {

bool complement_four_connected(const Graph& g) { return vertex_connectivity_at_least(complement(g), 4); }

bool degree_condition(const Graph& g) {
  long long n = g.order();
  long long m = g.size();
  if (n <= 3) return false;
  // Delta < n - (2m - 3(n-1))/(n-3)  <=>  Delta (n-3) < n (n-3) - (2m - 3(n-1)), as n - 3 > 0.
  return max_degree(g) * (n - 3) < n * (n - 3) - (2 * m - 3 * (n - 1));
}

bool is_tree_graph(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

bool is_path(const Graph& g) { return g.order() >= 2 && is_tree_graph(g) && max_degree(g) <= 2; }

bool is_cycle(const Graph& g) {
  return g.order() >= 3 && g.size() == g.order() && is_connected(g) && max_degree(g) == 2 && min_degree(g) == 2;
}

namespace {

int leaf_number(const Graph& g) { return spanning_stats(g).l; }

bool is_k211(const Graph& g) { return g.order() == 4 && matches_complete_minus(g, Pattern::kK2); }

}  // namespace

bool in_tmc4_class(const Graph& g) {
  if (!is_connected(g)) return false;
  if (is_tree_graph(g)) return g.order() >= 2 && leaf_number(g) == 3;
  return is_cycle(g) && g.order() >= 4;
}

bool in_tmc5_class(const Graph& g) {
  if (!is_connected(g) || g.order() < 2) return false;
  if (is_tree_graph(g)) return leaf_number(g) == 4;
  return g.size() == g.order() && leaf_number(g) == 3;
}

bool in_tmc6_class(const Graph& g) {
  if (!is_connected(g) || g.order() < 2) return false;
  if (g.order() == 3 && g.size() == 3) return true;  // K_3
  if (is_tree_graph(g)) return leaf_number(g) == 5;
  if (g.size() == g.order()) return leaf_number(g) == 4;
  if (g.size() == g.order() + 1) return leaf_number(g) == 3 && !is_k211(g);
  return false;
}

std::optional<int> characterize_small(const Graph& g) {
  if (is_path(g)) return 3;
  if (in_tmc4_class(g)) return 4;
  if (in_tmc5_class(g)) return 5;
  if (in_tmc6_class(g)) return 6;
  return std::nullopt;
}

bool matches_complete_minus(const Graph& g, Pattern pattern) {
  if (g.order() < pattern_order(pattern) || !is_connected(g)) return false;
  Graph missing = complement(g);
  std::vector<Vertex> touched;
  for (Vertex v = 0; v < missing.order(); ++v) {
    if (missing.degree(v) > 0) touched.push_back(v);
  }
  if (static_cast<int>(touched.size()) != pattern_order(pattern)) return false;
  return is_isomorphic(induced_subgraph(missing, touched), pattern_graph(pattern));
}

std::optional<RuleHit> characterize_large(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  int total = g.size() + g.order();
  if (is_complete(g)) return RuleHit{"complete", total, "K_n"};
  struct Template {
    Pattern pattern;
    const char* rule;
    int loss;
  };
  static constexpr Template kTemplates[] = {
      {Pattern::kK2, "thm7", 2},         {Pattern::kK3, "thm8", 3},        {Pattern::kP3, "thm8", 3},
      {Pattern::kP4, "thm9", 4},         {Pattern::k2K2, "thm9", 4},       {Pattern::kK4, "thm9", 4},
      {Pattern::kK4MinusK2, "thm9", 4},  {Pattern::kK4MinusP3, "thm9", 4}, {Pattern::kC4, "thm9", 4},
      {Pattern::kK13, "thm9", 4},
  };
  for (const auto& t : kTemplates) {
    if (matches_complete_minus(g, t.pattern)) {
      return RuleHit{t.rule, total - t.loss, "K_n-" + std::string(pattern_name(t.pattern))};
    }
  }
  return std::nullopt;
}

TheoremVerdict classify(const Graph& g) {
  TheoremVerdict verdict;
  if (!is_connected(g)) {
    verdict.rule = "disconnected";
    verdict.value = 0;
    return verdict;
  }
  int n = g.order();
  int m = g.size();
  auto& hits = verdict.hits;

  if (is_complete(g)) hits.push_back({"complete", m + n, "K_" + std::to_string(n)});
  if (auto parts = multipartite_structure(g); parts && n >= 2) {
    std::ostringstream sizes;
    for (std::size_t i = 0; i < parts->sizes().size(); ++i) sizes << (i ? "," : "") << parts->sizes()[i];
    hits.push_back({"example1", m + parts->parts() - parts->nontrivial_parts(), "parts=" + sizes.str()});
  }
  if (n > 3) {
    int l = spanning_stats(g).l;
    int lower = m - n + 2 + l;
    if (is_triangle_free(g)) hits.push_back({"thm2b", lower, "triangle-free"});
    if (auto d = diameter(g); d && *d >= 3) hits.push_back({"thm2d", lower, "diameter " + std::to_string(*d)});
    if (auto cuts = cut_vertices(g); !cuts.empty()) {
      hits.push_back({"thm2e", lower, "cut vertex " + std::to_string(cuts.front())});
    }
    if (degree_condition(g)) hits.push_back({"thm2c", lower, "max degree " + std::to_string(max_degree(g))});
    if (complement_four_connected(g)) hits.push_back({"thm2a", lower, "complement 4-connected"});
  }
  if (n >= 2) {
    if (is_path(g)) hits.push_back({"thm3", 3, "path"});
    if (in_tmc4_class(g)) hits.push_back({"thm4", 4, is_cycle(g) ? "cycle" : "tree with 3 leaves"});
    if (in_tmc5_class(g)) hits.push_back({"thm5", 5, is_tree_graph(g) ? "tree with 4 leaves" : "unicyclic, l=3"});
    if (in_tmc6_class(g)) hits.push_back({"thm6", 6, "tmc-6 class"});
  }
  if (auto large = characterize_large(g); large && large->rule != "complete") hits.push_back(*large);

  if (!hits.empty()) {
    verdict.rule = hits.front().rule;
    verdict.value = hits.front().value;
    verdict.detail = hits.front().detail;
  }
  return verdict;
}

namespace {

struct ClassResult {
  SweepRow row;
  std::vector<std::string> problems;
};

ClassResult check_class(const Graph& g) {
  ClassResult result;
  auto& row = result.row;
  auto& problems = result.problems;
  int n = g.order();
  int m = g.size();
  row.graph6 = emit_graph6(g);
  row.n = n;
  row.m = m;
  row.l = n >= 2 ? spanning_stats(g).l : 0;

  TmcOutcome exact = tmc_exact(g, SolverOptions{.max_n = kSolverMaxOrder});
  if (!exact.exact()) {
    problems.push_back("exact solver did not finish");
    return result;
  }
  int tmc = *exact.value;
  row.tmc = tmc;

  TheoremVerdict verdict = classify(g);
  for (const auto& hit : verdict.hits) {
    row.rules.push_back(hit.rule);
    if (hit.value != tmc) {
      problems.push_back(hit.rule + " predicts " + std::to_string(hit.value) + ", exact " + std::to_string(tmc));
    }
  }
  row.predicted = verdict.value;

  int lower = tmc_lower_bound(g);
  int upper = tmc_upper_bound(g);
  if (lower > tmc || tmc > upper) {
    problems.push_back("bounds [" + std::to_string(lower) + "," + std::to_string(upper) + "] miss " + std::to_string(tmc));
  }
  if (exact.certificate) {
    if (!verify_tmc(g, *exact.certificate).ok) problems.push_back("certificate fails verification");
    if (exact.certificate->num_colors() != tmc) problems.push_back("certificate color count differs");
  }

  auto both_ways = [&](bool value_holds, bool predicate_holds, const std::string& what) {
    if (value_holds != predicate_holds) {
      problems.push_back(what + (value_holds ? ": value without predicate" : ": predicate without value"));
    }
  };
  both_ways(tmc == 3, is_path(g), "tmc=3 vs path");
  both_ways(tmc == 4, in_tmc4_class(g), "tmc=4 vs class");
  both_ways(tmc == 5, in_tmc5_class(g), "tmc=5 vs class");
  both_ways(tmc == 6, in_tmc6_class(g), "tmc=6 vs class");
  both_ways(tmc == m + n, is_complete(g), "tmc=m+n vs complete");
  if (n >= 2 && tmc == m + n - 1) problems.push_back("tmc = m+n-1");
  both_ways(tmc == m + n - 2, matches_complete_minus(g, Pattern::kK2), "tmc=m+n-2 vs K_n-K_2");
  both_ways(tmc == m + n - 3,
            matches_complete_minus(g, Pattern::kK3) || matches_complete_minus(g, Pattern::kP3),
            "tmc=m+n-3 vs {K_n-K_3, K_n-P_3}");
  bool in_thm9 = false;
  for (Pattern p : {Pattern::kP4, Pattern::k2K2, Pattern::kK4, Pattern::kK4MinusK2, Pattern::kK4MinusP3,
                    Pattern::kC4, Pattern::kK13}) {
    in_thm9 = in_thm9 || matches_complete_minus(g, p);
  }
  both_ways(tmc == m + n - 4, in_thm9, "tmc=m+n-4 vs seven-graph list");

  row.agree = problems.empty();
  for (auto& p : problems) p = row.graph6 + ": " + p;
  return result;
}

}  // namespace

SweepReport sweep_crosscheck(const SweepOptions& options) {
  if (options.n_max > kEnumerateMaxOrder) throw LimitError("sweep supports n_max <= 7");
  SweepReport report;
  report.classes_per_order.assign(options.n_max + 1, 0);
  std::vector<Graph> graphs;
  for (int n = 1; n <= options.n_max; ++n) {
    auto classes = enumerate_connected_graphs(n);
    int stride = n == 7 ? std::max(1, options.sample_stride) : 1;
    for (std::size_t i = 0; i < classes.size(); i += stride) graphs.push_back(classes[i]);
    report.classes_per_order[n] = static_cast<int>((classes.size() + stride - 1) / stride);
  }
  std::vector<ClassResult> results(graphs.size());
  parallel_for(graphs.size(), options.jobs, [&](std::size_t i) { results[i] = check_class(graphs[i]); });
  for (auto& r : results) {
    report.rows.push_back(std::move(r.row));
    for (auto& p : r.problems) report.discrepancies.push_back(std::move(p));
  }
  return report;
}

std::string sweep_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "graph6,n,m,l,tmc_exact,matched_rules,predicted_value,agree\n";
  for (const auto& row : report.rows) {
    std::string rules;
    for (std::size_t i = 0; i < row.rules.size(); ++i) rules += (i ? ";" : "") + row.rules[i];
    // graph6 bytes lie in '?'..'~', so fields never need quoting.
    out << row.graph6 << ',' << row.n << ',' << row.m << ',' << row.l << ',' << row.tmc << ',' << rules << ','
        << (row.predicted ? std::to_string(*row.predicted) : "") << ',' << (row.agree ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace tmc
