#include "tmc/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <unordered_set>
#include <vector>

#include "tmc/error.hpp"
#include "tmc/spanning.hpp"

namespace tmc {

int tmc_lower_bound(const Graph& g) {
  if (!is_connected(g)) return 0;
  if (g.order() == 1) return 1;
  return g.size() - g.order() + 2 + spanning_stats(g).l;
}

int tmc_upper_bound(const Graph& g) {
  if (!is_connected(g)) return 0;
  int n = g.order();
  int m = g.size();
  if (is_complete(g)) return m + n;
  return std::min(m + n - 2, m - n + min_degree(g) + 1 + spanning_stats(g).l);
}

namespace {

using Mask = std::uint64_t;

Mask bit(int i) { return Mask{1} << i; }

struct Candidate {
  Mask edges = 0;     // over g.edges() indices
  Mask vertices = 0;
  Mask internal = 0;
  Mask pairs = 0;     // over non-adjacent pair indices
  int waste = 0;
};

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, const SolverOptions& options) : g_(g), options_(options) {
    n_ = g.order();
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (!g.has_edge(u, v)) pairs_.push_back({u, v});
      }
    }
    pair_id_.assign(n_ * n_, -1);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      pair_id_[pairs_[i].u * n_ + pairs_[i].v] = static_cast<int>(i);
      pair_id_[pairs_[i].v * n_ + pairs_[i].u] = static_cast<int>(i);
    }
    all_pairs_ = pairs_.size() == 64 ? ~Mask{0} : bit(static_cast<int>(pairs_.size())) - 1;
  }

  // Returns false when the node limit ran out.
  bool solve(int incumbent_waste, std::vector<int>* family_out) {
    best_waste_ = incumbent_waste;
    generate_candidates(incumbent_waste - 1);
    build_bounds();
    chosen_.clear();
    search(0, 0, 0);
    *family_out = best_family_;
    return !aborted_;
  }

  int best_waste() const { return best_waste_; }
  bool improved() const { return improved_; }
  std::uint64_t nodes() const { return nodes_; }
  const Candidate& candidate(int i) const { return candidates_[i]; }

  std::vector<Edge> tree_edges(const Candidate& c) const {
    std::vector<Edge> edges;
    for (Mask e = c.edges; e; e &= e - 1) edges.push_back(g_.edges()[std::countr_zero(e)]);
    return edges;
  }

 private:
  // Every subtree of g with >= 2 edges, waste <= budget and only useful leaves.
  void generate_candidates(int budget) {
    candidates_.clear();
    if (budget < 2) return;
    const auto& edges = g_.edges();
    std::unordered_set<Mask> seen;
    std::vector<int> degree(n_, 0);

    // Depth-first growth; waste never decreases when a tree grows.
    auto grow = [&](auto&& self, Mask tree_edges, Mask tree_vertices, int internal_count) -> void {
      int edge_count = std::popcount(tree_edges);
      int w = edge_count + internal_count - 1;
      if (edge_count >= 2) record(tree_edges, tree_vertices);
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        bool has_u = tree_vertices & bit(e.u);
        bool has_v = tree_vertices & bit(e.v);
        if (has_u == has_v) continue;
        Vertex anchor = has_u ? e.u : e.v;
        Vertex fresh = has_u ? e.v : e.u;
        int added = degree[anchor] == 1 ? 1 : 0;
        if (w + 1 + added > budget) continue;
        Mask next = tree_edges | bit(static_cast<int>(i));
        if (!seen.insert(next).second) continue;
        ++degree[anchor];
        ++degree[fresh];
        self(self, next, tree_vertices | bit(fresh), internal_count + added);
        --degree[anchor];
        --degree[fresh];
      }
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
      Mask seed = bit(static_cast<int>(i));
      seen.insert(seed);
      degree[edges[i].u] = degree[edges[i].v] = 1;
      grow(grow, seed, bit(edges[i].u) | bit(edges[i].v), 0);
      degree[edges[i].u] = degree[edges[i].v] = 0;
    }
    std::sort(candidates_.begin(), candidates_.end(), [](const Candidate& a, const Candidate& b) {
      return a.waste != b.waste ? a.waste < b.waste : a.edges < b.edges;
    });
    by_pair_.assign(pairs_.size(), {});
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      for (Mask p = candidates_[c].pairs; p; p &= p - 1) by_pair_[std::countr_zero(p)].push_back(static_cast<int>(c));
    }
  }

  void record(Mask tree_edges, Mask tree_vertices) {
    std::vector<int> degree(n_, 0);
    for (Mask e = tree_edges; e; e &= e - 1) {
      const Edge& edge = g_.edges()[std::countr_zero(e)];
      ++degree[edge.u];
      ++degree[edge.v];
    }
    Candidate c;
    c.edges = tree_edges;
    c.vertices = tree_vertices;
    for (Mask vs = tree_vertices; vs; vs &= vs - 1) {
      Vertex v = std::countr_zero(vs);
      if (degree[v] >= 2) {
        c.internal |= bit(v);
        continue;
      }
      // A leaf that pairs with nobody in the tree could be pruned for less waste.
      bool useful = false;
      for (Mask ws = tree_vertices; ws && !useful; ws &= ws - 1) {
        Vertex w = std::countr_zero(ws);
        useful = w != v && pair_id_[v * n_ + w] >= 0;
      }
      if (!useful) return;
    }
    for (Mask vs = tree_vertices; vs; vs &= vs - 1) {
      Vertex v = std::countr_zero(vs);
      for (Mask ws = vs & (vs - 1); ws; ws &= ws - 1) {
        int id = pair_id_[v * n_ + std::countr_zero(ws)];
        if (id >= 0) c.pairs |= bit(id);
      }
    }
    c.waste = std::popcount(tree_edges) + std::popcount(c.internal) - 1;
    candidates_.push_back(c);
  }

  // Per pair, the cheapest waste-per-covered-pair of any candidate through it.
  // Pairs of a simple family are covered exactly once, so summing these over
  // the uncovered pairs never overestimates the remaining waste.
  void build_bounds() {
    share_.assign(pairs_.size(), std::numeric_limits<double>::infinity());
    for (const auto& c : candidates_) {
      double ratio = static_cast<double>(c.waste) / std::popcount(c.pairs);
      for (Mask p = c.pairs; p; p &= p - 1) {
        int id = std::countr_zero(p);
        share_[id] = std::min(share_[id], ratio);
      }
    }
  }

  double remaining_bound(Mask uncovered) const {
    double total = 0;
    for (Mask p = uncovered; p; p &= p - 1) total += share_[std::countr_zero(p)];
    return total;
  }

  bool compatible(const Candidate& c, Mask internal_union) const {
    if (c.internal & internal_union) return false;
    for (int idx : chosen_) {
      if (std::popcount(c.vertices & candidates_[idx].vertices) > 1) return false;
    }
    return true;
  }

  void search(Mask covered, Mask internal_union, int waste) {
    if (aborted_) return;
    if (options_.node_limit && ++nodes_ > options_.node_limit) {
      aborted_ = true;
      return;
    }
    if (!options_.node_limit) ++nodes_;
    if (covered == all_pairs_) {
      if (waste < best_waste_) {
        best_waste_ = waste;
        best_family_ = chosen_;
        improved_ = true;
      }
      return;
    }
    Mask uncovered = all_pairs_ & ~covered;
    double bound = remaining_bound(uncovered);
    if (std::isinf(bound) || waste + std::ceil(bound - 1e-9) >= best_waste_) return;

    int pair = std::countr_zero(uncovered);
    for (int idx : by_pair_[pair]) {
      const Candidate& c = candidates_[idx];
      if (waste + c.waste >= best_waste_) break;  // sorted by waste
      if (!compatible(c, internal_union)) continue;
      chosen_.push_back(idx);
      search(covered | c.pairs, internal_union | c.internal, waste + c.waste);
      chosen_.pop_back();
      if (aborted_) return;
    }
  }

  const Graph& g_;
  SolverOptions options_;
  int n_ = 0;
  std::vector<Edge> pairs_;
  std::vector<int> pair_id_;
  Mask all_pairs_ = 0;
  std::vector<Candidate> candidates_;
  std::vector<std::vector<int>> by_pair_;
  std::vector<double> share_;
  std::vector<int> chosen_;
  std::vector<int> best_family_;
  int best_waste_ = 0;
  bool improved_ = false;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
};

TmcOutcome single_vertex_outcome() {
  TmcOutcome out;
  out.value = out.lower = out.upper = 1;
  out.method = "exact-bnb";
  out.certificate = TotalColoring{{0}, {}};
  out.family = TreeFamily{};
  return out;
}

}  // namespace

TmcOutcome tmc_exact(const Graph& g, const SolverOptions& options) {
  TmcOutcome out;
  if (!is_connected(g)) {
    out.value = out.lower = out.upper = 0;
    out.method = "disconnected";
    return out;
  }
  int n = g.order();
  int m = g.size();
  if (n == 1) return single_vertex_outcome();
  if (n > std::min(options.max_n, kSolverMaxOrder)) {
    out.lower = tmc_lower_bound(g);
    out.upper = tmc_upper_bound(g);
    out.method = "bounds-only";
    return out;
  }

  SpanningStats stats = spanning_stats(g);
  TreeFamily incumbent;
  if (stats.witness_tree.size() >= 2 && !is_complete(g)) incumbent.trees.emplace_back(stats.witness_tree);
  int incumbent_waste = incumbent.total_waste();

  BranchAndBound bnb(g, options);
  std::vector<int> best;
  bool finished = bnb.solve(incumbent_waste, &best);
  out.nodes = bnb.nodes();

  TreeFamily family = incumbent;
  if (bnb.improved()) {
    family.trees.clear();
    for (int idx : best) family.trees.emplace_back(bnb.tree_edges(bnb.candidate(idx)));
  }
  int value = m + n - family.total_waste();
  if (!finished) {
    out.lower = value;
    out.upper = tmc_upper_bound(g);
    out.method = "bounds-only";
    out.certificate = family_to_coloring(g, family);
    out.family = std::move(family);
    return out;
  }
  out.value = out.lower = out.upper = value;
  out.method = "exact-bnb";
  out.certificate = family_to_coloring(g, family);
  out.family = std::move(family);
  return out;
}

namespace {

struct OracleTree {
  std::vector<int> edge_ids;
  std::vector<char> in_tree;   // per vertex
  std::vector<char> internal;  // per vertex
  int waste = 0;
};

// Every edge subset of size >= 2 that forms a tree, by plain enumeration.
std::vector<OracleTree> all_subtrees(const Graph& g) {
  int n = g.order();
  int m = g.size();
  std::vector<OracleTree> trees;
  for (std::uint32_t subset = 0; subset < (1u << m); ++subset) {
    if (std::popcount(subset) < 2) continue;
    std::vector<int> comp(n);
    for (int v = 0; v < n; ++v) comp[v] = v;
    auto root = [&](int v) {
      while (comp[v] != v) v = comp[v];
      return v;
    };
    OracleTree t;
    t.in_tree.assign(n, 0);
    t.internal.assign(n, 0);
    std::vector<int> degree(n, 0);
    bool acyclic = true;
    for (int i = 0; i < m && acyclic; ++i) {
      if (!(subset >> i & 1u)) continue;
      const Edge& e = g.edges()[i];
      int a = root(e.u), b = root(e.v);
      if (a == b) acyclic = false;
      comp[a] = b;
      t.edge_ids.push_back(i);
      t.in_tree[e.u] = t.in_tree[e.v] = 1;
      ++degree[e.u];
      ++degree[e.v];
    }
    if (!acyclic) continue;
    int touched = 0;
    int internal = 0;
    for (int v = 0; v < n; ++v) {
      touched += t.in_tree[v];
      t.internal[v] = degree[v] >= 2;
      internal += t.internal[v];
    }
    if (touched != static_cast<int>(t.edge_ids.size()) + 1) continue;  // a forest, not a tree
    t.waste = static_cast<int>(t.edge_ids.size()) + internal - 1;
    trees.push_back(std::move(t));
  }
  return trees;
}

bool oracle_compatible(const OracleTree& a, const OracleTree& b, int n) {
  int shared = 0;
  for (int v = 0; v < n; ++v) {
    if (a.in_tree[v] && b.in_tree[v]) ++shared;
    if (a.internal[v] && b.internal[v]) return false;
  }
  for (int x : a.edge_ids) {
    if (std::find(b.edge_ids.begin(), b.edge_ids.end(), x) != b.edge_ids.end()) return false;
  }
  return shared <= 1;
}

}  // namespace

int tmc_oracle(const Graph& g) {
  int n = g.order();
  if (n > kOracleMaxOrder) throw LimitError("tmc_oracle supports n <= 5");
  if (!is_connected(g)) return 0;
  if (n == 1) return 1;

  std::vector<OracleTree> trees = all_subtrees(g);
  std::vector<int> family;
  int best = std::numeric_limits<int>::max();

  auto covered = [&]() {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v)) continue;
        bool hit = false;
        for (int t : family) hit = hit || (trees[t].in_tree[u] && trees[t].in_tree[v]);
        if (!hit) return false;
      }
    }
    return true;
  };
  auto visit = [&](auto&& self, std::size_t from, int waste) -> void {
    if (covered()) best = std::min(best, waste);
    for (std::size_t t = from; t < trees.size(); ++t) {
      bool ok = true;
      for (int f : family) ok = ok && oracle_compatible(trees[t], trees[f], n);
      if (!ok) continue;
      family.push_back(static_cast<int>(t));
      self(self, t + 1, waste + trees[t].waste);
      family.pop_back();
    }
  };
  visit(visit, 0, 0);
  return g.size() + n - best;
}

}  // namespace tmc
