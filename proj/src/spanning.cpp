#include "tmc/spanning.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "tmc/error.hpp"

namespace tmc {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

bool induces_connected(const std::vector<Mask>& adj, Mask set) {
  if (set == 0) return false;
  Mask seen = set & (~set + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == set;
}

class CdsSearch {
 public:
  explicit CdsSearch(const Graph& g) : n_(g.order()), adj_(g.adjacency_masks()) {
    full_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    for (Vertex v = 0; v < n_; ++v) closed_.push_back(adj_[v] | bit(v));
  }

  // Lexicographically smallest connected dominating set of minimum size.
  std::vector<Vertex> minimum() {
    for (int k = 1; k <= n_; ++k) {
      chosen_.clear();
      if (pick(0, k, 0, 0)) return chosen_;
    }
    return {};  // unreachable for connected graphs
  }

 private:
  bool pick(Vertex from, int left, Mask set, Mask dominated) {
    if (left == 0) return dominated == full_ && induces_connected(adj_, set);
    for (Vertex v = from; v <= n_ - left; ++v) {
      chosen_.push_back(v);
      if (pick(v + 1, left - 1, set | bit(v), dominated | closed_[v])) return true;
      chosen_.pop_back();
    }
    return false;
  }

  int n_;
  std::vector<Mask> adj_;
  std::vector<Mask> closed_;
  Mask full_ = 0;
  std::vector<Vertex> chosen_;
};

// Spanning tree with every vertex outside `cds` a leaf.
std::vector<Edge> tree_from_cds(const Graph& g, const std::vector<Vertex>& cds) {
  std::vector<char> in_cds(g.order(), 0);
  for (Vertex v : cds) in_cds[v] = 1;
  std::vector<char> seen(g.order(), 0);
  std::vector<Edge> tree;
  std::vector<Vertex> queue{cds.front()};
  seen[cds.front()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (in_cds[w] && !seen[w]) {
        seen[w] = 1;
        tree.push_back({std::min(v, w), std::max(v, w)});
        queue.push_back(w);
      }
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_cds[v]) continue;
    for (Vertex w : g.neighbors(v)) {
      if (in_cds[w]) {
        tree.push_back({std::min(v, w), std::max(v, w)});
        break;
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

int count_leaves(int n, std::span<const Edge> tree) {
  std::vector<int> degree(n, 0);
  for (const auto& e : tree) {
    ++degree[e.u];
    ++degree[e.v];
  }
  return static_cast<int>(std::count(degree.begin(), degree.end(), 1));
}

}  // namespace

SpanningStats spanning_stats(const Graph& g) {
  int n = g.order();
  if (n > kSpanningMaxOrder) throw LimitError("spanning_stats supports n <= 64");
  if (!is_connected(g)) throw DisconnectedError();
  SpanningStats stats;
  if (n <= 1) {
    stats.degenerate = true;
    return stats;
  }
  if (n == 2) {
    stats.l = 2;
    stats.witness_tree = {{0, 1}};
    return stats;
  }
  stats.witness_cds = CdsSearch(g).minimum();
  stats.gamma_c = static_cast<int>(stats.witness_cds.size());
  stats.l = n - stats.gamma_c;
  stats.q = stats.gamma_c;
  stats.witness_tree = tree_from_cds(g, stats.witness_cds);
  return stats;
}

std::vector<Edge> greedy_spanning_tree(const Graph& g) {
  int n = g.order();
  if (!is_connected(g)) throw DisconnectedError();
  if (n <= 1) return {};
  std::vector<char> in_tree(n, 0);
  std::vector<int> outside(n);  // neighbors not yet in the tree
  for (Vertex v = 0; v < n; ++v) outside[v] = g.degree(v);
  std::vector<Edge> tree;
  std::vector<Vertex> members;

  auto expand = [&](Vertex v) {
    for (Vertex w : g.neighbors(v)) {
      if (in_tree[w]) continue;
      in_tree[w] = 1;
      members.push_back(w);
      tree.push_back({std::min(v, w), std::max(v, w)});
      for (Vertex x : g.neighbors(w)) --outside[x];
    }
  };

  Vertex root = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) > g.degree(root)) root = v;
  }
  in_tree[root] = 1;
  members.push_back(root);
  for (Vertex x : g.neighbors(root)) --outside[x];
  expand(root);

  while (static_cast<int>(members.size()) < n) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (in_tree[v] && outside[v] > 0 && (best < 0 || outside[v] > outside[best])) best = v;
    }
    expand(best);
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

int leaf_lower_bound(const Graph& g) { return count_leaves(g.order(), greedy_spanning_tree(g)); }

bool is_tree(std::span<const Edge> edges) {
  if (edges.empty()) return false;
  std::map<Vertex, Vertex> parent;  // union-find over touched vertices
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : edges) {
    parent.try_emplace(e.u, e.u);
    parent.try_emplace(e.v, e.v);
  }
  for (const auto& e : edges) {
    Vertex a = find(e.u);
    Vertex b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return edges.size() + 1 == parent.size();
}

bool is_spanning_tree(int n, std::span<const Edge> edges) {
  if (n == 1) return edges.empty();
  if (!is_tree(edges)) return false;
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) return false;
  }
  return static_cast<int>(edges.size()) == n - 1;
}

LeafProfile tree_leaf_profile(std::span<const Edge> tree) {
  if (!is_tree(tree)) throw Error("edge set is not a tree");
  std::map<Vertex, int> degree;
  for (const auto& e : tree) {
    ++degree[e.u];
    ++degree[e.v];
  }
  LeafProfile profile;
  for (auto [v, d] : degree) (d == 1 ? profile.leaves : profile.internal).push_back(v);
  return profile;
}

}  // namespace tmc
