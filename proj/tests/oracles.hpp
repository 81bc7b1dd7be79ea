#pragma once

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tmc/graph.hpp"

namespace oracle {

using tmc::Edge;
using tmc::Graph;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

// graph6 straight from the format description: N(n) then the upper triangle
// x(0,1) x(0,2) x(1,2) x(0,3) ... in 6-bit groups, each plus 63.
inline std::string graph6(const Graph& g) {
  int n = g.order();
  auto a = adjacency(g);
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(a[i][j] ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = (v << 1) | bits[k + b];
    out.push_back(static_cast<char>(v + 63));
  }
  return out;
}

inline bool connected(int n, const std::vector<std::vector<bool>>& a) {
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (a[v][w] && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

// Connected isomorphism classes on n vertices: every labeled graph, reduced
// to the smallest adjacency bit string over all vertex permutations.
inline int count_connected_classes(int n) {
  int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> idx;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) idx.push_back({i, j});
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::set<std::uint32_t> classes;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
    for (int k = 0; k < pairs; ++k) {
      if (mask >> k & 1) a[idx[k].first][idx[k].second] = a[idx[k].second][idx[k].first] = true;
    }
    if (!connected(n, a)) continue;
    std::uint32_t best = UINT32_MAX;
    for (const auto& q : perms) {
      std::uint32_t code = 0;
      for (int k = 0; k < pairs; ++k) {
        if (a[q[idx[k].first]][q[idx[k].second]]) code |= 1u << k;
      }
      best = std::min(best, code);
    }
    classes.insert(best);
  }
  return static_cast<int>(classes.size());
}

// Max-flow vertex connectivity (Menger) on the split-vertex network.
inline int max_vertex_disjoint_paths(const Graph& g, int s, int t) {
  int n = g.order();
  int N = 2 * n;
  std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
  for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
  for (const auto& e : g.edges()) {
    cap[2 * e.u + 1][2 * e.v] = n;
    cap[2 * e.v + 1][2 * e.u] = n;
  }
  int flow = 0;
  int source = 2 * s + 1;
  int sink = 2 * t;
  while (true) {
    std::vector<int> prev(N, -1);
    prev[source] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && prev[sink] < 0) {
      int v = q.front();
      q.pop();
      for (int w = 0; w < N; ++w) {
        if (prev[w] < 0 && cap[v][w] > 0) {
          prev[w] = v;
          q.push(w);
        }
      }
    }
    if (prev[sink] < 0) return flow;
    for (int v = sink; v != source; v = prev[v]) {
      cap[prev[v]][v] -= 1;
      cap[v][prev[v]] += 1;
    }
    ++flow;
  }
}

inline int vertex_connectivity(const Graph& g) {
  int n = g.order();
  if (n <= 1) return 0;
  int best = n - 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.has_edge(s, t)) best = std::min(best, max_vertex_disjoint_paths(g, s, t));
  return best;
}

// Max leaves over all spanning trees, by trying every (n-1)-edge subset.
inline int max_leaves_by_trees(const Graph& g) {
  int n = g.order();
  int m = g.size();
  int best = -1;
  std::vector<int> choose(m, 0);
  std::fill(choose.end() - (n - 1), choose.end(), 1);
  do {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    std::vector<int> deg(n, 0);
    bool acyclic = true;
    for (int i = 0; i < m && acyclic; ++i) {
      if (!choose[i]) continue;
      const Edge& e = g.edges()[i];
      int a = find(e.u), b = find(e.v);
      if (a == b) acyclic = false;
      parent[a] = b;
      ++deg[e.u];
      ++deg[e.v];
    }
    if (!acyclic) continue;
    best = std::max(best, static_cast<int>(std::count(deg.begin(), deg.end(), 1)));
  } while (std::next_permutation(choose.begin(), choose.end()));
  return best;
}

// Smallest connected dominating set size by scanning all vertex subsets.
inline int connected_domination_number(const Graph& g) {
  int n = g.order();
  auto a = adjacency(g);
  int best = n;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int size = __builtin_popcount(s);
    if (size >= best) continue;
    bool dominating = true;
    for (int v = 0; v < n && dominating; ++v) {
      if (s >> v & 1) continue;
      bool hit = false;
      for (int w = 0; w < n; ++w) hit = hit || ((s >> w & 1) && a[v][w]);
      dominating = hit;
    }
    if (!dominating) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) members.push_back(v);
    std::vector<std::vector<bool>> sub(size, std::vector<bool>(size));
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) sub[i][j] = a[members[i]][members[j]];
    if (connected(size, sub)) best = size;
  }
  return best;
}

// A pair is served by color c if some simple u-v path has all edges and all
// internal vertices colored c. Plain path enumeration.
inline bool total_monochromatic(const Graph& g, const std::vector<int>& vcol, const std::vector<int>& ecol) {
  int n = g.order();
  std::vector<std::vector<int>> ecolor(n, std::vector<int>(n, -1));
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edges()[i];
    ecolor[e.u][e.v] = ecolor[e.v][e.u] = ecol[i];
  }
  std::vector<bool> on_path(n, false);
  std::function<bool(int, int, int)> walk = [&](int v, int target, int c) {
    for (int w = 0; w < n; ++w) {
      if (ecolor[v][w] != c || on_path[w]) continue;
      if (w == target) return true;
      if (vcol[w] != c) continue;
      on_path[w] = true;
      bool ok = walk(w, target, c);
      on_path[w] = false;
      if (ok) return true;
    }
    return false;
  };
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (ecolor[u][v] >= 0) continue;
      std::set<int> colors;
      for (int w = 0; w < n; ++w)
        if (ecolor[u][w] >= 0) colors.insert(ecolor[u][w]);
      bool ok = false;
      for (int c : colors) {
        on_path.assign(n, false);
        on_path[u] = true;
        if (walk(u, v, c)) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
  }
  return true;
}

// tmc by brute force over every partition of V + E into color classes.
inline int tmc_by_partitions(const Graph& g) {
  int n = g.order();
  int total = n + g.size();
  std::vector<int> label(total, 0);
  int best = 0;
  std::function<void(int, int)> rec = [&](int k, int used) {
    if (used + (total - k) <= best) return;
    if (k == total) {
      std::vector<int> vcol(label.begin(), label.begin() + n);
      std::vector<int> ecol(label.begin() + n, label.end());
      if (total_monochromatic(g, vcol, ecol)) best = used;
      return;
    }
    for (int c = used; c >= 0; --c) {
      label[k] = c;
      rec(k + 1, std::max(used, c + 1));
    }
  };
  rec(0, 0);
  return best;
}

// Random connected graph: a random recursive tree plus independent extra edges,
// relabeled by a random permutation.
inline Graph random_connected(int n, double extra, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> present;
  for (int v = 1; v < n; ++v) {
    int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.push_back({u, v});
    present.insert({u, v});
  }
  std::bernoulli_distribution coin(extra);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (!present.count({u, v}) && coin(rng)) edges.push_back({u, v});
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
    if (u > v) std::swap(u, v);
  }
  return Graph(n, edges);
}

}  // namespace oracle
