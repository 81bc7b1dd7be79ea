#include "tmc/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "tmc/error.hpp"

namespace tmc {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw Error("graph order must be non-negative");
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back({u, v});
  build(std::move(list));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  build(std::vector<Edge>(edges.begin(), edges.end()));
}

void Graph::build(std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw Error("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                  "} has an endpoint outside 0.." + std::to_string(n_ - 1));
    }
    if (e.u == e.v) throw Error("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error("duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }
  edges_ = std::move(edges);
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (n_ > 64) throw LimitError("adjacency masks need n <= 64");
  std::vector<std::uint64_t> masks(n_, 0);
  for (const auto& e : edges_) {
    masks[e.u] |= std::uint64_t{1} << e.v;
    masks[e.v] |= std::uint64_t{1} << e.u;
  }
  return masks;
}

MultipartiteSpec::MultipartiteSpec(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw Error("multipartite spec needs at least one part");
  for (int s : sizes_) {
    if (s < 1) throw Error("multipartite part sizes must be positive");
  }
  std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
}

int MultipartiteSpec::nontrivial_parts() const noexcept {
  return static_cast<int>(std::count_if(sizes_.begin(), sizes_.end(), [](int s) { return s >= 2; }));
}

int MultipartiteSpec::order() const noexcept { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

namespace {

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

// Connectivity of g with the vertices flagged in `removed` deleted.
bool connected_without(const Graph& g, const std::vector<char>& removed) {
  int n = g.order();
  Vertex start = -1;
  int alive = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == alive;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> none(g.order(), 0);
  return connected_without(g, none);
}

int min_degree(const Graph& g) {
  int best = g.order() == 0 ? 0 : g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_complete(const Graph& g) {
  long long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool is_triangle_free(const Graph& g) {
  for (const auto& e : g.edges()) {
    const auto& a = g.neighbors(e.u);
    const auto& b = g.neighbors(e.v);
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i == *j) return false;
      if (*i < *j) ++i; else ++j;
    }
  }
  return true;
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  // Hopcroft-Tarjan low-link, iterative.
  int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> is_cut(n, 0);
  std::vector<std::size_t> next(n, 0);
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    int root_children = 0;
    std::vector<Vertex> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Vertex v = stack.back();
      if (next[v] < g.neighbors(v).size()) {
        Vertex w = g.neighbors(v)[next[v]++];
        if (disc[w] < 0) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          if (v == root) ++root_children;
          stack.push_back(w);
        } else if (w != parent[v]) {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        Vertex p = parent[v];
        if (p >= 0) {
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) is_cut[p] = 1;
        }
      }
    }
    if (root_children >= 2) is_cut[root] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

Metrics metrics(const Graph& g) {
  Metrics m;
  m.connected = is_connected(g);
  m.diameter = m.connected ? diameter(g) : std::nullopt;
  m.min_degree = min_degree(g);
  m.max_degree = max_degree(g);
  m.cut_vertices = cut_vertices(g);
  m.triangle_free = is_triangle_free(g);
  return m;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(g.order(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> label(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) label[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (label[e.u] >= 0 && label[e.v] >= 0) edges.push_back({label[e.u], label[e.v]});
  }
  return Graph(static_cast<int>(keep.size()), edges);
}

Graph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(g.order(), 0);
  for (Vertex v : removed) gone[v] = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Graph remove_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges;
  if (e.u > e.v) std::swap(e.u, e.v);
  for (const auto& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  return Graph(g.order(), edges);
}

Graph add_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges = g.edges();
  edges.push_back(e);
  return Graph(g.order(), edges);
}

bool vertex_connectivity_at_least(const Graph& g, int k) {
  int n = g.order();
  if (k < 1) throw Error("connectivity threshold must be positive");
  if (n <= k) return false;
  std::vector<char> removed(n, 0);
  // Enumerate every vertex subset of size < k in lexicographic order.
  std::function<bool(Vertex, int)> survives = [&](Vertex from, int left) {
    if (!connected_without(g, removed)) return false;
    if (left == 0) return true;
    for (Vertex v = from; v < n; ++v) {
      removed[v] = 1;
      bool ok = survives(v + 1, left - 1);
      removed[v] = 0;
      if (!ok) return false;
    }
    return true;
  };
  return survives(0, k - 1);
}

std::optional<MultipartiteSpec> multipartite_structure(const Graph& g) {
  int n = g.order();
  if (n == 0) return std::nullopt;
  std::vector<int> part(n, -1);
  std::vector<int> sizes;
  for (Vertex v = 0; v < n; ++v) {
    if (part[v] >= 0) continue;
    int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    for (Vertex w = v; w < n; ++w) {
      if (w == v || !g.has_edge(v, w)) {
        if (part[w] >= 0) return std::nullopt;
        part[w] = id;
        ++sizes[id];
      }
    }
  }
  // Non-adjacency must be transitive: members of a part are pairwise
  // non-adjacent and adjacent to everything outside.
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if ((part[u] == part[v]) == g.has_edge(u, v)) return std::nullopt;
    }
  }
  return MultipartiteSpec(std::move(sizes));
}

}  // namespace tmc
