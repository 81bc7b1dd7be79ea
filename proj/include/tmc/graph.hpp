#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tmc {

using Vertex = int;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are kept sorted lexicographically and
/// neighbor lists are sorted, so two graphs with the same edge set compare
/// equal and iterate identically.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws tmc::Error on loops, duplicate edges or endpoints outside 0..n-1.
  Graph(int n, std::span<const std::pair<int, int>> edges);
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Position of edge {u,v} in edges(), or -1.
  int edge_index(Vertex u, Vertex v) const;

  /// Neighborhood bitmasks; requires n <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  void build(std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Part sizes of a complete multipartite graph, sorted non-increasing.
class MultipartiteSpec {
 public:
  explicit MultipartiteSpec(std::vector<int> sizes);

  const std::vector<int>& sizes() const noexcept { return sizes_; }
  int parts() const noexcept { return static_cast<int>(sizes_.size()); }
  /// Number of parts with at least two vertices.
  int nontrivial_parts() const noexcept;
  int order() const noexcept;

 private:
  std::vector<int> sizes_;
};

struct Metrics {
  bool connected = false;
  std::optional<int> diameter;  // empty means infinite
  int min_degree = 0;
  int max_degree = 0;
  std::vector<Vertex> cut_vertices;
  bool triangle_free = true;
};

bool is_connected(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);
bool is_complete(const Graph& g);
bool is_triangle_free(const Graph& g);
std::optional<int> diameter(const Graph& g);
std::vector<Vertex> cut_vertices(const Graph& g);
Metrics metrics(const Graph& g);

Graph complement(const Graph& g);

/// Graph with the listed vertices removed, relabeled to stay dense.
Graph remove_vertices(const Graph& g, std::span<const Vertex> removed);
Graph remove_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);
/// Induced subgraph on `keep`, with vertex keep[i] relabeled i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// True iff n > k and no set of fewer than k vertices disconnects g.
/// Exhaustive over all candidate cuts.
bool vertex_connectivity_at_least(const Graph& g, int k);

/// Parts of the complement's connected components when g is complete
/// multipartite (non-adjacency is an equivalence relation); empty otherwise.
std::optional<MultipartiteSpec> multipartite_structure(const Graph& g);

}  // namespace tmc
