#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tmc/graph.hpp"

namespace tmc {

using Color = int;

/// One color per vertex and one per edge of a host graph. `edge_color[i]`
/// belongs to `graph.edges()[i]`.
struct TotalColoring {
  std::vector<Color> vertex_color;
  std::vector<Color> edge_color;

  /// Number of distinct colors used.
  int num_colors() const;
  /// Whether the sizes match g's vertex and edge counts.
  bool fits(const Graph& g) const;

  bool operator==(const TotalColoring&) const = default;
};

struct VerifyResult {
  bool ok = false;
  /// First vertex pair (lexicographic) without a total monochromatic path.
  std::optional<std::pair<Vertex, Vertex>> failing_pair;
};

/// Checks that every vertex pair is joined by a path whose edges and
/// internal vertices share one color. For each color c, u and v must be
/// connected in the subgraph made of c-colored edges and c-colored vertices
/// plus u and v themselves. Throws tmc::Error when the coloring does not fit g.
VerifyResult verify_tmc(const Graph& g, const TotalColoring& col);

/// Elements of one color.
struct ColorClass {
  Color color = 0;
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;
};

struct ClassReport {
  Color color = 0;
  int edge_count = 0;
  /// Edges plus same-colored vertices form one tree.
  bool is_tree = false;
  /// Every vertex of degree >= 2 in the class carries the class color.
  bool internal_colored = false;
};

struct Decomposition {
  std::vector<ColorClass> classes;  // sorted by color
  std::vector<ClassReport> reports; // one per class with at least one edge
};

Decomposition decompose(const Graph& g, const TotalColoring& col);

/// A tree with at least two edges inside some host graph.
class ColorTree {
 public:
  /// Throws tmc::Error unless `edges` is a tree with >= 2 edges.
  explicit ColorTree(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Vertex>& internal() const noexcept { return internal_; }
  /// e + q - 1: colors lost against an all-distinct coloring.
  int waste() const noexcept { return static_cast<int>(edges_.size() + internal_.size()) - 1; }
  bool contains(Vertex v) const;

 private:
  std::vector<Edge> edges_;
  std::vector<Vertex> vertices_;
  std::vector<Vertex> internal_;
};

/// Nontrivial color trees of a simple coloring: pairwise edge-disjoint,
/// sharing at most one vertex, and no vertex internal to two members.
struct TreeFamily {
  std::vector<ColorTree> trees;

  int total_waste() const;
};

/// Throws tmc::Error describing the first violated family invariant
/// (foreign edge, shared edge, two shared vertices, doubly internal vertex).
void check_family(const Graph& g, const TreeFamily& family);

/// Whether every non-adjacent vertex pair of g lies in some member tree.
bool covers_nonadjacent_pairs(const Graph& g, const TreeFamily& family);

/// waste of a tree edge set; throws for fewer than two edges or a non-tree.
int waste(std::span<const Edge> tree);

/// Tree i gets color i on its edges and internal vertices; every other vertex
/// and then every other edge gets a fresh color, in index order. Uses
/// m + n - total_waste() colors.
TotalColoring family_to_coloring(const Graph& g, const TreeFamily& family);

/// All elements distinct: m + n colors.
TotalColoring rainbow_coloring(const Graph& g);

/// Color 0 on the edges and internal vertices of a maximum-leaf spanning tree,
/// fresh colors elsewhere: m - n + 2 + l(G) colors. Throws DisconnectedError.
TotalColoring construct_theorem1(const Graph& g);

}  // namespace tmc
