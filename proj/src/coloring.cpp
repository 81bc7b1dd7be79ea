#include "tmc/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "tmc/error.hpp"
#include "tmc/spanning.hpp"

namespace tmc {

int TotalColoring::num_colors() const {
  std::set<Color> used(vertex_color.begin(), vertex_color.end());
  used.insert(edge_color.begin(), edge_color.end());
  return static_cast<int>(used.size());
}

bool TotalColoring::fits(const Graph& g) const {
  return static_cast<int>(vertex_color.size()) == g.order() &&
         static_cast<int>(edge_color.size()) == g.size();
}

namespace {

// Whether u reaches v through c-colored edges whose inner vertices are c-colored.
bool monochromatic_path(const Graph& g, const TotalColoring& col, Color c, Vertex u, Vertex v,
                        std::vector<char>& seen) {
  std::fill(seen.begin(), seen.end(), 0);
  std::vector<Vertex> stack{u};
  seen[u] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (seen[y] || col.edge_color[g.edge_index(x, y)] != c) continue;
      if (y == v) return true;
      if (col.vertex_color[y] != c) continue;
      seen[y] = 1;
      stack.push_back(y);
    }
  }
  return false;
}

}  // namespace

VerifyResult verify_tmc(const Graph& g, const TotalColoring& col) {
  if (!col.fits(g)) throw Error("coloring does not match the graph's vertices and edges");
  std::vector<char> seen(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u) {
    std::set<Color> start_colors;
    for (Vertex w : g.neighbors(u)) start_colors.insert(col.edge_color[g.edge_index(u, w)]);
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) continue;
      bool joined = false;
      for (Color c : start_colors) {
        if (monochromatic_path(g, col, c, u, v, seen)) {
          joined = true;
          break;
        }
      }
      if (!joined) return {false, std::make_pair(u, v)};
    }
  }
  return {true, std::nullopt};
}

Decomposition decompose(const Graph& g, const TotalColoring& col) {
  if (!col.fits(g)) throw Error("coloring does not match the graph's vertices and edges");
  std::map<Color, ColorClass> by_color;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto& cls = by_color[col.vertex_color[v]];
    cls.color = col.vertex_color[v];
    cls.vertices.push_back(v);
  }
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    auto& cls = by_color[col.edge_color[i]];
    cls.color = col.edge_color[i];
    cls.edges.push_back(g.edges()[i]);
  }

  Decomposition out;
  for (auto& [color, cls] : by_color) {
    if (!cls.edges.empty()) {
      ClassReport report;
      report.color = color;
      report.edge_count = static_cast<int>(cls.edges.size());
      std::map<Vertex, int> degree;
      for (const auto& e : cls.edges) {
        ++degree[e.u];
        ++degree[e.v];
      }
      // A same-colored vertex away from the class edges disconnects it.
      bool stray_vertex = std::any_of(cls.vertices.begin(), cls.vertices.end(),
                                      [&](Vertex v) { return !degree.contains(v); });
      report.is_tree = !stray_vertex && is_tree(cls.edges);
      report.internal_colored = std::all_of(degree.begin(), degree.end(), [&](const auto& entry) {
        return entry.second < 2 || col.vertex_color[entry.first] == color;
      });
      out.reports.push_back(report);
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

ColorTree::ColorTree(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (edges_.size() < 2) throw Error("a color tree needs at least two edges");
  auto profile = tree_leaf_profile(edges_);
  internal_ = std::move(profile.internal);
  vertices_ = internal_;
  vertices_.insert(vertices_.end(), profile.leaves.begin(), profile.leaves.end());
  std::sort(vertices_.begin(), vertices_.end());
}

bool ColorTree::contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

int TreeFamily::total_waste() const {
  int total = 0;
  for (const auto& t : trees) total += t.waste();
  return total;
}

void check_family(const Graph& g, const TreeFamily& family) {
  std::vector<int> internal_owner(g.order(), -1);
  std::vector<int> edge_owner(g.size(), -1);
  for (std::size_t i = 0; i < family.trees.size(); ++i) {
    const auto& tree = family.trees[i];
    for (const auto& e : tree.edges()) {
      int idx = g.edge_index(e.u, e.v);
      if (idx < 0) {
        throw Error("tree " + std::to_string(i) + " uses non-edge {" + std::to_string(e.u) + "," +
                    std::to_string(e.v) + "}");
      }
      if (edge_owner[idx] >= 0) throw Error("trees share edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      edge_owner[idx] = static_cast<int>(i);
    }
    for (Vertex v : tree.internal()) {
      if (internal_owner[v] >= 0) throw Error("vertex " + std::to_string(v) + " is internal to two trees");
      internal_owner[v] = static_cast<int>(i);
    }
    for (std::size_t j = 0; j < i; ++j) {
      int shared = 0;
      for (Vertex v : tree.vertices()) shared += family.trees[j].contains(v) ? 1 : 0;
      if (shared > 1) {
        throw Error("trees " + std::to_string(j) + " and " + std::to_string(i) + " share " +
                    std::to_string(shared) + " vertices");
      }
    }
  }
}

bool covers_nonadjacent_pairs(const Graph& g, const TreeFamily& family) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) continue;
      bool covered = std::any_of(family.trees.begin(), family.trees.end(),
                                 [&](const ColorTree& t) { return t.contains(u) && t.contains(v); });
      if (!covered) return false;
    }
  }
  return true;
}

int waste(std::span<const Edge> tree) {
  return ColorTree(std::vector<Edge>(tree.begin(), tree.end())).waste();
}

TotalColoring family_to_coloring(const Graph& g, const TreeFamily& family) {
  check_family(g, family);
  constexpr Color kUnset = -1;
  TotalColoring col{std::vector<Color>(g.order(), kUnset), std::vector<Color>(g.size(), kUnset)};
  Color next = 0;
  for (const auto& tree : family.trees) {
    for (const auto& e : tree.edges()) col.edge_color[g.edge_index(e.u, e.v)] = next;
    for (Vertex v : tree.internal()) col.vertex_color[v] = next;
    ++next;
  }
  for (auto& c : col.vertex_color) {
    if (c == kUnset) c = next++;
  }
  for (auto& c : col.edge_color) {
    if (c == kUnset) c = next++;
  }
  return col;
}

TotalColoring rainbow_coloring(const Graph& g) { return family_to_coloring(g, TreeFamily{}); }

TotalColoring construct_theorem1(const Graph& g) {
  SpanningStats stats = spanning_stats(g);
  TreeFamily family;
  if (stats.witness_tree.size() >= 2) family.trees.emplace_back(stats.witness_tree);
  return family_to_coloring(g, family);
}

}  // namespace tmc
