#include "tmc/generators.hpp"

#include <queue>
#include <string>

#include "tmc/error.hpp"

namespace tmc {

namespace {

struct PatternInfo {
  Pattern pattern;
  std::string_view name;
  int order;
  std::vector<Edge> edges;
};

const std::vector<PatternInfo>& pattern_table() {
  static const std::vector<PatternInfo> table = {
      {Pattern::kK2, "K2", 2, {{0, 1}}},
      {Pattern::kP3, "P3", 3, {{0, 1}, {1, 2}}},
      {Pattern::kK3, "K3", 3, {{0, 1}, {0, 2}, {1, 2}}},
      {Pattern::kP4, "P4", 4, {{0, 1}, {1, 2}, {2, 3}}},
      {Pattern::k2K2, "2K2", 4, {{0, 1}, {2, 3}}},
      {Pattern::kK4, "K4", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
      {Pattern::kK4MinusK2, "K4-K2", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}},
      {Pattern::kK4MinusP3, "K4-P3", 4, {{0, 2}, {0, 3}, {1, 3}, {2, 3}}},
      {Pattern::kC4, "C4", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
      {Pattern::kK13, "K13", 4, {{0, 1}, {0, 2}, {0, 3}}},
  };
  return table;
}

const PatternInfo& info(Pattern p) {
  for (const auto& entry : pattern_table()) {
    if (entry.pattern == p) return entry;
  }
  throw Error("unknown pattern");
}

}  // namespace

std::string_view pattern_name(Pattern p) { return info(p).name; }

Pattern parse_pattern(std::string_view name) {
  for (const auto& entry : pattern_table()) {
    if (entry.name == name) return entry.pattern;
  }
  throw Error("unknown pattern '" + std::string(name) + "'");
}

int pattern_order(Pattern p) { return info(p).order; }

Graph pattern_graph(Pattern p) { return Graph(info(p).order, info(p).edges); }

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  if (n < 1) throw Error("path needs at least one vertex");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  if (leaves < 0) throw Error("star needs a non-negative leaf count");
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, edges);
}

Graph complete_multipartite(const MultipartiteSpec& spec) {
  std::vector<int> part;
  for (int i = 0; i < spec.parts(); ++i) part.insert(part.end(), spec.sizes()[i], i);
  int n = static_cast<int>(part.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part[u] != part[v]) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph complete_minus(int n, Pattern pattern) {
  const auto& p = info(pattern);
  if (p.order > n) {
    throw Error("pattern " + std::string(p.name) + " does not fit in " + std::to_string(n) + " vertices");
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      bool deleted = false;
      for (const auto& e : p.edges) deleted = deleted || (e == Edge{u, v});
      if (!deleted) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph tree_from_prufer(std::span<const int> seq) {
  int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int v : seq) {
    if (v < 0 || v >= n) throw Error("Pruefer entry out of range");
    ++degree[v];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (int v : seq) {
    int leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, v});
    if (--degree[v] == 1) leaves.push(v);
  }
  int a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return Graph(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});          // outer cycle
    edges.push_back({i, i + 5});                // spokes
    edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
  }
  return Graph(10, edges);
}

}  // namespace tmc
