#include "tmc/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "tmc/error.hpp"

namespace tmc {

namespace {

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : n_(g.order()), adj_(g.adjacency_masks()) {
    best_.fill(~0u);
  }

  std::uint64_t run() {
    if (n_ <= 1) return 0;
    search(0);
    std::uint64_t code = 0;
    for (int j = 1; j < n_; ++j) code = (code << j) | best_[j];
    return code;
  }

 private:
  // Column j of the permuted adjacency matrix: bits (perm[i], perm[j]) for
  // i < j, position 0 most significant.
  std::uint32_t column(int j) const {
    std::uint32_t c = 0;
    for (int i = 0; i < j; ++i) c = (c << 1) | ((adj_[perm_[i]] >> perm_[j]) & 1u);
    return c;
  }

  void search(int depth) {
    if (depth == n_) {
      // Reaching here means the prefix never exceeded best_; keep the smaller.
      if (std::lexicographical_compare(cur_.begin() + 1, cur_.begin() + n_, best_.begin() + 1,
                                       best_.begin() + n_)) {
        best_ = cur_;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_ >> v & 1u) continue;
      perm_[depth] = v;
      cur_[depth] = depth == 0 ? 0 : column(depth);
      if (prefix_not_greater(depth)) {
        used_ |= 1u << v;
        search(depth + 1);
        used_ &= ~(1u << v);
      }
    }
  }

  bool prefix_not_greater(int depth) const {
    for (int j = 1; j <= depth; ++j) {
      if (cur_[j] != best_[j]) return cur_[j] < best_[j];
    }
    return true;
  }

  int n_;
  std::vector<std::uint64_t> adj_;
  std::array<int, kCanonicalMaxOrder> perm_{};
  std::array<std::uint32_t, kCanonicalMaxOrder> cur_{};
  std::array<std::uint32_t, kCanonicalMaxOrder> best_{};
  std::uint32_t used_ = 0;
};

Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  int total = n * (n - 1) / 2;
  int bit = total - 1;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, --bit) {
      if (code >> bit & 1u) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

bool extend_mapping(const Graph& a, const Graph& b, std::vector<int>& map, std::vector<char>& taken,
                    const std::vector<int>& order, std::size_t depth) {
  if (depth == order.size()) return true;
  Vertex v = order[depth];
  for (Vertex w = 0; w < b.order(); ++w) {
    if (taken[w] || a.degree(v) != b.degree(w)) continue;
    bool consistent = true;
    for (std::size_t k = 0; k < depth && consistent; ++k) {
      Vertex u = order[k];
      consistent = a.has_edge(u, v) == b.has_edge(map[u], w);
    }
    if (!consistent) continue;
    map[v] = w;
    taken[w] = 1;
    if (extend_mapping(a, b, map, taken, order, depth + 1)) return true;
    taken[w] = 0;
  }
  map[v] = -1;
  return false;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw LimitError("canonical labeling supports n <= " + std::to_string(kCanonicalMaxOrder));
  }
  return Canonicalizer(g).run();
}

Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da, db;
  for (Vertex v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;

  // Map high-degree vertices first; they constrain the search the most.
  std::vector<int> order(a.order());
  for (Vertex v = 0; v < a.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return a.degree(x) > a.degree(y); });
  std::vector<int> map(a.order(), -1);
  std::vector<char> taken(b.order(), 0);
  return extend_mapping(a, b, map, taken, order, 0);
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n > kEnumerateMaxOrder) {
    throw LimitError("graph enumeration supports n <= " + std::to_string(kEnumerateMaxOrder));
  }
  if (n < 0) throw Error("order must be non-negative");
  static std::recursive_mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::set<std::uint64_t> codes;
  if (n <= 1) {
    codes.insert(0);
  } else {
    // Every graph on n vertices is some graph on n-1 vertices plus a new
    // vertex joined to a subset of them.
    for (const Graph& base : enumerate_graphs(n - 1)) {
      for (std::uint32_t subset = 0; subset < (1u << (n - 1)); ++subset) {
        std::vector<Edge> edges = base.edges();
        for (int v = 0; v < n - 1; ++v) {
          if (subset >> v & 1u) edges.push_back({v, n - 1});
        }
        codes.insert(canonical_code(Graph(n, edges)));
      }
    }
  }
  std::vector<Graph> out;
  for (std::uint64_t code : codes) out.push_back(graph_from_code(n, code));
  cache.emplace(n, out);
  return out;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  std::vector<Graph> out;
  for (auto& g : enumerate_graphs(n)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace tmc
