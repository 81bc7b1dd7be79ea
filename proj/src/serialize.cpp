#include "tmc/serialize.hpp"

#include <map>

#include "tmc/error.hpp"
#include "tmc/graph_io.hpp"

namespace tmc {

nlohmann::ordered_json coloring_to_json(const Graph& g, const TotalColoring& col) {
  if (!col.fits(g)) throw Error("coloring does not fit the graph");
  nlohmann::ordered_json doc;
  doc["schema"] = kSchema;
  doc["n"] = g.order();
  doc["vertex_colors"] = col.vertex_color;
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    edges.push_back({e.u, e.v, col.edge_color[i]});
  }
  doc["edge_colors"] = std::move(edges);
  return doc;
}

TotalColoring coloring_from_json(const Graph& g, const nlohmann::json& doc) {
  try {
    if (doc.contains("schema") && doc.at("schema").get<std::string>() != kSchema) {
      throw Error("unsupported schema '" + doc.at("schema").get<std::string>() + "'");
    }
    if (doc.contains("n") && doc.at("n").get<int>() != g.order()) {
      throw Error("coloring is for " + std::to_string(doc.at("n").get<int>()) + " vertices, graph has " +
                  std::to_string(g.order()));
    }
    TotalColoring col;
    col.vertex_color = doc.at("vertex_colors").get<std::vector<Color>>();
    if (static_cast<int>(col.vertex_color.size()) != g.order()) {
      throw Error("expected " + std::to_string(g.order()) + " vertex colors, got " +
                  std::to_string(col.vertex_color.size()));
    }
    const auto& entries = doc.at("edge_colors");
    if (static_cast<int>(entries.size()) != g.size()) {
      throw Error("expected " + std::to_string(g.size()) + " edge colors, got " + std::to_string(entries.size()));
    }
    col.edge_color.assign(g.size(), 0);
    std::vector<char> seen(g.size(), 0);
    for (const auto& entry : entries) {
      if (!entry.is_array() || entry.size() != 3) throw Error("edge color entries must be [u, v, color]");
      int u = entry[0].get<int>();
      int v = entry[1].get<int>();
      int idx = (u >= 0 && v >= 0 && u < g.order() && v < g.order()) ? g.edge_index(u, v) : -1;
      if (idx < 0) throw Error("edge " + std::to_string(u) + "-" + std::to_string(v) + " is not in the graph");
      if (seen[idx]) throw Error("edge " + std::to_string(u) + "-" + std::to_string(v) + " colored twice");
      seen[idx] = 1;
      col.edge_color[idx] = entry[2].get<Color>();
    }
    return col;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed coloring: ") + e.what());
  }
}

nlohmann::ordered_json outcome_to_json(const Graph& g, const TmcOutcome& outcome) {
  nlohmann::ordered_json doc;
  doc["schema"] = kSchema;
  doc["graph6"] = g.order() <= kGraph6MaxOrder ? emit_graph6(g) : "";
  doc["n"] = g.order();
  doc["m"] = g.size();
  doc["method"] = outcome.method;
  doc["exact"] = outcome.exact();
  if (outcome.value) {
    doc["tmc"] = *outcome.value;
  } else {
    doc["tmc"] = nullptr;
  }
  doc["lower"] = outcome.lower;
  doc["upper"] = outcome.upper;
  doc["nodes"] = outcome.nodes;
  if (outcome.family) {
    auto trees = nlohmann::ordered_json::array();
    for (const auto& t : outcome.family->trees) {
      auto edges = nlohmann::ordered_json::array();
      for (const auto& e : t.edges()) edges.push_back({e.u, e.v});
      trees.push_back({{"edges", edges}, {"waste", t.waste()}});
    }
    doc["trees"] = std::move(trees);
  }
  if (outcome.certificate) doc["certificate"] = coloring_to_json(g, *outcome.certificate);
  return doc;
}

nlohmann::ordered_json verdict_to_json(const TheoremVerdict& verdict) {
  nlohmann::ordered_json doc;
  doc["rule"] = verdict.rule;
  if (verdict.value) {
    doc["value"] = *verdict.value;
  } else {
    doc["value"] = nullptr;
  }
  doc["detail"] = verdict.detail;
  auto hits = nlohmann::ordered_json::array();
  for (const auto& h : verdict.hits) hits.push_back({{"rule", h.rule}, {"value", h.value}, {"detail", h.detail}});
  doc["hits"] = std::move(hits);
  return doc;
}

nlohmann::ordered_json stats_to_json(const SpanningStats& stats) {
  nlohmann::ordered_json doc;
  doc["l"] = stats.l;
  doc["q"] = stats.q;
  doc["gamma_c"] = stats.gamma_c;
  doc["degenerate"] = stats.degenerate;
  auto tree = nlohmann::ordered_json::array();
  for (const auto& e : stats.witness_tree) tree.push_back({e.u, e.v});
  doc["witness_tree"] = std::move(tree);
  doc["witness_cds"] = stats.witness_cds;
  return doc;
}

}  // namespace tmc
