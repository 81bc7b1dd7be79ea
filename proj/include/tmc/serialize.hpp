#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tmc/coloring.hpp"
#include "tmc/graph.hpp"
#include "tmc/solver.hpp"
#include "tmc/spanning.hpp"
#include "tmc/theorems.hpp"

namespace tmc {

inline constexpr std::string_view kSchema = "tmc-lab/1";

/// {"schema","n","vertex_colors":[..],"edge_colors":[[u,v,c],..]} with u < v
/// and edges in sorted order.
nlohmann::ordered_json coloring_to_json(const Graph& g, const TotalColoring& col);

/// Inverse of coloring_to_json. Edges may come in any order but must match
/// g's edge set exactly.
TotalColoring coloring_from_json(const Graph& g, const nlohmann::json& doc);

nlohmann::ordered_json outcome_to_json(const Graph& g, const TmcOutcome& outcome);
nlohmann::ordered_json verdict_to_json(const TheoremVerdict& verdict);
nlohmann::ordered_json stats_to_json(const SpanningStats& stats);

}  // namespace tmc
