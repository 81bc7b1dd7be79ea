#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tmc/graph.hpp"

namespace tmc {

/// Largest order representable with the single-byte graph6 size prefix.
inline constexpr int kGraph6MaxOrder = 62;

/// Parses one graph6 line. An optional ">>graph6<<" header and a trailing
/// newline are accepted. Throws ParseError with the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Encodes g as graph6 (no header, no newline). Throws LimitError for n > 62.
std::string emit_graph6(const Graph& g);

/// Edge-list text: "n m" followed by m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

enum class GraphFormat { kAuto, kGraph6, kEdgeList };

GraphFormat parse_format_name(std::string_view name);

/// Reads every graph in `text`. Auto-detection: a first non-blank line that
/// starts with a digit means edge-list (one graph), otherwise graph6 (one
/// graph per non-blank line).
std::vector<Graph> read_graphs(std::string_view text, GraphFormat format = GraphFormat::kAuto);

}  // namespace tmc
