#include "tmc/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "tmc/error.hpp"

namespace tmc {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kBias = 63;

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim_line_end(text);
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  if (pos >= text.size()) throw ParseError("graph6: missing size byte", pos);

  int size_byte = static_cast<unsigned char>(text[pos]);
  if (size_byte < kBias || size_byte > 126) throw ParseError("graph6: malformed size byte", pos);
  if (size_byte == 126) throw ParseError("graph6: orders above 62 are not supported", pos);
  int n = size_byte - kBias;
  ++pos;

  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes for n=" +
                         std::to_string(n) + ", found " + std::to_string(text.size() - pos),
                     std::min(text.size(), pos + bytes));
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t b = 0; b < bytes; ++b) {
    int value = static_cast<unsigned char>(text[pos + b]);
    if (value < kBias || value > kBias + 63) throw ParseError("graph6: byte out of range", pos + b);
    value -= kBias;
    for (int k = 5; k >= 0; --k, ++bit) {
      bool set = (value >> k) & 1;
      if (bit >= bits) {
        if (set) throw ParseError("graph6: padding bits must be zero", pos + b);
        continue;
      }
      if (set) {
        // Column-major upper triangle: (0,1),(0,2),(1,2),(0,3),...
        int j = 1;
        std::size_t start = 0;
        while (start + j <= bit) {
          start += j;
          ++j;
        }
        edges.push_back({static_cast<int>(bit - start), j});
      }
    }
  }
  return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
  int n = g.order();
  if (n > kGraph6MaxOrder) throw LimitError("graph6 emitter supports n <= 62");
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<long long> numbers;
  std::vector<std::size_t> offsets;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || value < 0) throw ParseError("edge list: expected a non-negative integer", i);
    numbers.push_back(value);
    offsets.push_back(i);
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      throw ParseError("edge list: unexpected character", i);
    }
  }
  if (numbers.size() < 2) throw ParseError("edge list: missing \"n m\" header", 0);
  long long n = numbers[0];
  long long m = numbers[1];
  if (static_cast<long long>(numbers.size()) != 2 + 2 * m) {
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges", text.size());
  }
  std::vector<Edge> edges;
  for (long long k = 0; k < m; ++k) {
    long long u = numbers[2 + 2 * k];
    long long v = numbers[3 + 2 * k];
    std::size_t at = offsets[2 + 2 * k];
    if (u >= n || v >= n) throw ParseError("edge list: vertex out of range in edge " + std::to_string(k), at);
    if (u >= v) throw ParseError("edge list: edge " + std::to_string(k) + " must be written u v with u < v", at);
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "auto") return GraphFormat::kAuto;
  if (name == "graph6" || name == "g6") return GraphFormat::kGraph6;
  if (name == "edgelist" || name == "edge-list") return GraphFormat::kEdgeList;
  throw Error("unknown graph format '" + std::string(name) + "'");
}

std::vector<Graph> read_graphs(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kAuto) {
    std::string_view body = trim(text);
    if (body.empty()) throw ParseError("empty graph input", 0);
    format = std::isdigit(static_cast<unsigned char>(body.front())) ? GraphFormat::kEdgeList
                                                                     : GraphFormat::kGraph6;
  }
  if (format == GraphFormat::kEdgeList) return {parse_edge_list(text)};

  std::vector<Graph> graphs;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    if (!line.empty()) {
      try {
        graphs.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), static_cast<std::size_t>(line.data() - text.data()) + e.offset());
      }
    }
    start = end + 1;
  }
  if (graphs.empty()) throw ParseError("no graphs in input", 0);
  return graphs;
}

}  // namespace tmc
