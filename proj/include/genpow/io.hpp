#pragma once

// Plain-text graph and hypergraph files.
//
//   graph <n> <m>                 hypergraph <k> <n> <m>
//   <u> <v>        (m lines)      <v_1> ... <v_k>   (m lines)
//
// Vertices are 0-based. Everything after '#' on a line is a comment; blank
// lines are skipped. Serialization writes edges in canonical sorted order.

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "genpow/graph.hpp"

namespace genpow {

class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    auto raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

inline std::size_t to_index(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw parse_error(line, "expected a nonnegative integer, got '" + std::string(tok) + "'");
  return value;
}

} // namespace detail

inline SimpleGraph parse_graph(std::string_view text) {
  auto lines = detail::tokenize(text);
  if (lines.empty()) throw parse_error(1, "missing 'graph <n> <m>' header");
  const auto& head = lines.front();
  if (head.tokens.size() != 3 || head.tokens[0] != "graph")
    throw parse_error(head.number, "malformed header, expected 'graph <n> <m>'");
  auto n = detail::to_index(head.tokens[1], head.number);
  auto m = detail::to_index(head.tokens[2], head.number);
  if (lines.size() - 1 != m)
    throw parse_error(lines.back().number, "expected " + std::to_string(m) + " edge lines, found " +
                                               std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != 2) throw parse_error(line.number, "edge must have exactly 2 vertices");
    auto u = detail::to_index(line.tokens[0], line.number);
    auto v = detail::to_index(line.tokens[1], line.number);
    if (u >= n || v >= n) throw parse_error(line.number, "vertex out of range");
    if (u == v) throw parse_error(line.number, "self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw parse_error(line.number, "duplicate edge");
    edges.emplace_back(u, v);
  }
  return SimpleGraph(n, std::move(edges));
}

inline Hypergraph parse_hypergraph(std::string_view text) {
  auto lines = detail::tokenize(text);
  if (lines.empty()) throw parse_error(1, "missing 'hypergraph <k> <n> <m>' header");
  const auto& head = lines.front();
  if (head.tokens.size() != 4 || head.tokens[0] != "hypergraph")
    throw parse_error(head.number, "malformed header, expected 'hypergraph <k> <n> <m>'");
  auto k = detail::to_index(head.tokens[1], head.number);
  auto n = detail::to_index(head.tokens[2], head.number);
  auto m = detail::to_index(head.tokens[3], head.number);
  if (k < 2) throw parse_error(head.number, "edge size k must be at least 2");
  if (n == 0) throw parse_error(head.number, "hypergraph needs at least one vertex");
  if (lines.size() - 1 != m)
    throw parse_error(lines.back().number, "expected " + std::to_string(m) + " edge lines, found " +
                                               std::to_string(lines.size() - 1));
  std::vector<std::vector<vertex_t>> edges;
  std::set<std::vector<vertex_t>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != k)
      throw parse_error(line.number, "edge has " + std::to_string(line.tokens.size()) + " vertices, expected " +
                                         std::to_string(k));
    std::vector<vertex_t> e;
    for (auto tok : line.tokens) {
      auto v = detail::to_index(tok, line.number);
      if (v >= n) throw parse_error(line.number, "vertex out of range");
      e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw parse_error(line.number, "edge repeats a vertex");
    if (!seen.insert(e).second) throw parse_error(line.number, "duplicate edge");
    edges.push_back(std::move(e));
  }
  return Hypergraph(k, n, std::move(edges));
}

inline std::string serialize_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.sorted_edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << "hypergraph " << h.uniformity() << ' ' << h.order() << ' ' << h.size() << '\n';
  for (const auto& e : h.sorted_edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

} // namespace genpow
