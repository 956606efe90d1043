#pragma once

// Small-graph enumeration. Graphs on n <= 11 vertices are packed into a
// 64-bit upper-triangle adjacency code; the canonical code of a graph is the
// minimum code over all relabelings that respect a degree-based vertex
// ordering, which is an exact isomorphism invariant.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "genpow/graph.hpp"
#include "genpow/matrix_spectral.hpp"
#include "genpow/parity.hpp"

namespace genpow {

using GraphCode = std::uint64_t;

inline constexpr std::size_t max_code_order = 11;

namespace detail {

inline std::size_t pair_bit(std::size_t i, std::size_t j, std::size_t n) {
  // Row-major position of (i, j), i < j, in the strict upper triangle.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline void check_code_order(std::size_t n) {
  if (n < 1 || n > max_code_order)
    throw std::invalid_argument("graph codes support 1 <= n <= " + std::to_string(max_code_order));
}

} // namespace detail

inline GraphCode encode(const SimpleGraph& g) {
  detail::check_code_order(g.order());
  GraphCode code = 0;
  for (auto [u, v] : g.edges()) code |= GraphCode{1} << detail::pair_bit(u, v, g.order());
  return code;
}

inline SimpleGraph decode(GraphCode code, std::size_t n) {
  detail::check_code_order(n);
  std::vector<Edge> edges;
  for (vertex_t i = 0; i < n; ++i)
    for (vertex_t j = i + 1; j < n; ++j)
      if ((code >> detail::pair_bit(i, j, n)) & 1u) edges.emplace_back(i, j);
  return SimpleGraph(n, std::move(edges));
}

inline GraphCode canonical_code(const SimpleGraph& g) {
  const std::size_t n = g.order();
  detail::check_code_order(n);

  // Vertex invariant: degree, then the sorted degrees of the neighbors.
  std::vector<std::vector<std::size_t>> inv(n);
  for (vertex_t v = 0; v < n; ++v) {
    inv[v].push_back(g.degree(v));
    std::vector<std::size_t> nd;
    for (auto w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    inv[v].insert(inv[v].end(), nd.begin(), nd.end());
  }
  std::vector<vertex_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return inv[a] < inv[b]; });

  // Cells of equal invariant; position p of the new labeling draws from the
  // cell covering p.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }

  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }

  GraphCode best = ~GraphCode{0};
  std::function<void(std::size_t)> search = [&](std::size_t c) {
    if (c == cells.size()) {
      GraphCode code = 0;
      std::size_t bit = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++bit)
          if ((adj[order[i]] >> order[j]) & 1u) code |= GraphCode{1} << bit;
      best = std::min(best, code);
      return;
    }
    auto [lo, hi] = cells[c];
    auto first = order.begin() + static_cast<std::ptrdiff_t>(lo);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(hi);
    std::sort(first, last);
    do {
      search(c + 1);
    } while (std::next_permutation(first, last));
  };
  search(0);
  return best;
}

inline SimpleGraph canonical_form(const SimpleGraph& g) { return decode(canonical_code(g), g.order()); }

inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

// One canonical representative per isomorphism class of graphs on n vertices,
// sorted by canonical code. Built by attaching a new vertex to every class on
// n-1 vertices in every possible way.
inline std::vector<GraphCode> graph_classes(std::size_t n) {
  detail::check_code_order(n);
  std::vector<GraphCode> current{0};
  for (std::size_t m = 2; m <= n; ++m) {
    std::set<GraphCode> next;
    for (auto code : current) {
      auto base = decode(code, m - 1);
      for (std::uint32_t subset = 0; subset < (1u << (m - 1)); ++subset) {
        auto edges = base.edges();
        for (vertex_t v = 0; v + 1 < m; ++v)
          if ((subset >> v) & 1u) edges.emplace_back(v, m - 1);
        next.insert(canonical_code(SimpleGraph(m, std::move(edges))));
      }
    }
    current.assign(next.begin(), next.end());
  }
  return current;
}

inline std::vector<SimpleGraph> connected_graph_classes(std::size_t n) {
  std::vector<SimpleGraph> out;
  for (auto code : graph_classes(n)) {
    auto g = decode(code, n);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

struct EnumerationLimits {
  static constexpr std::size_t min_order = 3;
  static constexpr std::size_t max_order = 7;
  static constexpr std::size_t big_order = 8;
};

inline void check_enumeration_order(std::size_t n, bool big) {
  const std::size_t cap = big ? EnumerationLimits::big_order : EnumerationLimits::max_order;
  if (n < EnumerationLimits::min_order || n > cap)
    throw std::out_of_range("enumeration supports " + std::to_string(EnumerationLimits::min_order) +
                            " <= n <= " + std::to_string(cap) + (big ? "" : " (use --big for n=8)"));
}

// Visits every connected non-bipartite graph on n vertices. With dedupe set,
// one canonical representative per isomorphism class in canonical-code order;
// otherwise every labeled graph (n <= 7 only).
inline void enumerate_connected_nonbipartite(std::size_t n, const std::function<void(const SimpleGraph&)>& visit,
                                             bool dedupe = true, bool big = false) {
  check_enumeration_order(n, big);
  if (dedupe) {
    for (auto code : graph_classes(n)) {
      auto g = decode(code, n);
      if (is_connected(g) && !is_bipartite(g)) visit(g);
    }
    return;
  }
  if (n > EnumerationLimits::max_order) throw std::out_of_range("labeled enumeration supports n <= 7");
  const std::size_t pairs = n * (n - 1) / 2;
  for (GraphCode code = 0; code < (GraphCode{1} << pairs); ++code) {
    if (static_cast<std::size_t>(std::popcount(code)) < n) continue; // trees and forests are bipartite
    auto g = decode(code, n);
    if (is_connected(g) && !is_bipartite(g)) visit(g);
  }
}

inline std::vector<SimpleGraph> connected_nonbipartite_classes(std::size_t n, bool big = false) {
  std::vector<SimpleGraph> out;
  enumerate_connected_nonbipartite(n, [&](const SimpleGraph& g) { out.push_back(g); }, true, big);
  return out;
}

struct MinRhoResult {
  double min_value = 0.0;
  std::vector<SimpleGraph> argmin; // canonical forms, sorted by code
  std::size_t candidates = 0;
};

// Minimum matrix spectral radius over connected non-bipartite graphs on n
// vertices. Every class within tie_window of the minimum is reported.
inline MinRhoResult min_rho_search(std::size_t n, MatrixKind kind, const MatrixOptions& opt = {},
                                   double tie_window = -1.0, bool big = false) {
  if (n < 4) throw std::out_of_range("min-rho search needs n >= 4");
  check_enumeration_order(n, big);
  if (tie_window < 0) tie_window = 10.0 * opt.tol;
  std::vector<std::pair<double, SimpleGraph>> scored;
  enumerate_connected_nonbipartite(
      n, [&](const SimpleGraph& g) { scored.emplace_back(rho_matrix(g, kind, opt).rho, g); }, true, big);
  MinRhoResult res;
  res.candidates = scored.size();
  res.min_value = INFINITY;
  for (const auto& [rho, g] : scored) res.min_value = std::min(res.min_value, rho);
  for (const auto& [rho, g] : scored)
    if (rho <= res.min_value + tie_window) res.argmin.push_back(g);
  return res;
}

} // namespace genpow
