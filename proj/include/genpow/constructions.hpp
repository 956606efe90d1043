#pragma once

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "genpow/graph.hpp"

namespace genpow {

// Blocks of hypergraph vertices produced by the generalized power. Vertex
// blocks come first (ordered by base vertex), then edge blocks (ordered by
// base edge index); each block is a run of consecutive indices.
struct BlowupMap {
  std::size_t s = 0;
  std::vector<std::vector<vertex_t>> vertex_blocks;
  std::vector<std::vector<vertex_t>> edge_blocks;
};

struct GeneralizedPower {
  Hypergraph hypergraph;
  BlowupMap map;
};

// G^{k,s}: every base vertex becomes an s-set and every base edge {u,v} the
// k-edge u-block + v-block + a fresh (k-2s)-set.
inline GeneralizedPower generalized_power(const SimpleGraph& g, std::size_t k, std::size_t s) {
  if (k < 3) throw std::invalid_argument("generalized power needs k >= 3");
  if (s < 1 || 2 * s > k)
    throw std::invalid_argument("s must satisfy 1 <= s <= k/2 (k=" + std::to_string(k) +
                                ", s=" + std::to_string(s) + ")");
  if (g.order() == 0) throw std::invalid_argument("base graph has no vertices");
  const std::size_t extra = k - 2 * s;
  BlowupMap map;
  map.s = s;
  map.vertex_blocks.resize(g.order());
  vertex_t next = 0;
  for (auto& block : map.vertex_blocks)
    for (std::size_t i = 0; i < s; ++i) block.push_back(next++);
  if (extra > 0) {
    map.edge_blocks.resize(g.size());
    for (auto& block : map.edge_blocks)
      for (std::size_t i = 0; i < extra; ++i) block.push_back(next++);
  }
  std::vector<std::vector<vertex_t>> edges;
  edges.reserve(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    auto [u, v] = g.edges()[j];
    std::vector<vertex_t> e = map.vertex_blocks[u];
    e.insert(e.end(), map.vertex_blocks[v].begin(), map.vertex_blocks[v].end());
    if (extra > 0) e.insert(e.end(), map.edge_blocks[j].begin(), map.edge_blocks[j].end());
    edges.push_back(std::move(e));
  }
  return {Hypergraph(k, next, std::move(edges)), std::move(map)};
}

// G^{k,k/2}; rejects odd k.
inline GeneralizedPower half_power(const SimpleGraph& g, std::size_t k) {
  if (k % 2 != 0) throw std::invalid_argument("s = k/2 requires even k, got k=" + std::to_string(k));
  return generalized_power(g, k, k / 2);
}

// k-uniform s-path of length d: edge j is {j(k-s), ..., j(k-s)+k-1}.
inline Hypergraph s_path(std::size_t k, std::size_t s, std::size_t d) {
  if (k < 2 || s < 1 || s > k - 1) throw std::invalid_argument("s-path needs 1 <= s <= k-1");
  if (d < 1) throw std::invalid_argument("s-path length must be at least 1");
  const std::size_t step = k - s;
  std::vector<std::vector<vertex_t>> edges(d);
  for (std::size_t j = 0; j < d; ++j) {
    edges[j].resize(k);
    std::iota(edges[j].begin(), edges[j].end(), j * step);
  }
  return Hypergraph(k, s + d * step, std::move(edges));
}

// k-uniform s-cycle of length d on d(k-s) vertices, indices taken cyclically.
inline Hypergraph s_cycle(std::size_t k, std::size_t s, std::size_t d) {
  if (k < 2 || s < 1 || s > k - 1) throw std::invalid_argument("s-cycle needs 1 <= s <= k-1");
  const std::size_t step = k - s;
  const std::size_t n = d * step;
  if (n < k) throw std::invalid_argument("s-cycle length too small for k distinct vertices per edge");
  std::vector<std::vector<vertex_t>> edges(d);
  std::set<std::vector<vertex_t>> seen;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < k; ++i) edges[j].push_back((j * step + i) % n);
    auto key = edges[j];
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second)
      throw std::invalid_argument("s-cycle length too small: edges coincide");
  }
  return Hypergraph(k, n, std::move(edges));
}

inline SimpleGraph path_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (vertex_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return SimpleGraph(n, std::move(edges));
}

inline SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (vertex_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return SimpleGraph(n, std::move(edges));
}

// C_{n-1}+e: vertex 0 is the pendant, attached to vertex 1 of the cycle 1..n-1.
inline SimpleGraph cycle_plus_pendant(std::size_t n) {
  if (n < 4) throw std::invalid_argument("cycle plus pendant needs n >= 4");
  std::vector<Edge> edges{{0, 1}};
  for (vertex_t v = 1; v < n; ++v) edges.emplace_back(v, v + 1 < n ? v + 1 : 1);
  return SimpleGraph(n, std::move(edges));
}

// Spine 0..L-1 with pendants[j] leaves on spine vertex j; leaves numbered
// after the spine in spine order.
inline SimpleGraph caterpillar(const std::vector<std::size_t>& pendants) {
  if (pendants.empty()) throw std::invalid_argument("caterpillar needs a spine of length >= 1");
  const std::size_t spine = pendants.size();
  std::vector<Edge> edges;
  for (vertex_t v = 0; v + 1 < spine; ++v) edges.emplace_back(v, v + 1);
  vertex_t next = spine;
  for (vertex_t v = 0; v < spine; ++v)
    for (std::size_t i = 0; i < pendants[v]; ++i) edges.emplace_back(v, next++);
  return SimpleGraph(next, std::move(edges));
}

// T_n: P_{n-4} with two pendant edges at each end.
inline SimpleGraph t_graph(std::size_t n) {
  if (n < 6) throw std::invalid_argument("T_n needs n >= 6");
  std::vector<std::size_t> pendants(n - 4, 0);
  pendants.front() = 2;
  pendants.back() = 2;
  return caterpillar(pendants);
}

// G_{u,w}: the edge uw is replaced by u-v'-w with the fresh vertex v' = n.
inline SimpleGraph subdivide(const SimpleGraph& g, vertex_t u, vertex_t w) {
  if (!g.has_edge(u, w))
    throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(w) + "} not present");
  const vertex_t fresh = g.order();
  std::vector<Edge> edges;
  for (auto e : g.edges()) {
    if (e == Edge{std::min(u, w), std::max(u, w)}) {
      edges.emplace_back(u, fresh);
      edges.emplace_back(w, fresh);
    } else {
      edges.push_back(e);
    }
  }
  return SimpleGraph(g.order() + 1, std::move(edges));
}

// Edges lying on some internal path: a walk between vertices of degree >= 3
// (possibly the same vertex) whose interior vertices all have degree 2.
inline std::set<Edge> internal_path_edges(const SimpleGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("internal paths need a connected graph");
  auto key = [](vertex_t a, vertex_t b) { return Edge{std::min(a, b), std::max(a, b)}; };
  std::set<Edge> out;
  for (vertex_t start = 0; start < g.order(); ++start) {
    if (g.degree(start) < 3) continue;
    for (auto first : g.neighbors(start)) {
      std::vector<Edge> walk{key(start, first)};
      vertex_t prev = start, cur = first;
      while (g.degree(cur) == 2) {
        const auto& nb = g.neighbors(cur);
        vertex_t next = nb[0] == prev ? nb[1] : nb[0];
        walk.push_back(key(cur, next));
        prev = cur;
        cur = next;
      }
      if (g.degree(cur) >= 3) out.insert(walk.begin(), walk.end());
    }
  }
  return out;
}

} // namespace genpow
