#pragma once

// Simple graphs and k-uniform hypergraphs with dense 0-based vertex indices.
// Both types are immutable once built; every constructor validates its input.

#include <algorithm>
#include <cstddef>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace genpow {

using vertex_t = std::size_t;
using Edge = std::pair<vertex_t, vertex_t>;

class SimpleGraph {
public:
  SimpleGraph() = default;

  SimpleGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n) {
    std::set<Edge> seen;
    for (auto& e : edges_) {
      if (e.first == e.second)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(e.first));
      if (e.first >= n_ || e.second >= n_)
        throw std::out_of_range("edge endpoint out of range");
      if (e.first > e.second) std::swap(e.first, e.second);
      if (!seen.insert(e).second)
        throw std::invalid_argument("duplicate edge {" + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + "}");
      adj_[e.first].push_back(e.second);
      adj_[e.second].push_back(e.first);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<vertex_t>& neighbors(vertex_t v) const { return adj_.at(v); }
  std::size_t degree(vertex_t v) const { return adj_.at(v).size(); }

  bool has_edge(vertex_t u, vertex_t v) const {
    if (u >= n_ || v >= n_) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  std::vector<Edge> sorted_edges() const {
    auto out = edges_;
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.sorted_edges() == b.sorted_edges();
  }

private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<vertex_t>> adj_;
};

class Hypergraph {
public:
  // n = 0 is rejected; a single isolated vertex is a valid (connected) hypergraph.
  Hypergraph(std::size_t k, std::size_t n, std::vector<std::vector<vertex_t>> edges)
      : k_(k), n_(n), edges_(std::move(edges)), incidence_(n) {
    if (k_ < 2) throw std::invalid_argument("edge size k must be at least 2");
    if (n_ == 0) throw std::invalid_argument("hypergraph needs at least one vertex");
    std::set<std::vector<vertex_t>> seen;
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      auto& e = edges_[j];
      if (e.size() != k_)
        throw std::invalid_argument("edge " + std::to_string(j) + " has " + std::to_string(e.size()) +
                                    " vertices, expected " + std::to_string(k_));
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw std::invalid_argument("edge " + std::to_string(j) + " repeats a vertex");
      if (e.back() >= n_) throw std::out_of_range("edge " + std::to_string(j) + " vertex out of range");
      if (!seen.insert(e).second) throw std::invalid_argument("duplicate edge " + std::to_string(j));
      for (auto v : e) incidence_[v].push_back(j);
    }
  }

  std::size_t uniformity() const noexcept { return k_; }
  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<std::vector<vertex_t>>& edges() const noexcept { return edges_; }
  const std::vector<vertex_t>& edge(std::size_t j) const { return edges_.at(j); }

  // Indices of the edges containing v.
  const std::vector<std::size_t>& incident(vertex_t v) const {
    if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return incidence_[v];
  }

  std::vector<std::vector<vertex_t>> sorted_edges() const {
    auto out = edges_;
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.sorted_edges() == b.sorted_edges();
  }

private:
  std::size_t k_;
  std::size_t n_;
  std::vector<std::vector<vertex_t>> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
};

struct Bipartition {
  std::vector<vertex_t> part_one;
  std::vector<vertex_t> part_two;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// True when the two parts are disjoint and cover 0..n-1.
inline bool is_partition_of(const Bipartition& b, std::size_t n) {
  if (b.part_one.size() + b.part_two.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (const auto* part : {&b.part_one, &b.part_two})
    for (auto v : *part) {
      if (v >= n || seen[v]) return false;
      seen[v] = 1;
    }
  return true;
}

inline std::size_t degree(const Hypergraph& h, vertex_t v) { return h.incident(v).size(); }

inline std::vector<std::size_t> degrees(const Hypergraph& h) {
  std::vector<std::size_t> d(h.order());
  for (vertex_t v = 0; v < h.order(); ++v) d[v] = h.incident(v).size();
  return d;
}

// Component label per vertex, by breadth-first search over the vertex-edge
// incidence structure. Labels are assigned in order of the smallest vertex.
inline std::vector<std::size_t> component_labels(const Hypergraph& h, std::size_t* count = nullptr) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(h.order(), unset);
  std::vector<char> edge_done(h.size(), 0);
  std::size_t next = 0;
  for (vertex_t root = 0; root < h.order(); ++root) {
    if (label[root] != unset) continue;
    std::queue<vertex_t> frontier;
    frontier.push(root);
    label[root] = next;
    while (!frontier.empty()) {
      auto v = frontier.front();
      frontier.pop();
      for (auto j : h.incident(v)) {
        if (edge_done[j]) continue;
        edge_done[j] = 1;
        for (auto w : h.edge(j))
          if (label[w] == unset) {
            label[w] = next;
            frontier.push(w);
          }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

inline bool is_connected(const Hypergraph& h) {
  std::size_t count = 0;
  component_labels(h, &count);
  return count == 1;
}

// The sub-hypergraphs induced on each connected component, vertices relabeled
// in increasing order. `vertex_maps[c][i]` is the original index of vertex i
// of component c.
struct Components {
  std::vector<Hypergraph> parts;
  std::vector<std::vector<vertex_t>> vertex_maps;
};

inline Components connected_components(const Hypergraph& h) {
  std::size_t count = 0;
  auto label = component_labels(h, &count);
  Components out;
  out.vertex_maps.resize(count);
  std::vector<vertex_t> local(h.order());
  for (vertex_t v = 0; v < h.order(); ++v) {
    local[v] = out.vertex_maps[label[v]].size();
    out.vertex_maps[label[v]].push_back(v);
  }
  std::vector<std::vector<std::vector<vertex_t>>> edges(count);
  for (const auto& e : h.edges()) {
    std::vector<vertex_t> mapped;
    mapped.reserve(e.size());
    for (auto v : e) mapped.push_back(local[v]);
    edges[label[e.front()]].push_back(std::move(mapped));
  }
  out.parts.reserve(count);
  for (std::size_t c = 0; c < count; ++c)
    out.parts.emplace_back(h.uniformity(), out.vertex_maps[c].size(), std::move(edges[c]));
  return out;
}

inline Hypergraph remove_edge(const Hypergraph& h, std::size_t j) {
  if (j >= h.size()) throw std::out_of_range("edge index " + std::to_string(j) + " out of range");
  auto edges = h.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(j));
  return Hypergraph(h.uniformity(), h.order(), std::move(edges));
}

inline Hypergraph relabel(const Hypergraph& h, const std::vector<vertex_t>& perm) {
  if (perm.size() != h.order()) throw std::invalid_argument("permutation size mismatch");
  auto edges = h.edges();
  for (auto& e : edges)
    for (auto& v : e) v = perm.at(v);
  return Hypergraph(h.uniformity(), h.order(), std::move(edges));
}

// A simple graph viewed as a 2-uniform hypergraph.
inline Hypergraph as_hypergraph(const SimpleGraph& g) {
  std::vector<std::vector<vertex_t>> edges;
  edges.reserve(g.size());
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Hypergraph(2, g.order(), std::move(edges));
}

inline bool is_connected(const SimpleGraph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<vertex_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.order();
}

inline SimpleGraph remove_edge(const SimpleGraph& g, vertex_t u, vertex_t v) {
  if (u > v) std::swap(u, v);
  auto edges = g.edges();
  auto it = std::find(edges.begin(), edges.end(), Edge{u, v});
  if (it == edges.end()) throw std::invalid_argument("edge not present");
  edges.erase(it);
  return SimpleGraph(g.order(), std::move(edges));
}

} // namespace genpow
