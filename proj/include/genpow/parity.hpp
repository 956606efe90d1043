#pragma once

// Exact bipartiteness for simple graphs and odd-bipartiteness for even-uniform
// hypergraphs. A hypergraph vertex set V1 u V2 is an odd-bipartition when
// every edge meets V1 (and therefore V2, since k is even) in an odd number of
// vertices; that is the linear system  sum_{v in e} x_v = 1 (mod 2)  per edge.

#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "genpow/graph.hpp"

namespace genpow {

class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value = true) {
    auto mask = std::uint64_t{1} << (i % 64);
    if (value)
      words_[i / 64] |= mask;
    else
      words_[i / 64] &= ~mask;
  }
  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  BitVector& operator^=(const BitVector& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }
  // Parity of the bitwise AND with `other`.
  bool dot(const BitVector& other) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) % 2 != 0;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

// A x = rhs over GF(2); one row per hypergraph edge.
struct ParitySystem {
  std::size_t variables = 0;
  std::vector<BitVector> rows;
  BitVector rhs;
};

inline ParitySystem parity_system(const Hypergraph& h) {
  ParitySystem sys;
  sys.variables = h.order();
  sys.rhs = BitVector(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) {
    BitVector row(h.order());
    for (auto v : h.edge(j)) row.set(v);
    sys.rows.push_back(std::move(row));
    sys.rhs.set(j);
  }
  return sys;
}

// Gauss-Jordan elimination on a private copy. Free variables are set to 0.
inline std::optional<BitVector> gf2_solve(ParitySystem sys) {
  const std::size_t m = sys.rows.size();
  if (sys.rhs.size() != m) throw std::invalid_argument("rhs length differs from row count");
  for (const auto& row : sys.rows)
    if (row.size() != sys.variables) throw std::invalid_argument("row length differs from variable count");

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < sys.variables && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && !sys.rows[pivot].test(col)) ++pivot;
    if (pivot == m) continue;
    std::swap(sys.rows[pivot], sys.rows[rank]);
    bool b = sys.rhs.test(pivot);
    sys.rhs.set(pivot, sys.rhs.test(rank));
    sys.rhs.set(rank, b);
    for (std::size_t r = 0; r < m; ++r)
      if (r != rank && sys.rows[r].test(col)) {
        sys.rows[r] ^= sys.rows[rank];
        sys.rhs.set(r, sys.rhs.test(r) != sys.rhs.test(rank));
      }
    pivot_col.push_back(col);
    ++rank;
  }
  // Rows below the rank are all zero; a set rhs bit there is 0 = 1.
  for (std::size_t r = rank; r < m; ++r)
    if (sys.rhs.test(r)) return std::nullopt;

  BitVector x(sys.variables);
  for (std::size_t r = 0; r < rank; ++r) x.set(pivot_col[r], sys.rhs.test(r));
  return x;
}

inline bool verify_odd_bipartition(const Hypergraph& h, const Bipartition& b) {
  if (!is_partition_of(b, h.order())) throw std::invalid_argument("not a bipartition of the vertex set");
  std::vector<char> in_one(h.order(), 0);
  for (auto v : b.part_one) in_one[v] = 1;
  for (const auto& e : h.edges()) {
    std::size_t ones = 0;
    for (auto v : e) ones += in_one[v];
    if (ones % 2 == 0 || (e.size() - ones) % 2 == 0) return false;
  }
  return true;
}

inline std::optional<Bipartition> odd_bipartition(const Hypergraph& h) {
  if (h.uniformity() % 2 != 0)
    throw std::invalid_argument("odd-bipartiteness is defined for even k only");
  auto x = gf2_solve(parity_system(h));
  if (!x) return std::nullopt;
  Bipartition b;
  for (vertex_t v = 0; v < h.order(); ++v) (x->test(v) ? b.part_one : b.part_two).push_back(v);
  if (!verify_odd_bipartition(h, b)) throw std::logic_error("odd-bipartition certificate failed verification");
  return b;
}

// Proper 2-coloring by BFS layering per component; absent when some edge
// joins two vertices of the same layer parity.
inline std::optional<Bipartition> is_bipartite(const SimpleGraph& g) {
  std::vector<int> side(g.order(), -1);
  for (vertex_t root = 0; root < g.order(); ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::queue<vertex_t> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      auto v = frontier.front();
      frontier.pop();
      for (auto w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          frontier.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition b;
  for (vertex_t v = 0; v < g.order(); ++v) (side[v] == 0 ? b.part_one : b.part_two).push_back(v);
  for (auto [u, v] : g.edges())
    if (side[u] == side[v]) throw std::logic_error("2-coloring failed verification");
  return b;
}

} // namespace genpow
