#pragma once

// Independent reference computations used only by the tests.

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "genpow/graph.hpp"

namespace oracle {

using genpow::Hypergraph;
using genpow::SimpleGraph;

// Exhaustive search over all 2^n two-colorings for one where every edge has
// an odd number of vertices in part one. Requires n <= 24.
inline bool brute_force_odd_bipartite(const Hypergraph& h) {
  const std::size_t n = h.order();
  std::vector<std::uint32_t> masks;
  for (const auto& e : h.edges()) {
    std::uint32_t m = 0;
    for (auto v : e) m |= 1u << v;
    masks.push_back(m);
  }
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    bool ok = true;
    for (auto m : masks)
      if (std::popcount(x & m) % 2 == 0) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

// Degree by scanning every edge.
inline std::size_t brute_degree(const Hypergraph& h, std::size_t v) {
  std::size_t d = 0;
  for (const auto& e : h.edges()) d += std::count(e.begin(), e.end(), v);
  return d;
}

inline Eigen::MatrixXd adjacency_matrix(const SimpleGraph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.order()), static_cast<Eigen::Index>(g.order()));
  for (auto [u, v] : g.edges()) {
    a(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 1.0;
    a(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 1.0;
  }
  return a;
}

// Largest eigenvalue of A(G) (or Q(G)) from a dense symmetric eigensolver.
inline double eigen_rho(const SimpleGraph& g, bool signless) {
  Eigen::MatrixXd m = adjacency_matrix(g);
  if (signless)
    for (std::size_t v = 0; v < g.order(); ++v)
      m(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v)) = static_cast<double>(g.degree(v));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

// Dense evaluation of (T x^{k-1})_u for the adjacency tensor by summing over
// every ordered index tuple, with entry 1/(k-1)! on each ordering of an edge.
inline std::vector<double> brute_apply_adjacency(const Hypergraph& h, const std::vector<double>& x) {
  const std::size_t n = h.order(), k = h.uniformity();
  double fact = 1.0;
  for (std::size_t i = 2; i < k; ++i) fact *= static_cast<double>(i);
  std::vector<double> out(n, 0.0);
  std::vector<std::size_t> idx(k, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= n;
  for (std::size_t pos = 0; pos < total; ++pos) {
    std::size_t p = pos;
    for (std::size_t j = k; j-- > 0;) {
      idx[j] = p % n;
      p /= n;
    }
    auto sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    bool is_edge = false;
    for (const auto& e : h.edges())
      if (e == sorted) is_edge = true;
    if (!is_edge) continue;
    double term = 1.0 / fact;
    for (std::size_t j = 1; j < k; ++j) term *= x[idx[j]];
    out[idx[0]] += term;
  }
  return out;
}

// Root of x^2 - x - 1 + x^{-n} = 0 above 1 by Newton's method started at the
// golden mean; for n >= 2 this is the same root as P_n's positive root.
inline double newton_beta(std::size_t n) {
  double x = (1.0 + std::sqrt(5.0)) / 2.0;
  for (int it = 0; it < 100; ++it) {
    double f = x * x - x - 1.0 + std::pow(x, -static_cast<double>(n));
    double df = 2.0 * x - 1.0 - static_cast<double>(n) * std::pow(x, -static_cast<double>(n) - 1.0);
    double step = f / df;
    x -= step;
    if (std::abs(step) < 1e-16) break;
  }
  return x;
}

// Random connected graph: a random spanning tree plus independent extra edges.
inline SimpleGraph random_connected_graph(std::size_t n, double extra_p, std::mt19937_64& rng) {
  std::vector<genpow::Edge> edges;
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    auto u = pick(rng);
    edges.emplace_back(u, v);
    has[u][v] = has[v][u] = 1;
  }
  std::bernoulli_distribution coin(extra_p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!has[u][v] && coin(rng)) edges.emplace_back(u, v);
  return SimpleGraph(n, std::move(edges));
}

} // namespace oracle
