#pragma once

// Dominant eigenpairs of the adjacency matrix A(G) and signless Laplacian
// Q(G) = D(G) + A(G) of a connected simple graph, and the limit-point
// quantities beta_n, alpha_n, tau^{3/2}.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "genpow/constructions.hpp"
#include "genpow/graph.hpp"

namespace genpow {

enum class MatrixKind { adjacency, signless_laplacian };

struct MatrixOptions {
  double tol = 1e-10;
  std::size_t max_iter = 1'000'000;
};

struct MatrixSpectrum {
  double rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> vector; // positive, max entry 1
  std::size_t iterations = 0;
  bool converged = false;
};

// Power iteration on M + I from the all-ones vector. The min and max of
// ((M+I)x)_i / x_i bracket rho + 1; stops when the bracket width is at most
// tol * (rho + 1).
inline MatrixSpectrum rho_matrix(const SimpleGraph& g, MatrixKind kind, const MatrixOptions& opt = {}) {
  if (!(opt.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (g.order() == 0 || !is_connected(g)) throw std::invalid_argument("matrix spectral radius needs a connected graph");
  const std::size_t n = g.order();
  std::vector<double> x(n, 1.0), y(n);
  MatrixSpectrum res;
  for (std::size_t it = 1; it <= opt.max_iter; ++it) {
    double lo = INFINITY, hi = -INFINITY;
    for (vertex_t v = 0; v < n; ++v) {
      double acc = x[v];
      if (kind == MatrixKind::signless_laplacian) acc += static_cast<double>(g.degree(v)) * x[v];
      for (auto w : g.neighbors(v)) acc += x[w];
      y[v] = acc;
      lo = std::min(lo, acc / x[v]);
      hi = std::max(hi, acc / x[v]);
    }
    res.iterations = it;
    res.lower = std::max(0.0, lo - 1.0);
    res.upper = hi - 1.0;
    res.rho = std::max(0.0, 0.5 * (lo + hi) - 1.0);
    res.vector = x;
    if (hi - lo <= opt.tol * hi) {
      res.converged = true;
      break;
    }
    double top = *std::max_element(y.begin(), y.end());
    for (vertex_t v = 0; v < n; ++v) x[v] = y[v] / top;
  }
  return res;
}

inline MatrixSpectrum rho_adjacency_matrix(const SimpleGraph& g, const MatrixOptions& opt = {}) {
  return rho_matrix(g, MatrixKind::adjacency, opt);
}

inline MatrixSpectrum rho_signless_laplacian_matrix(const SimpleGraph& g, const MatrixOptions& opt = {}) {
  return rho_matrix(g, MatrixKind::signless_laplacian, opt);
}

// Golden mean (1 + sqrt 5) / 2.
inline double golden_mean() { return (1.0 + std::sqrt(5.0)) / 2.0; }

// tau^{1/2} + tau^{-1/2} = tau^{3/2} = sqrt(2 + sqrt 5).
inline double tau_threshold() { return std::sqrt(2.0 + std::sqrt(5.0)); }

// P_n(x) = x^{n+1} - (1 + x + ... + x^{n-1}).
inline long double limit_polynomial(std::size_t n, long double x) {
  long double geometric = 0.0L;
  for (std::size_t i = 0; i < n; ++i) geometric = geometric * x + 1.0L;
  long double lead = 1.0L;
  for (std::size_t i = 0; i <= n; ++i) lead *= x;
  return lead - geometric;
}

// The positive root of P_n, by bisection on [1, 2] until the bracket is no
// wider than tol or stops shrinking. P_n(1) = 1 - n <= 0 and P_n(2) = 2^n + 1 > 0.
inline double beta_n(std::size_t n, double tol = 1e-15) {
  if (n < 1) throw std::invalid_argument("beta_n needs n >= 1");
  long double lo = 1.0L, hi = 2.0L;
  if (limit_polynomial(n, lo) > 0) lo = 0.5L;
  if (limit_polynomial(n, lo) == 0) return static_cast<double>(lo);
  while (hi - lo > tol) {
    long double mid = 0.5L * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    long double p = limit_polynomial(n, mid);
    if (p == 0) return static_cast<double>(mid);
    (p < 0 ? lo : hi) = mid;
  }
  return static_cast<double>(0.5L * (lo + hi));
}

inline double alpha_from_beta(double beta) { return std::sqrt(beta) + 1.0 / std::sqrt(beta); }

inline double alpha_n(std::size_t n, double tol = 1e-15) { return alpha_from_beta(beta_n(n, tol)); }

struct LimitPointRow {
  std::size_t n;
  double beta;
  double alpha;
};

struct LimitPointTable {
  std::vector<LimitPointRow> rows;
  double tau_threshold = genpow::tau_threshold();
};

inline LimitPointTable limit_point_table(std::size_t n_max, double tol = 1e-15) {
  LimitPointTable table;
  for (std::size_t n = 1; n <= n_max; ++n) {
    double b = beta_n(n, tol);
    table.rows.push_back({n, b, alpha_from_beta(b)});
  }
  return table;
}

// C_{2n+1}+e, i.e. cycle_plus_pendant(2n+2): vertex 0 pendant, vertex 1 of
// degree 3, cycle 1..2n+1.
inline SimpleGraph pendant_odd_cycle(std::size_t n) {
  if (n < 1) throw std::invalid_argument("pendant odd cycle needs n >= 1");
  return cycle_plus_pendant(2 * n + 2);
}

// The tree C_{2n+1}+e minus the cycle edge opposite the degree-3 vertex,
// v_{n+1} v_{n+2}.
inline SimpleGraph pendant_odd_cycle_tree(std::size_t n) {
  return remove_edge(pendant_odd_cycle(n), n + 1, n + 2);
}

struct RhoTerm {
  std::size_t n;
  double rho;
  double lower;
  double upper;
};

inline std::vector<RhoTerm> pendant_cycle_rho_sequence(std::size_t n_max, double tol = 1e-10) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  std::vector<RhoTerm> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto r = rho_adjacency_matrix(pendant_odd_cycle(n), {tol});
    out.push_back({n, r.rho, r.lower, r.upper});
  }
  return out;
}

} // namespace genpow
