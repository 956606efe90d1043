#pragma once

// Nonnegative order-k tensors: the adjacency tensor A(H) and signless
// Laplacian Q(H) = D(H) + A(H) of a k-uniform hypergraph, evaluated implicitly
// from its edges, and small dense tensors for testing comparison results.
//
// A(H) has entry 1/(k-1)! on every ordering of every edge, so
//   (A x^{k-1})_u = sum_{e ∋ u} prod_{w in e \ {u}} x_w.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "genpow/constructions.hpp"
#include "genpow/graph.hpp"
#include "genpow/scc.hpp"

namespace genpow {

using Vector = std::vector<double>;

class DenseTensor {
public:
  static constexpr std::size_t max_order = 4;
  static constexpr std::size_t max_dimension = 6;

  DenseTensor(std::size_t order, std::size_t dimension) : k_(order), n_(dimension) {
    if (k_ < 2 || k_ > max_order) throw std::invalid_argument("dense tensor order must be in [2, 4]");
    if (n_ < 1 || n_ > max_dimension) throw std::invalid_argument("dense tensor dimension must be in [1, 6]");
    std::size_t total = 1;
    for (std::size_t i = 0; i < k_; ++i) total *= n_;
    entries_.assign(total, 0.0);
  }

  static DenseTensor identity(std::size_t order, std::size_t dimension) {
    DenseTensor t(order, dimension);
    std::vector<std::size_t> idx(order);
    for (std::size_t i = 0; i < dimension; ++i) {
      std::fill(idx.begin(), idx.end(), i);
      t.at(idx) = 1.0;
    }
    return t;
  }

  std::size_t order() const noexcept { return k_; }
  std::size_t dimension() const noexcept { return n_; }
  std::size_t entry_count() const noexcept { return entries_.size(); }

  // Flat storage, first index most significant.
  double& flat(std::size_t i) { return entries_.at(i); }
  double flat(std::size_t i) const { return entries_.at(i); }

  double& at(std::span<const std::size_t> idx) { return entries_[offset(idx)]; }
  double at(std::span<const std::size_t> idx) const { return entries_[offset(idx)]; }

  // Decodes a flat position into its k indices.
  void unflatten(std::size_t pos, std::span<std::size_t> idx) const {
    for (std::size_t j = k_; j-- > 0;) {
      idx[j] = pos % n_;
      pos /= n_;
    }
  }

private:
  std::size_t offset(std::span<const std::size_t> idx) const {
    if (idx.size() != k_) throw std::invalid_argument("index arity differs from tensor order");
    std::size_t pos = 0;
    for (auto i : idx) {
      if (i >= n_) throw std::out_of_range("tensor index out of range");
      pos = pos * n_ + i;
    }
    return pos;
  }

  std::size_t k_;
  std::size_t n_;
  std::vector<double> entries_;
};

enum class TensorKind { adjacency, signless_laplacian, dense };

inline std::string to_string(TensorKind kind) {
  switch (kind) {
  case TensorKind::adjacency: return "adjacency";
  case TensorKind::signless_laplacian: return "signless-laplacian";
  case TensorKind::dense: return "dense";
  }
  return "unknown";
}

class ImplicitTensor {
public:
  static ImplicitTensor adjacency(Hypergraph h) { return ImplicitTensor(TensorKind::adjacency, std::move(h)); }
  static ImplicitTensor signless_laplacian(Hypergraph h) {
    return ImplicitTensor(TensorKind::signless_laplacian, std::move(h));
  }
  static ImplicitTensor of(TensorKind kind, Hypergraph h) {
    if (kind == TensorKind::dense) throw std::invalid_argument("dense kind needs a DenseTensor");
    return ImplicitTensor(kind, std::move(h));
  }
  static ImplicitTensor dense(DenseTensor t) {
    for (std::size_t i = 0; i < t.entry_count(); ++i)
      if (!(t.flat(i) >= 0.0)) throw std::invalid_argument("tensor entries must be nonnegative");
    return ImplicitTensor(std::move(t));
  }

  TensorKind kind() const noexcept { return kind_; }
  std::size_t order() const noexcept { return k_; }
  std::size_t dimension() const noexcept { return n_; }
  const Hypergraph& hypergraph() const {
    if (!h_) throw std::logic_error("dense tensor has no hypergraph");
    return *h_;
  }
  const DenseTensor& dense_table() const {
    if (!dense_) throw std::logic_error("hypergraph tensor has no dense table");
    return *dense_;
  }
  const std::vector<double>& degrees() const noexcept { return degrees_; }

private:
  ImplicitTensor(TensorKind kind, Hypergraph h)
      : kind_(kind), k_(h.uniformity()), n_(h.order()), h_(std::move(h)) {
    degrees_.resize(n_);
    for (vertex_t v = 0; v < n_; ++v) degrees_[v] = static_cast<double>(degree(*h_, v));
  }
  explicit ImplicitTensor(DenseTensor t)
      : kind_(TensorKind::dense), k_(t.order()), n_(t.dimension()), dense_(std::move(t)) {}

  TensorKind kind_;
  std::size_t k_;
  std::size_t n_;
  std::optional<Hypergraph> h_;
  std::optional<DenseTensor> dense_;
  std::vector<double> degrees_;
};

namespace detail {

inline void check_dimension(const ImplicitTensor& t, std::span<const double> x) {
  if (x.size() != t.dimension())
    throw std::invalid_argument("vector length " + std::to_string(x.size()) + " differs from tensor dimension " +
                                std::to_string(t.dimension()));
}

inline double ipow(double x, std::size_t e) {
  double r = 1.0;
  for (; e; e >>= 1, x *= x)
    if (e & 1) r *= x;
  return r;
}

} // namespace detail

// T x^{k-1}.
inline Vector apply(const ImplicitTensor& t, std::span<const double> x) {
  detail::check_dimension(t, x);
  const std::size_t k = t.order();
  Vector out(t.dimension(), 0.0);
  if (t.kind() == TensorKind::dense) {
    const auto& table = t.dense_table();
    std::vector<std::size_t> idx(k);
    for (std::size_t pos = 0; pos < table.entry_count(); ++pos) {
      double a = table.flat(pos);
      if (a == 0.0) continue;
      table.unflatten(pos, idx);
      for (std::size_t j = 1; j < k; ++j) a *= x[idx[j]];
      out[idx[0]] += a;
    }
    return out;
  }
  // prod over e \ {u} via prefix and suffix products, so zeros in x are exact.
  std::vector<double> prefix(k + 1), suffix(k + 1);
  for (const auto& e : t.hypergraph().edges()) {
    prefix[0] = 1.0;
    for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * x[e[i]];
    suffix[k] = 1.0;
    for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * x[e[i]];
    for (std::size_t i = 0; i < k; ++i) out[e[i]] += prefix[i] * suffix[i + 1];
  }
  if (t.kind() == TensorKind::signless_laplacian)
    for (std::size_t u = 0; u < out.size(); ++u) out[u] += t.degrees()[u] * detail::ipow(x[u], k - 1);
  return out;
}

// T x^k = sum_u x_u (T x^{k-1})_u.
inline double txk(const ImplicitTensor& t, std::span<const double> x) {
  auto y = genpow::apply(t, x);
  double s = 0.0;
  for (std::size_t u = 0; u < y.size(); ++u) s += x[u] * y[u];
  return s;
}

inline Vector row_sums(const ImplicitTensor& t) {
  switch (t.kind()) {
  case TensorKind::adjacency: return t.degrees();
  case TensorKind::signless_laplacian: {
    auto r = t.degrees();
    for (auto& v : r) v *= 2.0;
    return r;
  }
  case TensorKind::dense: break;
  }
  const auto& table = t.dense_table();
  Vector r(t.dimension(), 0.0);
  std::vector<std::size_t> idx(t.order());
  for (std::size_t pos = 0; pos < table.entry_count(); ++pos) {
    table.unflatten(pos, idx);
    r[idx[0]] += table.flat(pos);
  }
  return r;
}

// s_i = (T x^{k-1})_i / x_i^{k-1}; requires x > 0.
inline Vector s_ratios(const ImplicitTensor& t, std::span<const double> x) {
  detail::check_dimension(t, x);
  for (auto v : x)
    if (!(v > 0.0)) throw std::invalid_argument("s-ratios need a strictly positive vector");
  auto y = genpow::apply(t, x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] /= detail::ipow(x[i], t.order() - 1);
  return y;
}

struct Bounds {
  double lower;
  double upper;
};

// min r_i <= rho <= max r_i.
inline Bounds rho_bounds(const ImplicitTensor& t) {
  auto r = row_sums(t);
  auto [lo, hi] = std::minmax_element(r.begin(), r.end());
  return {*lo, *hi};
}

// Arc i -> j whenever some entry t_{i i_2 ... i_k} > 0 has j among i_2..i_k.
inline std::vector<std::vector<std::size_t>> associated_digraph(const ImplicitTensor& t) {
  std::vector<std::vector<std::size_t>> arcs(t.dimension());
  if (t.kind() == TensorKind::dense) {
    const auto& table = t.dense_table();
    std::vector<std::size_t> idx(t.order());
    for (std::size_t pos = 0; pos < table.entry_count(); ++pos) {
      if (table.flat(pos) <= 0.0) continue;
      table.unflatten(pos, idx);
      for (std::size_t j = 1; j < idx.size(); ++j) arcs[idx[0]].push_back(idx[j]);
    }
  } else {
    for (const auto& e : t.hypergraph().edges())
      for (auto u : e)
        for (auto w : e)
          if (u != w) arcs[u].push_back(w);
  }
  for (auto& a : arcs) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return arcs;
}

inline bool weakly_irreducible(const ImplicitTensor& t) { return is_strongly_connected(associated_digraph(t)); }

struct PowerOptions {
  double tol = 1e-10;
  std::size_t max_iter = 1'000'000;
  double shift = 1.0;
};

struct SpectralResult {
  double rho = 0.0;
  double lower = 0.0; // rigorous bracket for rho at termination
  double upper = 0.0;
  Vector eigenvector; // positive, max entry 1
  std::size_t iterations = 0;
  double residual = 0.0; // max s_i - min s_i at termination
  bool converged = false;
};

// Shifted normalized power iteration for weakly irreducible nonnegative T:
//   y = (T + shift*I) x^{k-1},  x <- y^{[1/(k-1)]} / max.
// The min and max of the s-ratios of the shifted operator bracket
// rho + shift at every step; iteration stops once the bracket is relatively
// narrower than tol.
inline SpectralResult power_iteration_rho(const ImplicitTensor& t, const PowerOptions& opt = {}) {
  if (!(opt.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!weakly_irreducible(t)) throw std::domain_error("tensor is not weakly irreducible");
  const std::size_t k = t.order();
  const std::size_t n = t.dimension();
  const double root = 1.0 / static_cast<double>(k - 1);

  SpectralResult res;
  Vector x(n, 1.0), xpow(n);
  for (std::size_t it = 1; it <= opt.max_iter; ++it) {
    auto y = genpow::apply(t, x);
    double lo = INFINITY, hi = -INFINITY;
    for (std::size_t i = 0; i < n; ++i) {
      xpow[i] = detail::ipow(x[i], k - 1);
      y[i] += opt.shift * xpow[i];
      double s = y[i] / xpow[i];
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    res.iterations = it;
    res.lower = std::max(0.0, lo - opt.shift);
    res.upper = hi - opt.shift;
    res.residual = hi - lo;
    res.rho = 0.5 * (lo + hi) - opt.shift;
    res.eigenvector = x;
    if (hi - lo <= opt.tol * hi) {
      res.converged = true;
      break;
    }
    double top = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = std::pow(y[i], root);
      top = std::max(top, x[i]);
    }
    for (auto& v : x) v /= top;
  }
  res.rho = std::max(res.rho, 0.0);
  return res;
}

// ||T x^{k-1} - rho x^{[k-1]}||_inf.
inline double eigen_residual(const ImplicitTensor& t, std::span<const double> x, double rho) {
  auto y = genpow::apply(t, x);
  double worst = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i)
    worst = std::max(worst, std::abs(y[i] - rho * detail::ipow(x[i], t.order() - 1)));
  return worst;
}

// Spectral radius of A(H) or Q(H) for any hypergraph: the maximum over its
// connected components (an isolated vertex contributes 0).
inline Bounds spectral_radius_bracket(const Hypergraph& h, TensorKind kind, const PowerOptions& opt = {},
                                      bool* all_converged = nullptr) {
  Bounds best{0.0, 0.0};
  bool ok = true;
  for (auto& part : connected_components(h).parts) {
    if (part.size() == 0) continue;
    auto r = power_iteration_rho(ImplicitTensor::of(kind, std::move(part)), opt);
    ok = ok && r.converged;
    best.lower = std::max(best.lower, r.lower);
    best.upper = std::max(best.upper, r.upper);
  }
  if (all_converged) *all_converged = ok;
  return best;
}

inline double spectral_radius(const Hypergraph& h, TensorKind kind, const PowerOptions& opt = {}) {
  auto b = spectral_radius_bracket(h, kind, opt);
  return 0.5 * (b.lower + b.upper);
}

// Vector on V(G^{k,k/2}) with value x_v^{2/k} on every vertex of the block of v.
inline Vector lift_vector(std::span<const double> x, const BlowupMap& map, std::size_t k) {
  if (!map.edge_blocks.empty() || 2 * map.s != k)
    throw std::invalid_argument("lifting needs the s = k/2 power (no edge blocks)");
  if (x.size() != map.vertex_blocks.size()) throw std::invalid_argument("vector length differs from base order");
  std::size_t total = 0;
  for (const auto& b : map.vertex_blocks) total += b.size();
  Vector out(total, 0.0);
  const double exponent = 2.0 / static_cast<double>(k);
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (!(x[v] > 0.0)) throw std::invalid_argument("lifting needs a strictly positive vector");
    for (auto u : map.vertex_blocks[v]) out[u] = std::pow(x[v], exponent);
  }
  return out;
}

enum class Comparison { strictly_below, strictly_above, inconclusive };

// Compares T y^{k-1} with mu y^{[k-1]} coordinatewise. strictly_below
// certifies rho(T) < mu, strictly_above certifies rho(T) > mu. Coordinates
// whose difference is within equality_tol (relative) count as equal.
inline Comparison check_subsolution(const ImplicitTensor& t, std::span<const double> y, double mu,
                                    double equality_tol = 0.0) {
  detail::check_dimension(t, y);
  bool nonzero = false;
  for (auto v : y) {
    if (!(v >= 0.0)) throw std::invalid_argument("test vector must be nonnegative");
    nonzero = nonzero || v > 0.0;
  }
  if (!nonzero) throw std::invalid_argument("test vector must be nonzero");
  if (!weakly_irreducible(t)) throw std::domain_error("tensor is not weakly irreducible");
  auto ty = genpow::apply(t, y);
  bool any_below = false, any_above = false;
  for (std::size_t i = 0; i < ty.size(); ++i) {
    double rhs = mu * detail::ipow(y[i], t.order() - 1);
    double diff = ty[i] - rhs;
    if (std::abs(diff) <= equality_tol * std::max(std::abs(ty[i]), std::abs(rhs))) continue;
    (diff < 0 ? any_below : any_above) = true;
  }
  if (any_below && !any_above) return Comparison::strictly_below;
  if (any_above && !any_below) return Comparison::strictly_above;
  return Comparison::inconclusive;
}

// Largest spread (max - min) of the vector within any block of the map.
inline double half_edge_constancy(std::span<const double> x, const BlowupMap& map) {
  double worst = 0.0;
  auto scan = [&](const std::vector<std::vector<vertex_t>>& blocks) {
    for (const auto& b : blocks) {
      if (b.empty()) continue;
      double lo = x[b.front()], hi = lo;
      for (auto u : b) {
        lo = std::min(lo, x[u]);
        hi = std::max(hi, x[u]);
      }
      worst = std::max(worst, hi - lo);
    }
  };
  scan(map.vertex_blocks);
  scan(map.edge_blocks);
  return worst;
}

inline double half_edge_constancy(const SpectralResult& result, const BlowupMap& map) {
  return half_edge_constancy(result.eigenvector, map);
}

} // namespace genpow
