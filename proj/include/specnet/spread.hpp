#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "specnet/digraph.hpp"
#include "specnet/errors.hpp"
#include "specnet/rational.hpp"
#include "specnet/spectrum.hpp"

namespace specnet {

// The optimal-spectrum data for n vertices and m (net) arcs: kappa, nu, the
// minimal normalized spread, and the multiset {0, kappa^a, (kappa+1)^b} with
// a = (n-1)(kappa+1)-m and b = m-(n-1)kappa. m may be negative for
// integer-weighted graphs.
struct SpreadParameters {
  int n = 0;
  long long m = 0;
  long long kappa = 0;
  long long nu = 0;
  Rational sigma_min_sq;
  long long mult_kappa = 0;    // multiplicity of kappa
  long long mult_kappa1 = 0;   // multiplicity of kappa+1
};

inline SpreadParameters spread_parameters(int n, long long m) {
  require(n >= 2, errc::precondition, "spread parameters need n >= 2");
  SpreadParameters p;
  p.n = n;
  p.m = m;
  p.kappa = floor_div(m, n - 1);
  p.nu = floor_div(m, n);
  p.mult_kappa = (long long)(n - 1) * (p.kappa + 1) - m;
  p.mult_kappa1 = m - (long long)(n - 1) * p.kappa;
  p.sigma_min_sq = Rational(p.mult_kappa1 * p.mult_kappa, (long long)(n - 1) * (n - 1));
  return p;
}

// lambda (lambda-kappa)^a (lambda-kappa-1)^b, expanded exactly.
template <class I>
Poly<I> optimal_char_poly(const SpreadParameters& p) {
  Poly<I> q(std::vector<I>{I(0), I(1)});
  for (long long i = 0; i < p.mult_kappa; ++i) q = q * Poly<I>::linear_root(p.kappa);
  for (long long i = 0; i < p.mult_kappa1; ++i) q = q * Poly<I>::linear_root(p.kappa + 1);
  return q;
}

// Exact certificate for Laplacian-spectrum optimality: the characteristic
// polynomial must equal the expanded optimal factorization coefficient for
// coefficient. No floating point is involved.
inline bool matches_optimal_spectrum(const DiGraph& g) {
  int n = g.vertex_count();
  if (n < 2) return false;
  SpreadParameters p = spread_parameters(n, g.net_arcs());
  if (!g.weighted() && n <= 6) {
    // int64 is provably overflow-free at this size
    return char_poly(laplacian<long long>(g)) == optimal_char_poly<long long>(p);
  }
  return char_poly(laplacian<BigInt>(g)) == optimal_char_poly<BigInt>(p);
}

namespace detail {

// Spread of a value multiset with the entry nearest zero removed; no
// precondition checks (those live in sigma_squared).
inline double sigma_sq_values(const std::vector<Complex>& vals) {
  size_t n = vals.size();
  size_t skip = 0;
  for (size_t i = 1; i < n; ++i)
    if (std::abs(vals[i]) < std::abs(vals[skip])) skip = i;
  Complex mean(0.0, 0.0);
  for (size_t i = 0; i < n; ++i)
    if (i != skip) mean += vals[i];
  mean /= (double)(n - 1);
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i)
    if (i != skip) acc += std::norm(vals[i] - mean);
  return acc / (double)(n - 1);
}

}  // namespace detail

// Normalized spread of the nonzero eigenvalues: drop the eigenvalue closest
// to zero, average the rest, and return the mean squared deviation.
inline double sigma_squared(const Spectrum& s) {
  size_t n = s.values.size();
  require(n >= 2, errc::precondition, "sigma^2 needs at least two eigenvalues");
  require(s.has_zero(), errc::no_zero_eigenvalue,
          "no eigenvalue within tolerance of 0");
  size_t skip = s.closest_to_zero();
  Complex mean(0.0, 0.0);
  for (size_t i = 0; i < n; ++i)
    if (i != skip) mean += s.values[i];
  mean /= (double)(n - 1);
  require(std::abs(mean.imag()) < s.tol, errc::precondition,
          "mean of nonzero eigenvalues is not real");
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i)
    if (i != skip) acc += std::norm(s.values[i] - mean);
  return acc / (double)(n - 1);
}

// Root-spread inequality report for a monic integer polynomial: with root sum
// l and degree k, (1/k) sum |r_i - l/k|^2 >= b(1-b) where b = l/k - floor(l/k),
// with equality exactly on root multisets drawn from {a, a+1}.
struct Theorem2Report {
  long long degree = 0;
  long long root_sum = 0;  // l, read from the exact coefficient
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  bool equality = false;
  bool roots_integral_adjacent = false;
};

inline Theorem2Report theorem2_report(const IntPoly& p, double root_tol = 1e-6) {
  require(p.degree() >= 1, errc::precondition, "polynomial must have positive degree");
  require(p.is_monic(), errc::precondition, "polynomial must be monic");
  Theorem2Report rep;
  int k = p.degree();
  rep.degree = k;
  rep.root_sum = (BigInt(0) - p[k - 1]).to_ll();
  double max_coeff = 0.0;
  for (int i = 0; i < k; ++i) max_coeff = std::max(max_coeff, std::abs(int_to_double(p[i])));
  long long bound = max_coeff < 1e6 ? (long long)max_coeff + 1 : 2000000;
  std::vector<Complex> roots =
      poly_roots_hybrid(p, bound, errc::root_finding_failure);

  long long a = floor_div(rep.root_sum, k);
  double target = (double)rep.root_sum / (double)k;
  double b = Rational(rep.root_sum - a * k, k).to_double();
  rep.rhs = b * (1.0 - b);
  double acc = 0.0;
  bool adjacent = true;
  for (Complex r : roots) {
    acc += std::norm(r - Complex(target, 0.0));
    if (std::abs(r - Complex((double)a, 0.0)) > root_tol &&
        std::abs(r - Complex((double)(a + 1), 0.0)) > root_tol)
      adjacent = false;
  }
  rep.lhs = acc / (double)k;
  rep.holds = rep.lhs >= rep.rhs - 1e-9;
  rep.equality = std::abs(rep.lhs - rep.rhs) <= 1e-6 * std::max(1.0, rep.rhs);
  rep.roots_integral_adjacent = adjacent;
  return rep;
}

}  // namespace specnet
