#pragma once

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>
#include <vector>

#include "specnet/digraph.hpp"
#include "specnet/errors.hpp"
#include "specnet/matrix.hpp"
#include "specnet/poly.hpp"

namespace specnet {

using Complex = std::complex<double>;

// Multiset of eigenvalues plus the tolerance used to cluster multiplicities
// and to recognize the structural zero.
struct Spectrum {
  std::vector<Complex> values;
  double tol = 1e-8;

  std::vector<Complex> sorted_values() const {
    std::vector<Complex> v = values;
    std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    return v;
  }

  size_t closest_to_zero() const {
    size_t best = 0;
    for (size_t i = 1; i < values.size(); ++i)
      if (std::abs(values[i]) < std::abs(values[best])) best = i;
    return best;
  }

  bool has_zero() const {
    return !values.empty() && std::abs(values[closest_to_zero()]) <= tol;
  }

  // Eigenvalues grouped within tol, each with its multiplicity.
  std::vector<std::pair<Complex, int>> clustered() const {
    std::vector<std::pair<Complex, int>> out;
    for (Complex v : sorted_values()) {
      if (!out.empty() && std::abs(out.back().first - v) <= tol)
        ++out.back().second;
      else
        out.push_back({v, 1});
    }
    return out;
  }
};

namespace detail {

// Peels every integer root r with |r| <= bound off p, returning the roots
// with multiplicity. Exact synthetic division, so multiplicities are exact.
template <class I>
std::vector<long long> peel_integer_roots(Poly<I>& p, long long bound) {
  std::vector<long long> roots;
  if (bound > 1000000) return roots;
  for (long long r = -bound; r <= bound; ++r) {
    while (p.degree() >= 1 && p.divide_by_root(r)) roots.push_back(r);
  }
  return roots;
}

inline void horner(const std::vector<double>& a, Complex z, Complex& p, Complex& dp) {
  p = a.back();
  dp = 0.0;
  for (int i = (int)a.size() - 2; i >= 0; --i) {
    dp = dp * z + p;
    p = p * z + a[i];
  }
}

// Backward-error stop: z is accepted once |p(z)| falls below the evaluation
// noise floor of the coefficients at z.
inline double eval_noise(const std::vector<double>& a, Complex z) {
  double az = std::abs(z), pw = 1.0, s = 0.0;
  for (double c : a) {
    s += std::abs(c) * pw;
    pw *= az;
  }
  return 4.0 * DBL_EPSILON * s + 1e-300;
}

// Aberth-Ehrlich simultaneous iteration for a monic real polynomial of
// degree >= 3 (lower degrees are handled in closed form by poly_roots).
inline bool aberth(const std::vector<double>& a, std::vector<Complex>& z) {
  int k = (int)a.size() - 1;
  double radius = 0.0;
  for (int i = 0; i < k; ++i) radius = std::max(radius, std::abs(a[i]));
  radius = 1.0 + radius;
  z.resize(k);
  for (int j = 0; j < k; ++j) {
    double ang = 6.283185307179586 * j / k + 0.43;
    z[j] = 0.9 * radius * Complex(std::cos(ang), std::sin(ang));
  }
  for (int iter = 0; iter < 1000; ++iter) {
    bool all_done = true;
    for (int j = 0; j < k; ++j) {
      Complex p, dp;
      horner(a, z[j], p, dp);
      if (std::abs(p) <= eval_noise(a, z[j])) continue;
      if (std::abs(dp) == 0.0) {
        z[j] += Complex(1e-8 * radius, 1e-8 * radius);
        all_done = false;
        continue;
      }
      Complex alpha = p / dp;
      Complex repel = 0.0;
      for (int l = 0; l < k; ++l)
        if (l != j) {
          Complex d = z[j] - z[l];
          if (std::abs(d) == 0.0) d = Complex(1e-12 * radius, 0);
          repel += 1.0 / d;
        }
      Complex denom = 1.0 - alpha * repel;
      Complex dz = std::abs(denom) == 0.0 ? alpha : alpha / denom;
      z[j] -= dz;
      if (std::abs(dz) > 1e-13 * (1.0 + std::abs(z[j]))) all_done = false;
    }
    if (all_done) return true;
  }
  // accept anyway if every residual sits at the noise floor (multiple-root
  // clusters stall there without the correction ever reaching 1e-13)
  for (int j = 0; j < k; ++j) {
    Complex p, dp;
    horner(a, z[j], p, dp);
    if (std::abs(p) > 1024.0 * eval_noise(a, z[j])) return false;
  }
  return true;
}

// Real-coefficient polynomials have conjugate-closed root sets; restore the
// symmetry the iteration loses to rounding.
inline void symmetrize_conjugates(std::vector<Complex>& z) {
  std::vector<int> pos, neg;
  for (int i = 0; i < (int)z.size(); ++i) {
    double snap = 1e-11 * (1.0 + std::abs(z[i]));
    if (std::abs(z[i].imag()) <= snap)
      z[i] = Complex(z[i].real(), 0.0);
    else if (z[i].imag() > 0)
      pos.push_back(i);
    else
      neg.push_back(i);
  }
  if (pos.size() != neg.size()) return;
  auto by_re = [&](int x, int y) {
    if (z[x].real() != z[y].real()) return z[x].real() < z[y].real();
    return std::abs(z[x].imag()) < std::abs(z[y].imag());
  };
  std::sort(pos.begin(), pos.end(), by_re);
  std::sort(neg.begin(), neg.end(), by_re);
  for (size_t k = 0; k < pos.size(); ++k) {
    double re = 0.5 * (z[pos[k]].real() + z[neg[k]].real());
    double im = 0.5 * (z[pos[k]].imag() - z[neg[k]].imag());
    z[pos[k]] = Complex(re, im);
    z[neg[k]] = Complex(re, -im);
  }
}

// All complex roots of a monic polynomial with double coefficients.
inline std::vector<Complex> poly_roots_numeric(const std::vector<double>& a, errc on_failure) {
  int k = (int)a.size() - 1;
  std::vector<Complex> z;
  if (k <= 0) return z;
  if (k == 1) {
    z.push_back(Complex(-a[0], 0.0));
    return z;
  }
  if (k == 2) {
    double b = a[1], c = a[0];
    double disc = b * b - 4.0 * c;
    if (disc >= 0.0) {
      double s = std::sqrt(disc);
      double q = b >= 0 ? -0.5 * (b + s) : -0.5 * (b - s);
      double r1 = q;
      double r2 = q != 0.0 ? c / q : 0.0;
      z.push_back(Complex(r1, 0.0));
      z.push_back(Complex(r2, 0.0));
    } else {
      double s = std::sqrt(-disc);
      z.push_back(Complex(-0.5 * b, 0.5 * s));
      z.push_back(Complex(-0.5 * b, -0.5 * s));
    }
    return z;
  }
  if (!aberth(a, z)) fail(on_failure, "root iteration did not converge");
  symmetrize_conjugates(z);
  // first-moment correction: the coefficient carries the exact root sum, and
  // stalled multiple-root clusters otherwise drift off it by ~sqrt(eps)
  double sum = 0.0;
  for (Complex v : z) sum += v.real();
  double shift = (-a[k - 1] - sum) / (double)k;
  for (Complex& v : z) v += shift;
  return z;
}

}  // namespace detail

// Roots of an exact integer polynomial: integer roots are extracted exactly
// (every |r| <= int_root_bound), the rest numerically.
template <class I>
std::vector<Complex> poly_roots_hybrid(Poly<I> p, long long int_root_bound, errc on_failure) {
  std::vector<Complex> out;
  for (long long r : detail::peel_integer_roots(p, int_root_bound))
    out.push_back(Complex((double)r, 0.0));
  if (p.degree() >= 1) {
    std::vector<double> a = p.coeffs_as_double();
    double lead = a.back();
    for (double& c : a) c /= lead;
    for (Complex z : detail::poly_roots_numeric(a, on_failure)) out.push_back(z);
  }
  return out;
}

// Every eigenvalue lies within the Gershgorin bound, so integer eigenvalue
// candidates form a small scan range.
template <class I>
long long gershgorin_bound(const Matrix<I>& m) {
  double best = 0.0;
  for (int i = 0; i < m.dim(); ++i) {
    double row = 0.0;
    for (int j = 0; j < m.dim(); ++j) row += std::abs(int_to_double(m.at(i, j)));
    best = std::max(best, row);
  }
  return (long long)std::ceil(best) + 1;
}

// Exact characteristic polynomial of an integer matrix.
inline IntPoly char_poly_exact(const Matrix<BigInt>& m) { return char_poly(m); }

// All n eigenvalues, via the exact characteristic polynomial route.
template <class I>
Spectrum spectrum_numeric(const Matrix<I>& m, double tol = 1e-8) {
  require(tol > 0, errc::precondition, "tolerance must be positive");
  Spectrum s;
  s.tol = tol;
  s.values = poly_roots_hybrid(char_poly(m), gershgorin_bound(m), errc::convergence_failure);
  std::sort(s.values.begin(), s.values.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return s;
}

// Laplacian eigenvalues of a graph; int64 arithmetic where it is provably
// overflow-free, BigInt otherwise.
inline Spectrum spectrum_numeric(const DiGraph& g, double tol = 1e-8) {
  if (!g.weighted() && g.vertex_count() <= 6)
    return spectrum_numeric(laplacian<long long>(g), tol);
  return spectrum_numeric(laplacian<BigInt>(g), tol);
}

// For acyclic graphs the Laplacian is triangularizable, so the spectrum is
// exactly the multiset of (weighted) in-degrees.
inline Spectrum acyclic_spectrum(const DiGraph& g) {
  require(is_acyclic(g), errc::not_acyclic, "graph has a directed cycle");
  Spectrum s;
  for (long long d : in_degree_sequence(g)) s.values.push_back(Complex((double)d, 0.0));
  return s;
}

// Spectrum of the complement: remove one zero, map lambda -> n - lambda,
// put the zero back.
inline Spectrum complement_spectrum(const Spectrum& s, int n) {
  require((int)s.values.size() == n, errc::precondition, "spectrum size must equal n");
  require(s.has_zero(), errc::no_zero_eigenvalue, "spectrum lacks an eigenvalue at 0");
  Spectrum out;
  out.tol = s.tol;
  size_t skip = s.closest_to_zero();
  out.values.push_back(Complex(0.0, 0.0));
  for (size_t i = 0; i < s.values.size(); ++i)
    if (i != skip) out.values.push_back(Complex((double)n, 0.0) - s.values[i]);
  return out;
}

}  // namespace specnet
