#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "specnet/digraph.hpp"
#include "specnet/errors.hpp"
#include "specnet/rational.hpp"
#include "specnet/spread.hpp"

namespace specnet {

// Second smallest real part among the Laplacian eigenvalues. Exact (an
// integer) whenever the graph carries the optimal spectrum.
inline double algebraic_connectivity(const DiGraph& g) {
  int n = g.vertex_count();
  require(n >= 2, errc::precondition, "algebraic connectivity needs n >= 2");
  if (matches_optimal_spectrum(g)) {
    SpreadParameters p = spread_parameters(n, g.net_arcs());
    std::vector<long long> vals{0};
    for (long long i = 0; i < p.mult_kappa; ++i) vals.push_back(p.kappa);
    for (long long i = 0; i < p.mult_kappa1; ++i) vals.push_back(p.kappa + 1);
    std::sort(vals.begin(), vals.end());
    return (double)vals[1];
  }
  Spectrum s = spectrum_numeric(g);
  std::vector<double> re;
  re.reserve(s.values.size());
  for (Complex v : s.values) re.push_back(v.real());
  std::sort(re.begin(), re.end());
  return re[1];
}

struct ConnectivityBound {
  double a = 0.0;
  Rational bound;
  bool holds = false;
};

// a(G) <= m/(n-1).
inline ConnectivityBound check_connectivity_bound(const DiGraph& g) {
  require(!g.weighted(), errc::weighted_unsupported, "bound stated for unweighted graphs");
  ConnectivityBound r;
  r.a = algebraic_connectivity(g);
  r.bound = Rational(g.net_arcs(), g.vertex_count() - 1);
  r.holds = r.a <= r.bound.to_double() + 1e-8;
  return r;
}

// Positivity of a(G) is equivalent to rootedness.
inline bool is_rooted_spectrally(const DiGraph& g) {
  return algebraic_connectivity(g) > 1e-8;
}

struct ConsensusRun {
  std::vector<double> x0;
  double dt = 0.0;
  long long steps = 0;
  long long stride = 1;
  std::vector<double> times;
  std::vector<std::vector<double>> trajectory;
  std::vector<double> disagreement;  // max_i x_i - min_i x_i per sample

  double final_disagreement() const { return disagreement.back(); }
};

// Integrates x' = -Lx with the classical fourth-order Runge-Kutta step,
// sampling every `stride` steps.
inline ConsensusRun simulate_consensus(const DiGraph& g, std::vector<double> x0, double dt,
                                       long long steps, long long stride = 1) {
  int n = g.vertex_count();
  require((int)x0.size() == n, errc::precondition, "x0 size must equal vertex count");
  require(dt > 0, errc::precondition, "dt must be positive");
  require(steps >= 0, errc::precondition, "steps must be nonnegative");
  require(stride >= 1, errc::precondition, "stride must be positive");
  long long max_indeg = 0;
  for (long long d : g.in_degrees()) max_indeg = std::max(max_indeg, d < 0 ? -d : d);
  require(dt * (double)max_indeg <= 0.1 + 1e-12, errc::unstable_step_size,
          "dt * max in-degree must not exceed 0.1");

  std::vector<double> lap((size_t)n * n, 0.0);
  for (size_t k = 0; k < g.arcs().size(); ++k) {
    const Arc& a = g.arcs()[k];
    double w = g.weighted() ? (double)g.weights()[k] : 1.0;
    lap[(size_t)(a.second - 1) * n + (a.second - 1)] += w;
    lap[(size_t)(a.second - 1) * n + (a.first - 1)] -= w;
  }
  auto negLx = [&](const std::vector<double>& x, std::vector<double>& out) {
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      const double* row = &lap[(size_t)i * n];
      for (int j = 0; j < n; ++j) acc += row[j] * x[j];
      out[i] = -acc;
    }
  };

  ConsensusRun run;
  run.x0 = x0;
  run.dt = dt;
  run.steps = steps;
  run.stride = stride;
  auto sample = [&](long long step, const std::vector<double>& x) {
    run.times.push_back(dt * (double)step);
    run.trajectory.push_back(x);
    auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    run.disagreement.push_back(*hi - *lo);
  };

  std::vector<double> x = std::move(x0), k1(n), k2(n), k3(n), k4(n), tmp(n);
  sample(0, x);
  for (long long s = 1; s <= steps; ++s) {
    negLx(x, k1);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
    negLx(tmp, k2);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
    negLx(tmp, k3);
    for (int i = 0; i < n; ++i) tmp[i] = x[i] + dt * k3[i];
    negLx(tmp, k4);
    for (int i = 0; i < n; ++i) x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if (s % stride == 0) sample(s, x);
  }
  return run;
}

}  // namespace specnet
