#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "specnet/construct.hpp"
#include "specnet/enumerate.hpp"
#include "specnet/errors.hpp"
#include "specnet/rng.hpp"
#include "specnet/spread.hpp"

namespace specnet {

// Result of one exhaustive minimum-spread sweep over all simple digraphs
// with n vertices and m arcs. Minimizer identification is decided by the
// exact certificate; the numeric sweep cross-checks the minimum value.
struct ConjectureReport {
  int n = 0;
  long long m = 0;
  long long graphs_checked = 0;
  double min_sigma_sq = 0.0;
  Rational sigma_min_sq;
  long long minimizer_count = 0;
  bool all_minimizers_optimal = false;
  bool any_nonoptimal_at_min = false;
  double tol = 1e-9;
  // diagnostics
  long long certified_count = 0;
  double max_certified_numeric_dev = 0.0;  // numeric sigma^2 vs exact, over certified graphs
  double min_nonoptimal_gap = std::numeric_limits<double>::infinity();  // strictness margin

  bool passed() const {
    return std::abs(min_sigma_sq - sigma_min_sq.to_double()) <= tol && all_minimizers_optimal &&
           !any_nonoptimal_at_min && certified_count > 0;
  }
};

struct SweepReport {
  long long cases_run = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

namespace detail {

struct ChunkStats {
  long long checked = 0;
  double min_sigma = std::numeric_limits<double>::infinity();
  long long at_target = 0;         // sigma^2 <= sigma_min^2 + tol
  long long certified = 0;
  long long nonopt_at_target = 0;  // uncertified graphs at the target
  double max_cert_dev = 0.0;
  double min_gap = std::numeric_limits<double>::infinity();
};

// One contiguous rank range of the (n,m) graph enumeration. Every quantity
// merged later is a min, sum, or max, so the reduction is order-free.
inline ChunkStats conjecture_chunk(int n, long long m, double tol, long long lo, long long hi,
                                   const std::vector<Arc>& universe,
                                   const Poly<long long>& target, double sigma_min) {
  ChunkStats st;
  int e = (int)universe.size();
  CombinationRange range(e, (int)m, lo, hi);
  long long bound = 2 * n + 1;  // Gershgorin: integer eigenvalues lie within
  while (range.next()) {
    ++st.checked;
    Matrix<long long> lap(n);
    for (int i : range.indices()) {
      int head = universe[i].second - 1, tail = universe[i].first - 1;
      lap.at(head, head) += 1;
      lap.at(head, tail) -= 1;
    }
    Poly<long long> cp = char_poly(lap);
    bool certified = cp == target;
    double numeric =
        sigma_sq_values(poly_roots_hybrid(cp, bound, errc::convergence_failure));
    double sigma = certified ? sigma_min : numeric;
    if (certified) {
      ++st.certified;
      st.max_cert_dev = std::max(st.max_cert_dev, std::abs(numeric - sigma_min));
    } else {
      st.min_gap = std::min(st.min_gap, numeric - sigma_min);
    }
    st.min_sigma = std::min(st.min_sigma, sigma);
    if (sigma <= sigma_min + tol) {
      ++st.at_target;
      if (!certified) ++st.nonopt_at_target;
    }
  }
  return st;
}

}  // namespace detail

// Brute-force check of the minimum-spread conjecture at (n, m): enumerate
// every labeled graph, certify optimality exactly, and confirm both
// directions of the spectral condition. n = 6 beyond small m is gated by
// long_run (binomials up to C(30,15) ~ 1.6e8).
inline ConjectureReport verify_conjecture(int n, long long m, double tol = 1e-9, int jobs = 1,
                                          bool long_run = false) {
  require(n >= 2, errc::precondition, "conjecture sweep needs n >= 2");
  require(n <= 6, errc::instance_too_large, "exhaustive verification infeasible for n >= 7");
  require(m >= 0 && m <= (long long)n * (n - 1), errc::m_out_of_range, "m out of [0, n(n-1)]");
  if (n == 6 && m > 8 && m < 22)
    require(long_run, errc::instance_too_large,
            "full n = 6 sweep requires the long-run flag");

  SpreadParameters sp = spread_parameters(n, m);
  double sigma_min = sp.sigma_min_sq.to_double();
  Poly<long long> target = optimal_char_poly<long long>(sp);
  std::vector<Arc> universe = arc_universe(n);
  long long total = binomial(n * (n - 1), (int)m);

  if (jobs < 1) jobs = 1;
  auto chunks = split_chunks(total, jobs);
  std::vector<detail::ChunkStats> stats(chunks.size());
  if (jobs == 1) {
    stats[0] = detail::conjecture_chunk(n, m, tol, chunks[0].first, chunks[0].second, universe,
                                        target, sigma_min);
  } else {
    std::vector<std::thread> pool;
    for (size_t c = 0; c < chunks.size(); ++c)
      pool.emplace_back([&, c] {
        stats[c] = detail::conjecture_chunk(n, m, tol, chunks[c].first, chunks[c].second,
                                            universe, target, sigma_min);
      });
    for (auto& t : pool) t.join();
  }

  detail::ChunkStats all;
  for (const auto& st : stats) {  // merge in chunk order; all ops commutative
    all.checked += st.checked;
    all.min_sigma = std::min(all.min_sigma, st.min_sigma);
    all.at_target += st.at_target;
    all.certified += st.certified;
    all.nonopt_at_target += st.nonopt_at_target;
    all.max_cert_dev = std::max(all.max_cert_dev, st.max_cert_dev);
    all.min_gap = std::min(all.min_gap, st.min_gap);
  }

  ConjectureReport rep;
  rep.n = n;
  rep.m = m;
  rep.tol = tol;
  rep.graphs_checked = all.checked;
  rep.min_sigma_sq = all.min_sigma;
  rep.sigma_min_sq = sp.sigma_min_sq;
  rep.certified_count = all.certified;
  rep.max_certified_numeric_dev = all.max_cert_dev;
  rep.min_nonoptimal_gap = all.min_gap;
  rep.minimizer_count = all.at_target;
  rep.any_nonoptimal_at_min = all.nonopt_at_target > 0;
  // certified graphs sit exactly at sigma_min, so every certified graph
  // attains the minimum; the converse direction is the nonopt count.
  rep.all_minimizers_optimal = all.nonopt_at_target == 0;
  return rep;
}

// Randomized root-spread harness plus the exhaustive equality direction:
// random monic integer polynomials must satisfy the inequality, and every
// root multiset drawn from {a, a+1} must attain equality.
inline SweepReport verify_theorem2_random(int degree_max, int coeff_bound, long long trials,
                                          uint64_t seed) {
  require(degree_max >= 1 && degree_max <= 10, errc::precondition, "degree_max in [1,10]");
  require(coeff_bound >= 0 && coeff_bound <= 10, errc::precondition, "coeff_bound in [0,10]");
  SweepReport rep;
  SplitMix64 rng(seed);
  for (long long t = 0; t < trials; ++t) {
    int k = (int)rng.between(1, degree_max);
    std::vector<BigInt> c(k + 1);
    for (int i = 0; i < k; ++i) c[i] = BigInt(rng.between(-coeff_bound, coeff_bound));
    c[k] = BigInt(1);
    IntPoly p(std::move(c));
    Theorem2Report r = theorem2_report(p, 1e-6);
    ++rep.cases_run;
    if (!r.holds)
      rep.failures.push_back("trial " + std::to_string(t) + ": lhs " + std::to_string(r.lhs) +
                             " < rhs " + std::to_string(r.rhs) + " for " + p.to_line());
  }
  // every root multiset from {a, a+1} must give equality
  for (long long a = -2; a <= 2; ++a)
    for (int k = 1; k <= 6; ++k)
      for (int j = 0; j <= k; ++j) {
        IntPoly p(std::vector<BigInt>{BigInt(1)});
        for (int i = 0; i < k - j; ++i) p = p * IntPoly::linear_root(a);
        for (int i = 0; i < j; ++i) p = p * IntPoly::linear_root(a + 1);
        Theorem2Report r = theorem2_report(p, 1e-6);
        ++rep.cases_run;
        if (!r.equality || !r.roots_integral_adjacent)
          rep.failures.push_back("equality case a=" + std::to_string(a) +
                                 " k=" + std::to_string(k) + " j=" + std::to_string(j));
      }
  return rep;
}

// Exact characteristic-polynomial sweep over constructed graphs: star, path
// and seeds_per_n random seed trees for every n <= n_max and every m.
inline SweepReport verify_theorem3(int n_max, int seeds_per_n, uint64_t rng_seed) {
  require(n_max >= 2 && n_max <= 25, errc::instance_too_large, "n_max in [2,25]");
  SweepReport rep;
  SplitMix64 rng(rng_seed);
  for (int n = 2; n <= n_max; ++n) {
    std::vector<std::pair<std::string, DiGraph>> seeds;
    auto add_seed = [&](const std::string& name, DiGraph t) {
      for (const auto& s : seeds)
        if (s.second == t) return;
      seeds.push_back({name, std::move(t)});
    };
    add_seed("star", make_tree(TreeSpec::star(n)));
    add_seed("path", make_tree(TreeSpec::path(n)));
    for (int i = 0; i < seeds_per_n; ++i) {
      uint64_t s = rng.next();
      add_seed("random" + std::to_string(i) + "/" + std::to_string(s),
               make_tree(TreeSpec::random(n, s)));
    }
    for (const auto& [name, tree] : seeds) {
      TreeSpec spec = TreeSpec::explicit_arcs(n, tree.arcs());
      for (long long m = n - 1; m <= (long long)n * (n - 1); ++m) {
        BuildResult res = build(n, m, spec);
        IntPoly actual = char_poly(laplacian<BigInt>(res.graph));
        IntPoly expected = optimal_char_poly<BigInt>(spread_parameters(n, m));
        ++rep.cases_run;
        if (actual != expected)
          rep.failures.push_back("n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                 " seed=" + name + ": " + actual.to_line() +
                                 " != " + expected.to_line());
      }
    }
  }
  return rep;
}

}  // namespace specnet
