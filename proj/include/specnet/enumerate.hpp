#pragma once

#include <utility>
#include <vector>

#include "specnet/digraph.hpp"
#include "specnet/errors.hpp"

namespace specnet {

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All ordered pairs (tail, head), tail != head, lexicographic. This is the
// fixed universe every m-arc enumeration indexes into.
inline std::vector<Arc> arc_universe(int n) {
  std::vector<Arc> u;
  u.reserve((size_t)n * (n - 1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) u.push_back({i, j});
  return u;
}

// m-subsets of {0..universe-1} in lexicographic order, optionally restricted
// to a contiguous rank range [lo, hi). Ranks follow the combinatorial number
// system, so chunk boundaries can be unranked directly.
class CombinationRange {
 public:
  CombinationRange(int universe, int m)
      : CombinationRange(universe, m, 0, binomial(universe, m)) {}

  CombinationRange(int universe, int m, long long lo, long long hi)
      : e_(universe), m_(m), remaining_(hi - lo) {
    require(m >= 0 && m <= universe, errc::m_out_of_range, "subset size out of range");
    require(lo >= 0 && hi <= binomial(universe, m), errc::precondition,
            "rank range outside [0, C(universe, m))");
    if (remaining_ <= 0) {
      remaining_ = 0;
      return;
    }
    unrank(lo);
  }

  long long remaining() const { return remaining_; }
  const std::vector<int>& indices() const { return idx_; }

  // Advances to the next combination; returns false once the range is done.
  // The first call yields the initial combination.
  bool next() {
    if (remaining_ == 0) return false;
    if (!started_) {
      started_ = true;
      --remaining_;
      return true;
    }
    int i = m_ - 1;
    while (i >= 0 && idx_[i] == e_ - m_ + i) --i;
    if (i < 0) {
      remaining_ = 0;
      return false;
    }
    ++idx_[i];
    for (int j = i + 1; j < m_; ++j) idx_[j] = idx_[j - 1] + 1;
    --remaining_;
    return true;
  }

 private:
  void unrank(long long rank) {
    idx_.assign(m_, 0);
    int c = 0;
    for (int i = 0; i < m_; ++i) {
      for (;; ++c) {
        long long count = binomial(e_ - 1 - c, m_ - 1 - i);
        if (rank < count) break;
        rank -= count;
      }
      idx_[i] = c++;
    }
  }

  int e_, m_;
  long long remaining_ = 0;
  bool started_ = false;
  std::vector<int> idx_;
};

// Splits [0, total) into k contiguous chunks whose concatenation reproduces
// the full sequence exactly.
inline std::vector<std::pair<long long, long long>> split_chunks(long long total, int k) {
  std::vector<std::pair<long long, long long>> out;
  if (k < 1) k = 1;
  long long base = total / k, extra = total % k, at = 0;
  for (int i = 0; i < k; ++i) {
    long long len = base + (i < extra ? 1 : 0);
    out.push_back({at, at + len});
    at += len;
  }
  return out;
}

// Deterministic enumeration of every simple digraph with n vertices and m
// arcs, as rank-ordered arc subsets of the lexicographic universe.
class DigraphEnumerator {
 public:
  DigraphEnumerator(int n, int m)
      : DigraphEnumerator(n, m, 0, binomial(n * (n - 1), m)) {}

  DigraphEnumerator(int n, int m, long long lo, long long hi)
      : n_(n), universe_(arc_universe(n)), range_((int)((size_t)n * (n - 1)), m, lo, hi) {
    require(n >= 2 && n <= 6, errc::n_out_of_range, "digraph enumeration supports 2 <= n <= 6");
    require(m >= 0 && m <= n * (n - 1), errc::m_out_of_range, "m out of [0, n(n-1)]");
  }

  long long remaining() const { return range_.remaining(); }

  bool next(DiGraph& out) {
    if (!range_.next()) return false;
    std::vector<Arc> arcs;
    arcs.reserve(range_.indices().size());
    for (int i : range_.indices()) arcs.push_back(universe_[i]);
    out = DiGraph(n_, std::move(arcs));
    return true;
  }

  // Fast path for sweeps: the current arc-index subset, no DiGraph built.
  const std::vector<int>* next_indices() {
    if (!range_.next()) return nullptr;
    return &range_.indices();
  }

  const std::vector<Arc>& universe() const { return universe_; }

 private:
  int n_;
  std::vector<Arc> universe_;
  CombinationRange range_;
};

// Materialized convenience form; use DigraphEnumerator directly for the counts
// that only make sense streamed.
inline std::vector<DiGraph> enumerate_digraphs(int n, int m) {
  require(binomial(n * (n - 1), m) <= 10000000, errc::instance_too_large,
          "too many graphs to materialize; stream with DigraphEnumerator");
  DigraphEnumerator en(n, m);
  std::vector<DiGraph> out;
  DiGraph g(1, {});
  while (en.next(g)) out.push_back(g);
  return out;
}

}  // namespace specnet
