#pragma once

#include <cstdint>
#include <vector>

#include "specnet/digraph.hpp"
#include "specnet/errors.hpp"
#include "specnet/rng.hpp"

namespace specnet {

// Seed trees: directed trees on 1..n whose arcs (i,j) all satisfy i < j.
// Such a tree is exactly a parent array p[2..n] with p[k] < k, so there are
// (n-1)! of them; all enumeration and ranking below is in lexicographic
// order of (p[2], p[3], ..., p[n]).

enum class TreeKind { star, path, random_seeded, explicit_arcs, indexed };

struct TreeSpec {
  TreeKind kind = TreeKind::star;
  int n = 0;
  uint64_t seed = 0;
  long long rank = 0;
  std::vector<Arc> arcs;

  static TreeSpec star(int n) { return {TreeKind::star, n, 0, 0, {}}; }
  static TreeSpec path(int n) { return {TreeKind::path, n, 0, 0, {}}; }
  static TreeSpec random(int n, uint64_t seed) {
    return {TreeKind::random_seeded, n, seed, 0, {}};
  }
  static TreeSpec explicit_arcs(int n, std::vector<Arc> arcs) {
    return {TreeKind::explicit_arcs, n, 0, 0, std::move(arcs)};
  }
  static TreeSpec index(int n, long long rank) {
    return {TreeKind::indexed, n, 0, rank, {}};
  }
};

inline long long factorial(int k) {
  long long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

inline DiGraph tree_from_parents(const std::vector<int>& parent) {
  int n = (int)parent.size() - 1;  // parent[2..n]
  std::vector<Arc> arcs;
  arcs.reserve(n - 1);
  for (int k = 2; k <= n; ++k) arcs.push_back({parent[k], k});
  return DiGraph(n, std::move(arcs));
}

// Parent array of a valid seed tree; rejects anything else.
inline std::vector<int> tree_parents(const DiGraph& g) {
  int n = g.vertex_count();
  require(n >= 2, errc::invalid_tree_arcs, "seed tree needs n >= 2");
  require(g.arc_count() == n - 1, errc::invalid_tree_arcs,
          "seed tree must have n-1 arcs");
  std::vector<int> parent(n + 1, 0);
  for (const Arc& a : g.arcs()) {
    require(a.first < a.second, errc::invalid_tree_arcs,
            "arc " + arc_str(a) + " violates i<j");
    require(parent[a.second] == 0, errc::invalid_tree_arcs,
            "vertex " + std::to_string(a.second) + " has two parents");
    parent[a.second] = a.first;
  }
  for (int k = 2; k <= n; ++k)
    require(parent[k] != 0, errc::invalid_tree_arcs,
            "vertex " + std::to_string(k) + " has no parent");
  return parent;
}

inline bool is_valid_seed_tree(const DiGraph& g) {
  try {
    tree_parents(g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

inline std::vector<int> unrank_tree_parents(int n, long long rank) {
  long long total = factorial(n - 1);
  require(rank >= 0 && rank < total, errc::rank_out_of_range,
          "tree rank " + std::to_string(rank) + " out of [0," + std::to_string(total) + ")");
  std::vector<int> parent(n + 1, 0);
  // p[2] is the most significant digit; p[k] has radix k-1
  for (int k = 2; k <= n; ++k) {
    long long weight = 1;
    for (int j = k + 1; j <= n; ++j) weight *= j - 1;
    parent[k] = (int)(rank / weight) + 1;
    rank %= weight;
  }
  return parent;
}

inline long long rank_of_tree(const DiGraph& g) {
  std::vector<int> parent = tree_parents(g);
  int n = g.vertex_count();
  long long rank = 0;
  for (int k = 2; k <= n; ++k) {
    long long weight = 1;
    for (int j = k + 1; j <= n; ++j) weight *= j - 1;
    rank += (long long)(parent[k] - 1) * weight;
  }
  return rank;
}

inline DiGraph make_tree(const TreeSpec& spec) {
  int n = spec.n;
  require(n >= 2, errc::n_out_of_range, "seed tree needs n >= 2");
  std::vector<int> parent(n + 1, 0);
  switch (spec.kind) {
    case TreeKind::star:
      for (int k = 2; k <= n; ++k) parent[k] = 1;
      return tree_from_parents(parent);
    case TreeKind::path:
      for (int k = 2; k <= n; ++k) parent[k] = k - 1;
      return tree_from_parents(parent);
    case TreeKind::random_seeded: {
      SplitMix64 rng(spec.seed);
      for (int k = 2; k <= n; ++k) parent[k] = (int)rng.between(1, k - 1);
      return tree_from_parents(parent);
    }
    case TreeKind::indexed:
      return tree_from_parents(unrank_tree_parents(n, spec.rank));
    case TreeKind::explicit_arcs: {
      DiGraph g(n, spec.arcs);
      tree_parents(g);  // validates
      return g;
    }
  }
  fail(errc::precondition, "unknown tree kind");
}

// All (n-1)! seed trees in lexicographic parent-array order.
inline std::vector<DiGraph> enumerate_trees(int n) {
  require(n >= 2 && n <= 9, errc::n_out_of_range, "tree enumeration supports 2 <= n <= 9");
  std::vector<DiGraph> out;
  out.reserve(factorial(n - 1));
  std::vector<int> parent(n + 1, 1);
  for (;;) {
    out.push_back(tree_from_parents(parent));
    int k = n;  // advance the parent array like a mixed-radix counter
    while (k >= 2 && parent[k] == k - 1) parent[k--] = 1;
    if (k < 2) break;
    ++parent[k];
  }
  return out;
}

}  // namespace specnet
