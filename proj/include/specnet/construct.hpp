#pragma once

#include <string>
#include <vector>

#include "specnet/digraph.hpp"
#include "specnet/errors.hpp"
#include "specnet/trees.hpp"

namespace specnet {

struct TraceStep {
  long long m;  // arc count after this step
  int v;        // head, n - ((m-1) mod n)
  int u;        // tail, smallest feasible index
};

// Replayable record of an inductive construction run.
struct ConstructionTrace {
  int n = 0;
  std::vector<Arc> tree_arcs;
  std::vector<TraceStep> steps;

  long long final_m() const { return (long long)tree_arcs.size() + (long long)steps.size(); }
};

struct BuildResult {
  DiGraph graph;
  ConstructionTrace trace;
};

// Inductive construction: start from a seed tree, then for each arc count
// m add (u,v) with v = n-((m-1) mod n) and u the smallest index such that
// u != v and (u,v) is absent. The per-head cursor makes the u-search
// amortized constant time, since arcs are never removed.
inline BuildResult build(int n, long long m, const TreeSpec& tree) {
  require(n >= 2, errc::n_out_of_range, "construction needs n >= 2");
  require(n <= 4096, errc::n_out_of_range, "construction supports n <= 4096");
  require(m >= n - 1 && m <= (long long)n * (n - 1), errc::m_out_of_range,
          "m must lie in [n-1, n(n-1)]");
  DiGraph seed = make_tree(tree);
  require(seed.vertex_count() == n, errc::precondition, "seed tree size mismatch");

  std::vector<char> adj((size_t)(n + 1) * (n + 1), 0);
  std::vector<Arc> arcs = seed.arcs();
  for (const Arc& a : arcs) adj[(size_t)a.first * (n + 1) + a.second] = 1;

  ConstructionTrace trace;
  trace.n = n;
  trace.tree_arcs = arcs;

  std::vector<int> next_u(n + 1, 1);
  for (long long mm = n; mm <= m; ++mm) {
    int v = n - (int)((mm - 1) % n);
    int& c = next_u[v];
    while (c <= n && (c == v || adj[(size_t)c * (n + 1) + v])) ++c;
    if (c > n) fail(errc::internal_u_not_found, "no feasible tail for head " + std::to_string(v));
    adj[(size_t)c * (n + 1) + v] = 1;
    arcs.push_back({c, v});
    trace.steps.push_back({mm, v, c});
  }
  return {DiGraph(n, std::move(arcs)), std::move(trace)};
}

// The in-neighbor set the construction is guaranteed to produce for vertex i
// at in-degree d: for the root it is {2,...,d+1}; otherwise the tree parent
// plus the d-1 smallest other indices.
inline std::vector<int> expected_in_neighbors(const DiGraph& tree, int i, int d) {
  std::vector<int> parent = tree_parents(tree);
  int n = tree.vertex_count();
  require(i >= 1 && i <= n, errc::endpoint_out_of_range, "vertex " + std::to_string(i));
  require(d >= 0 && d <= n - 1, errc::degree_infeasible,
          "in-degree " + std::to_string(d) + " out of [0,n-1]");
  std::vector<int> out;
  if (i == 1) {
    for (int k = 2; k <= d + 1; ++k) out.push_back(k);
    return out;
  }
  require(d >= 1, errc::degree_infeasible, "non-root vertices keep their tree arc");
  int pj = parent[i];
  out.push_back(pj);
  for (int k = 1; k <= n && (int)out.size() < d; ++k)
    if (k != i && k != pj) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

// Closed form for dense constructions: when m >= (n-1)^2, the result is the
// complement of the forest made of a star rooted at vertex n over leaves
// 1..n(n-1)-m, and is independent of the seed tree.
inline DiGraph large_m_complement_form(int n, long long m) {
  require(n >= 2, errc::n_out_of_range, "needs n >= 2");
  require(m >= (long long)(n - 1) * (n - 1) && m <= (long long)n * (n - 1), errc::m_out_of_range,
          "m must lie in [(n-1)^2, n(n-1)]");
  std::vector<Arc> forest;
  long long leaves = (long long)n * (n - 1) - m;
  for (int k = 1; k <= leaves; ++k) forest.push_back({n, k});
  return complement(DiGraph(n, std::move(forest)));
}

}  // namespace specnet
