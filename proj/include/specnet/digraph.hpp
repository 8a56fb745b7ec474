#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specnet/errors.hpp"
#include "specnet/matrix.hpp"

namespace specnet {

using Arc = std::pair<int, int>;  // (tail, head), 1-based

inline std::string arc_str(Arc a) {
  return "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
}

// Labeled simple directed graph, optionally integer-weighted. Immutable after
// construction; arcs are kept sorted lexicographically by (tail, head) so
// every iteration order in the library is deterministic.
class DiGraph {
 public:
  DiGraph(int n, std::vector<Arc> arcs) : DiGraph(n, std::move(arcs), {}, false) {}

  DiGraph(int n, std::vector<Arc> arcs, std::vector<long long> weights)
      : DiGraph(n, std::move(arcs), std::move(weights), true) {}

  int vertex_count() const { return n_; }
  int arc_count() const { return (int)arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool weighted() const { return weighted_; }
  const std::vector<long long>& weights() const { return weights_; }

  bool has_arc(int tail, int head) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{tail, head});
  }

  long long weight_of(int tail, int head) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{tail, head});
    if (it == arcs_.end() || *it != Arc{tail, head}) return 0;
    return weighted_ ? weights_[it - arcs_.begin()] : 1;
  }

  // m for unweighted graphs, the net number of arcs m_w otherwise.
  long long net_arcs() const {
    if (!weighted_) return (long long)arcs_.size();
    return std::accumulate(weights_.begin(), weights_.end(), 0ll);
  }

  std::vector<long long> in_degrees() const {
    std::vector<long long> d(n_ + 1, 0);
    for (size_t k = 0; k < arcs_.size(); ++k) d[arcs_[k].second] += weighted_ ? weights_[k] : 1;
    d.erase(d.begin());
    return d;
  }

  std::vector<long long> out_degrees() const {
    std::vector<long long> d(n_ + 1, 0);
    for (size_t k = 0; k < arcs_.size(); ++k) d[arcs_[k].first] += weighted_ ? weights_[k] : 1;
    d.erase(d.begin());
    return d;
  }

  std::vector<std::vector<int>> out_adjacency() const {
    std::vector<std::vector<int>> adj(n_ + 1);
    for (const Arc& a : arcs_) adj[a.first].push_back(a.second);
    return adj;
  }

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_ && a.weighted_ == b.weighted_ && a.weights_ == b.weights_;
  }
  friend bool operator!=(const DiGraph& a, const DiGraph& b) { return !(a == b); }

 private:
  DiGraph(int n, std::vector<Arc> arcs, std::vector<long long> weights, bool weighted)
      : n_(n), arcs_(std::move(arcs)), weights_(std::move(weights)), weighted_(weighted) {
    require(n_ >= 1, errc::n_out_of_range, "vertex count must be positive");
    require(n_ <= 65536, errc::n_out_of_range, "vertex count exceeds 2^16");
    if (weighted_)
      require(weights_.size() == arcs_.size(), errc::precondition,
              "weights must align with arcs");
    if (arcs_.empty()) weighted_ = false;  // arcless graphs have no weights to carry
    for (const Arc& a : arcs_) {
      require(a.first >= 1 && a.first <= n_ && a.second >= 1 && a.second <= n_,
              errc::endpoint_out_of_range, "arc " + arc_str(a));
      require(a.first != a.second, errc::self_arc, "arc " + arc_str(a));
    }
    if (weighted_)
      for (size_t k = 0; k < weights_.size(); ++k)
        require(weights_[k] != 0, errc::zero_weight, "arc " + arc_str(arcs_[k]));
    // sort arcs (and weights along with them), then reject duplicates
    std::vector<size_t> order(arcs_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return arcs_[x] < arcs_[y]; });
    std::vector<Arc> sorted_arcs(arcs_.size());
    std::vector<long long> sorted_w(weighted_ ? arcs_.size() : 0);
    for (size_t k = 0; k < order.size(); ++k) {
      sorted_arcs[k] = arcs_[order[k]];
      if (weighted_) sorted_w[k] = weights_[order[k]];
    }
    for (size_t k = 1; k < sorted_arcs.size(); ++k)
      require(sorted_arcs[k] != sorted_arcs[k - 1], errc::duplicate_arc,
              "arc " + arc_str(sorted_arcs[k]));
    arcs_ = std::move(sorted_arcs);
    weights_ = std::move(sorted_w);
  }

  int n_;
  std::vector<Arc> arcs_;
  std::vector<long long> weights_;
  bool weighted_;
};

using DegreeSequence = std::vector<long long>;

inline DiGraph make_digraph(int n, std::vector<Arc> arcs,
                            std::optional<std::vector<long long>> weights = std::nullopt) {
  if (weights) return DiGraph(n, std::move(arcs), std::move(*weights));
  return DiGraph(n, std::move(arcs));
}

inline DiGraph complement(const DiGraph& g) {
  require(!g.weighted(), errc::weighted_unsupported, "complement of a weighted graph");
  int n = g.vertex_count();
  std::vector<Arc> arcs;
  arcs.reserve((size_t)n * (n - 1) - g.arcs().size());
  auto it = g.arcs().begin();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      if (it != g.arcs().end() && *it == Arc{i, j}) {
        ++it;
        continue;
      }
      arcs.push_back({i, j});
    }
  return DiGraph(n, std::move(arcs));
}

inline DiGraph transpose(const DiGraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) arcs.push_back({a.second, a.first});
  if (!g.weighted()) return DiGraph(g.vertex_count(), std::move(arcs));
  return DiGraph(g.vertex_count(), std::move(arcs), g.weights());
}

// Keeps the given vertices and relabels them 1..|keep| in ascending order of
// their original labels, so outputs remain valid inputs elsewhere.
inline DiGraph induced_subgraph(const DiGraph& g, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  require(!keep.empty(), errc::empty_keep_set, "induced subgraph needs vertices");
  for (int v : keep)
    require(v >= 1 && v <= g.vertex_count(), errc::endpoint_out_of_range,
            "keep vertex " + std::to_string(v));
  std::vector<int> relabel(g.vertex_count() + 1, 0);
  for (size_t k = 0; k < keep.size(); ++k) relabel[keep[k]] = (int)k + 1;
  std::vector<Arc> arcs;
  std::vector<long long> weights;
  for (size_t k = 0; k < g.arcs().size(); ++k) {
    const Arc& a = g.arcs()[k];
    if (relabel[a.first] && relabel[a.second]) {
      arcs.push_back({relabel[a.first], relabel[a.second]});
      if (g.weighted()) weights.push_back(g.weights()[k]);
    }
  }
  if (!g.weighted()) return DiGraph((int)keep.size(), std::move(arcs));
  return DiGraph((int)keep.size(), std::move(arcs), std::move(weights));
}

// A root reaches every other vertex by a directed path.
inline std::pair<bool, std::vector<int>> is_rooted(const DiGraph& g) {
  int n = g.vertex_count();
  auto adj = g.out_adjacency();
  std::vector<int> roots;
  std::vector<int> seen(n + 1), stack;
  for (int r = 1; r <= n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    stack.assign(1, r);
    seen[r] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    if (count == n) roots.push_back(r);
  }
  return {!roots.empty(), roots};
}

inline bool is_acyclic(const DiGraph& g) {
  int n = g.vertex_count();
  auto adj = g.out_adjacency();
  std::vector<int> indeg(n + 1, 0);
  for (const Arc& a : g.arcs()) ++indeg[a.second];
  std::vector<int> queue;
  for (int v = 1; v <= n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int removed = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++removed;
    for (int w : adj[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  return removed == n;
}

// Non-decreasing (weighted) in-degree sequence.
inline DegreeSequence in_degree_sequence(const DiGraph& g) {
  DegreeSequence d = g.in_degrees();
  std::sort(d.begin(), d.end());
  return d;
}

// The almost regular in-degree sequence for n vertices and m arcs:
// n(nu+1)-m vertices of degree nu and m-n*nu of degree nu+1, nu = floor(m/n).
inline DegreeSequence almost_regular_sequence(int n, long long m) {
  long long nu = m >= 0 ? m / n : -((-m + n - 1) / n);
  DegreeSequence d;
  d.reserve(n);
  long long high = m - (long long)n * nu;
  for (long long i = 0; i < n - high; ++i) d.push_back(nu);
  for (long long i = 0; i < high; ++i) d.push_back(nu + 1);
  return d;
}

inline bool almost_regular(const DiGraph& g) {
  DegreeSequence d = in_degree_sequence(g);
  return d.back() - d.front() <= 1;
}

// In-degree Laplacian L = D - A over an exact integer type: the (i,j) entry
// for i != j is minus the weight of arc (j,i).
template <class I>
Matrix<I> laplacian(const DiGraph& g) {
  Matrix<I> m(g.vertex_count());
  for (size_t k = 0; k < g.arcs().size(); ++k) {
    const Arc& a = g.arcs()[k];
    long long w = g.weighted() ? g.weights()[k] : 1;
    int i = a.second - 1, j = a.first - 1;
    m.at(i, i) = m.at(i, i) + I(w);
    m.at(i, j) = m.at(i, j) - I(w);
  }
  return m;
}

}  // namespace specnet
