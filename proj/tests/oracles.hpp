#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include <algorithm>
#include <numeric>
#include <vector>

#include "specnet/digraph.hpp"
#include "specnet/matrix.hpp"
#include "specnet/poly.hpp"

namespace oracles {

// Characteristic polynomial det(xI - M) by brute-force permutation expansion:
// sum over all permutations of signed products of degree<=1 polynomials.
// Exponential, fine for n <= 5.
inline specnet::Poly<long long> char_poly_bruteforce(const specnet::Matrix<long long>& m) {
  int n = m.dim();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  specnet::Poly<long long> acc;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    specnet::Poly<long long> prod(std::vector<long long>{1});
    for (int i = 0; i < n; ++i) {
      if (i == perm[i])
        prod = prod * specnet::Poly<long long>(std::vector<long long>{-m.at(i, i), 1});
      else
        prod = prod * specnet::Poly<long long>(std::vector<long long>{-m.at(i, perm[i])});
    }
    if (inversions % 2)
      acc = acc - prod;
    else
      acc = acc + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Reachability closure by Floyd-Warshall; roots are rows that reach everyone.
inline std::vector<int> roots_bruteforce(const specnet::DiGraph& g) {
  int n = g.vertex_count();
  std::vector<char> reach((size_t)n * n, 0);
  for (int i = 0; i < n; ++i) reach[(size_t)i * n + i] = 1;
  for (const specnet::Arc& a : g.arcs()) reach[(size_t)(a.first - 1) * n + (a.second - 1)] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (reach[(size_t)i * n + k])
        for (int j = 0; j < n; ++j)
          if (reach[(size_t)k * n + j]) reach[(size_t)i * n + j] = 1;
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    bool all = true;
    for (int j = 0; j < n; ++j) all = all && reach[(size_t)i * n + j];
    if (all) roots.push_back(i + 1);
  }
  return roots;
}

}  // namespace oracles
