#include <doctest.h>

#include <set>

#include "specnet/construct.hpp"
#include "specnet/spread.hpp"
#include "specnet/trees.hpp"

using namespace specnet;

namespace {

// Independent re-implementation of the inductive step: plain set lookups and
// a full scan for the smallest feasible tail at every step.
DiGraph build_bruteforce(int n, long long m, const DiGraph& seed) {
  std::set<Arc> arcs(seed.arcs().begin(), seed.arcs().end());
  for (long long mm = n; mm <= m; ++mm) {
    int v = n - (int)((mm - 1) % n);
    int u = 0;
    for (int c = 1; c <= n; ++c)
      if (c != v && !arcs.count({c, v})) {
        u = c;
        break;
      }
    REQUIRE(u != 0);
    arcs.insert({u, v});
  }
  return DiGraph(n, std::vector<Arc>(arcs.begin(), arcs.end()));
}

}  // namespace

TEST_CASE("make_tree: star, path, explicit, random") {
  CHECK(make_tree(TreeSpec::star(4)).arcs() == std::vector<Arc>{{1, 2}, {1, 3}, {1, 4}});
  CHECK(make_tree(TreeSpec::path(4)).arcs() == std::vector<Arc>{{1, 2}, {2, 3}, {3, 4}});

  CHECK_THROWS_WITH_AS(make_tree(TreeSpec::explicit_arcs(2, {{2, 1}})),
                       doctest::Contains("InvalidTreeArcs"), Error);
  CHECK_THROWS_WITH_AS(make_tree(TreeSpec::explicit_arcs(3, {{1, 2}, {1, 2}})), doctest::Contains("DuplicateArc"),
                       Error);
  CHECK_THROWS_WITH_AS(make_tree(TreeSpec::explicit_arcs(4, {{1, 2}, {1, 3}, {2, 3}})),
                       doctest::Contains("InvalidTreeArcs"), Error);  // 3 has two parents, 4 none
  CHECK_THROWS_AS(make_tree(TreeSpec::star(1)), Error);

  DiGraph t1 = make_tree(TreeSpec::random(7, 42));
  DiGraph t2 = make_tree(TreeSpec::random(7, 42));
  CHECK(t1 == t2);
  CHECK(is_valid_seed_tree(t1));
  for (uint64_t s = 0; s < 50; ++s) CHECK(is_valid_seed_tree(make_tree(TreeSpec::random(6, s))));
}

TEST_CASE("enumerate_trees: counts, distinctness, validity, ranking") {
  long long expected[] = {0, 0, 1, 2, 6, 24, 120, 720, 5040};
  for (int n = 2; n <= 8; ++n) {
    auto trees = enumerate_trees(n);
    REQUIRE((long long)trees.size() == expected[n]);
    std::set<std::vector<Arc>> distinct;
    for (const DiGraph& t : trees) {
      REQUIRE(is_valid_seed_tree(t));
      // rooted at 1, vertex n a leaf
      CHECK(t.out_degrees()[n - 1] == 0);
      CHECK(is_rooted(t).second == std::vector<int>{1});
      distinct.insert(t.arcs());
    }
    CHECK((long long)distinct.size() == expected[n]);
    // index(rank) reproduces the enumeration order; ranking inverts it
    for (long long r = 0; r < (long long)trees.size(); r += std::max<long long>(1, (long long)trees.size() / 64)) {
      CHECK(make_tree(TreeSpec::index(n, r)) == trees[r]);
      CHECK(rank_of_tree(trees[r]) == r);
    }
  }
  CHECK_THROWS_WITH_AS(enumerate_trees(10), doctest::Contains("NOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(enumerate_trees(1), doctest::Contains("NOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(make_tree(TreeSpec::index(4, 6)), doctest::Contains("RankOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(make_tree(TreeSpec::index(4, -1)), doctest::Contains("RankOutOfRange"), Error);
}

TEST_CASE("build: frozen base cases") {
  CHECK(build(2, 1, TreeSpec::star(2)).graph.arcs() == std::vector<Arc>{{1, 2}});
  CHECK(build(2, 2, TreeSpec::star(2)).graph.arcs() == std::vector<Arc>{{1, 2}, {2, 1}});

  // (5,5,path): v = 5-(4 mod 5) = 1, u = 2
  BuildResult r = build(5, 5, TreeSpec::path(5));
  CHECK(r.graph.arcs() == std::vector<Arc>{{1, 2}, {2, 1}, {2, 3}, {3, 4}, {4, 5}});
  REQUIRE(r.trace.steps.size() == 1);
  CHECK(r.trace.steps[0].m == 5);
  CHECK(r.trace.steps[0].v == 1);
  CHECK(r.trace.steps[0].u == 2);

  // m = n(n-1) is the complete graph for every seed
  for (long long rank = 0; rank < 6; ++rank)
    CHECK(build(4, 12, TreeSpec::index(4, rank)).graph.arc_count() == 12);

  CHECK_THROWS_WITH_AS(build(5, 3, TreeSpec::star(5)), doctest::Contains("MOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(build(5, 21, TreeSpec::star(5)), doctest::Contains("MOutOfRange"), Error);
}

TEST_CASE("build agrees with the brute-force rescan on every step") {
  for (int n = 2; n <= 6; ++n) {
    auto trees = enumerate_trees(n);
    for (size_t ti = 0; ti < trees.size(); ti += std::max<size_t>(1, trees.size() / 12)) {
      TreeSpec spec = TreeSpec::explicit_arcs(n, trees[ti].arcs());
      for (long long m = n - 1; m <= (long long)n * (n - 1); ++m) {
        BuildResult r = build(n, m, spec);
        REQUIRE(r.graph == build_bruteforce(n, m, trees[ti]));
        REQUIRE(r.graph.arc_count() == m);
        // v-formula invariant on the trace
        for (const TraceStep& s : r.trace.steps) REQUIRE(s.v == n - (int)((s.m - 1) % n));
        // seed containment and rootedness at 1
        for (const Arc& a : trees[ti].arcs()) REQUIRE(r.graph.has_arc(a.first, a.second));
        auto roots = is_rooted(r.graph).second;
        REQUIRE(std::find(roots.begin(), roots.end(), 1) != roots.end());
      }
    }
  }
}

TEST_CASE("expected_in_neighbors") {
  DiGraph star5 = make_tree(TreeSpec::star(5));
  DiGraph path5 = make_tree(TreeSpec::path(5));
  CHECK(expected_in_neighbors(star5, 3, 2) == std::vector<int>{1, 2});
  CHECK(expected_in_neighbors(star5, 1, 2) == std::vector<int>{2, 3});
  CHECK(expected_in_neighbors(path5, 4, 3) == std::vector<int>{1, 2, 3});
  CHECK(expected_in_neighbors(star5, 1, 0).empty());
  CHECK_THROWS_WITH_AS(expected_in_neighbors(star5, 3, 0), doctest::Contains("DegreeInfeasible"),
                       Error);
  CHECK_THROWS_WITH_AS(expected_in_neighbors(star5, 3, 5), doctest::Contains("DegreeInfeasible"),
                       Error);
}

TEST_CASE("degree law, in-neighbor law, zero-column law: n <= 5, all seeds") {
  for (int n = 2; n <= 5; ++n) {
    for (const DiGraph& tree : enumerate_trees(n)) {
      TreeSpec spec = TreeSpec::explicit_arcs(n, tree.arcs());
      for (long long m = n - 1; m <= (long long)n * (n - 1); ++m) {
        DiGraph g = build(n, m, spec).graph;
        REQUIRE(in_degree_sequence(g) == almost_regular_sequence(n, m));
        // per-vertex in-neighbor law
        std::vector<std::vector<int>> in(n + 1);
        for (const Arc& a : g.arcs()) in[a.second].push_back(a.first);
        for (int i = 1; i <= n; ++i) {
          std::sort(in[i].begin(), in[i].end());
          if (i == 1 && in[i].empty()) continue;  // d can be zero only for the root
          REQUIRE(in[i] == expected_in_neighbors(tree, i, (int)in[i].size()));
        }
        // vertex n has no outgoing arcs while m <= (n-1)^2
        if (m <= (long long)(n - 1) * (n - 1)) REQUIRE(g.out_degrees()[n - 1] == 0);
        // any arc (n,k) forces in-degree n-1 at k
        for (int k = 1; k < n; ++k)
          if (g.has_arc(n, k)) REQUIRE((long long)in[k].size() == n - 1);
      }
    }
  }
}

TEST_CASE("subgraph recursion: induced {1..n-1} replays at size n-1") {
  // spec example: G(5,7) from the star, keep {1,2,3,4}
  DiGraph g57 = build(5, 7, TreeSpec::star(5)).graph;
  long long d5 = g57.in_degrees()[4];
  DiGraph lhs = induced_subgraph(g57, {1, 2, 3, 4});
  DiGraph rhs = build(4, 7 - d5, TreeSpec::star(4)).graph;
  CHECK(lhs == rhs);

  for (int n = 3; n <= 5; ++n)
    for (const DiGraph& tree : enumerate_trees(n)) {
      std::vector<int> keep;
      for (int v = 1; v < n; ++v) keep.push_back(v);
      DiGraph subtree = induced_subgraph(tree, keep);
      TreeSpec spec = TreeSpec::explicit_arcs(n, tree.arcs());
      TreeSpec subspec = TreeSpec::explicit_arcs(n - 1, subtree.arcs());
      for (long long m = n - 1; m <= (long long)(n - 1) * (n - 1); ++m) {
        DiGraph g = build(n, m, spec).graph;
        long long dn = g.in_degrees()[n - 1];
        REQUIRE(induced_subgraph(g, keep) == build(n - 1, m - dn, subspec).graph);
      }
    }
}

TEST_CASE("large-m closed form and uniqueness") {
  DiGraph k4 = complement(make_digraph(4, {}));
  CHECK(large_m_complement_form(4, 12) == k4);
  {
    std::set<Arc> expect(k4.arcs().begin(), k4.arcs().end());
    expect.erase({4, 1});
    expect.erase({4, 2});
    CHECK(large_m_complement_form(4, 10).arcs() ==
          std::vector<Arc>(expect.begin(), expect.end()));
  }
  {
    std::set<Arc> expect(k4.arcs().begin(), k4.arcs().end());
    expect.erase({4, 1});
    expect.erase({4, 2});
    expect.erase({4, 3});
    CHECK(large_m_complement_form(4, 9).arcs() ==
          std::vector<Arc>(expect.begin(), expect.end()));
  }
  CHECK_THROWS_WITH_AS(large_m_complement_form(4, 8), doctest::Contains("MOutOfRange"), Error);

  for (int n = 2; n <= 5; ++n)
    for (long long m = (long long)(n - 1) * (n - 1); m <= (long long)n * (n - 1); ++m) {
      DiGraph closed = large_m_complement_form(n, m);
      for (const DiGraph& tree : enumerate_trees(n))
        REQUIRE(build(n, m, TreeSpec::explicit_arcs(n, tree.arcs())).graph == closed);
    }
}

TEST_CASE("star-seed equivalence: in-neighbors are the d smallest") {
  for (int n = 2; n <= 6; ++n)
    for (long long m = n - 1; m <= (long long)n * (n - 1); ++m) {
      DiGraph g = build(n, m, TreeSpec::star(n)).graph;
      std::vector<std::vector<int>> in(n + 1);
      for (const Arc& a : g.arcs()) in[a.second].push_back(a.first);
      for (int i = 1; i <= n; ++i) {
        std::sort(in[i].begin(), in[i].end());
        std::vector<int> expect;
        for (int k = 1; k <= n && (int)expect.size() < (int)in[i].size(); ++k)
          if (k != i) expect.push_back(k);
        REQUIRE(in[i] == expect);
      }
    }
}

TEST_CASE("absorption: coinciding sequences stay identical") {
  int n = 4;
  auto trees = enumerate_trees(n);
  for (size_t a = 0; a < trees.size(); ++a)
    for (size_t b = a + 1; b < trees.size(); ++b) {
      TreeSpec sa = TreeSpec::explicit_arcs(n, trees[a].arcs());
      TreeSpec sb = TreeSpec::explicit_arcs(n, trees[b].arcs());
      bool met = false;
      for (long long m = n - 1; m <= (long long)n * (n - 1); ++m) {
        bool same = build(n, m, sa).graph == build(n, m, sb).graph;
        if (met) REQUIRE(same);
        met = met || same;
      }
      REQUIRE(met);  // they all end at the complete graph
    }
}

TEST_CASE("constructed graphs carry the optimal spectrum (spot sizes)") {
  for (int n = 2; n <= 8; ++n)
    for (long long m = n - 1; m <= (long long)n * (n - 1); ++m) {
      REQUIRE(matches_optimal_spectrum(build(n, m, TreeSpec::star(n)).graph));
      REQUIRE(matches_optimal_spectrum(build(n, m, TreeSpec::path(n)).graph));
    }
}

TEST_CASE("build scales to larger n") {
  DiGraph g = build(60, 60 * 59, TreeSpec::star(60)).graph;
  CHECK(g.arc_count() == 3540);
  DiGraph h = build(60, 1000, TreeSpec::path(60)).graph;
  CHECK(h.arc_count() == 1000);
  CHECK(in_degree_sequence(h) == almost_regular_sequence(60, 1000));
}
