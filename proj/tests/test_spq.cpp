#include <set>

#include "doctest.h"
#include "rpt/generators.hpp"
#include "rpt/spq_tree.hpp"

using namespace rpt;

TEST_CASE("theta tree shape") {
  SpqTree t = build_spq_star(theta_graph({3, 3, 3}));
  CHECK(t.size() == 4);
  CHECK(t.qnodes.size() == 3);
  int p = -1;
  for (int i = 0; i < t.size(); ++i)
    if (t.nodes[i].kind == NodeKind::P) p = i;
  REQUIRE(p >= 0);
  CHECK(t.nodes[p].nbrs.size() == 3);
  for (int q : t.qnodes) CHECK(t.nodes[q].length() == 3);
  CHECK(is_independent_parallel(t));
}

TEST_CASE("every edge in exactly one chain") {
  for (uint64_t s = 0; s < 40; ++s) {
    Graph g = gen_random(RandomKind::Sp, 6 + static_cast<int>(s % 30), s);
    SpqTree t = build_spq_star(g);
    std::vector<int> hits(g.m(), 0);
    for (int q : t.qnodes)
      for (int e : t.nodes[q].chain_edges) ++hits[e];
    for (int e = 0; e < g.m(); ++e) {
      CHECK(hits[e] == 1);
      CHECK(t.nodes[t.q_of_edge[e]].kind == NodeKind::Q);
    }
    for (int v = 0; v < g.n; ++v) CHECK((t.q_of_interior[v] >= 0) == (g.degree(v) == 2));
  }
}

TEST_CASE("rooted views") {
  Graph g = gen_random(RandomKind::Sp, 20, 3);
  SpqTree t = build_spq_star(g);
  for (int q : t.qnodes) {
    RootedView rv = rooted_view(t, q);
    CHECK(rv.root == q);
    CHECK(rv.order.size() == static_cast<size_t>(t.size()));
    CHECK(rv.s == std::min(t.nodes[q].a, t.nodes[q].b));
    for (int x : rv.order) {
      if (x == q) continue;
      auto [a, b] = t.poles(x, rv.parent[x]);
      CHECK(std::set<int>{a, b} == std::set<int>{rv.u[x], rv.v[x]});
    }
  }
}

TEST_CASE("cycles are rejected") { CHECK_THROWS_AS(build_spq_star(cycle_graph(5)), std::invalid_argument); }

TEST_CASE("independent parallel detection") {
  // two parallel pairs meeting at vertex 1
  Graph g = parse_graph("0 3\n3 1\n0 4\n4 1\n1 5\n5 2\n1 6\n6 2\n2 7\n7 0\n");
  CHECK_FALSE(is_independent_parallel(build_spq_star(g)));
  CHECK(is_independent_parallel(build_spq_star(complete_bipartite(2, 3))));
  for (uint64_t s = 0; s < 20; ++s)
    CHECK(is_independent_parallel(build_spq_star(gen_random(RandomKind::IndependentParallel, 30, s))));
}
