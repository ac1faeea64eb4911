#include <numeric>
#include <random>

#include "doctest.h"
#include "rpt/generators.hpp"

using namespace rpt;

TEST_CASE("random graphs are deterministic and exact") {
  for (RandomKind k : {RandomKind::Sp, RandomKind::Partial2Tree, RandomKind::IndependentParallel})
    for (int n : {6, 17, 40}) {
      Graph a = gen_random(k, n, 42), b = gen_random(k, n, 42);
      CHECK(a.n == n);
      CHECK(a.edges == b.edges);
      CHECK(a.max_degree() <= 4);
      CHECK(a.connected());
      GraphClass c = validate_partial2tree(a);
      CHECK(c != GraphClass::NotPartial2Tree);
      if (k != RandomKind::Partial2Tree) CHECK(c == GraphClass::SpBlock);
    }
  CHECK(parse_kind("ip") == RandomKind::IndependentParallel);
  CHECK(std::string(to_string(RandomKind::Partial2Tree)) == "partial2tree");
  CHECK_THROWS(parse_kind("tree"));
}

TEST_CASE("lower bound family") {
  LowerBound a = gen_lower_bound(2);
  CHECK(a.g.n == 92);
  LowerBound b = gen_lower_bound(4);
  CHECK(b.g.n == 380);
  CHECK(b.L == 3);
  CHECK(b.level_sizes == std::vector<int>{8, 20, 62, 188});
  CHECK(b.g.max_degree() <= 4);
  CHECK(validate_partial2tree(b.g) == GraphClass::SpBlock);
  CHECK(b.p1.size() == 4);
  CHECK(b.p1.front() == b.copy_a[1]);
  CHECK(b.p1.back() == b.copy_b[0]);
  CHECK_THROWS_AS(gen_lower_bound(3), std::invalid_argument);
  CHECK_THROWS_AS(gen_lower_bound(40, 10000), std::invalid_argument);
}

TEST_CASE("canonical form ignores labels") {
  std::mt19937 rng(1);
  for (uint64_t s = 0; s < 30; ++s) {
    Graph g = gen_random(RandomKind::Partial2Tree, 9, s);
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_form(relabel(g, perm)) == canonical_form(g));
  }
  CHECK(canonical_form(cycle_graph(6)) != canonical_form(theta_graph({2, 2, 2})));
}

TEST_CASE("exhaustive corpus sizes") {
  std::vector<int> per(9, 0);
  for (const Graph& g : exhaustive_partial2trees(8)) ++per[g.n];
  CHECK(per == std::vector<int>{0, 1, 1, 2, 5, 15, 46, 161, 634});
}

TEST_CASE("named graphs") {
  CHECK(cycle_graph(7).m() == 7);
  Graph t = theta_graph({2, 3, 4});
  CHECK(t.n == 8);
  CHECK(t.m() == 9);
  CHECK(complete_bipartite(2, 3).m() == 6);
}
