#include "doctest.h"
#include "rpt/block_composer.hpp"
#include "rpt/generators.hpp"
#include "rpt/oracle.hpp"

using namespace rpt;

TEST_CASE("verdicts match the oracle on small graphs") {
  for (const Graph& g : exhaustive_partial2trees(6)) {
    ComposeResult r = test_partial2tree(g);
    CHECK(r.yes == oracle_test(g));
    if (r.yes) CHECK(validate_rep(r.rep).ok);
  }
}

TEST_CASE("canonical cases") {
  CHECK(test_partial2tree(cycle_graph(4)).yes);
  CHECK(test_partial2tree(cycle_graph(5)).yes);
  CHECK_FALSE(test_partial2tree(cycle_graph(3)).yes);
  CHECK_FALSE(test_partial2tree(complete_bipartite(2, 3)).yes);
  CHECK(test_partial2tree(theta_graph({3, 3, 3})).yes);
  CHECK(test_partial2tree(Graph(1)).yes);
}

TEST_CASE("two squares sharing a vertex") {
  Graph g = parse_graph("0 1\n1 2\n2 3\n3 0\n0 4\n4 5\n5 6\n6 0\n");
  bool o = oracle_test(g);
  CHECK(o);
  ComposeResult r = test_partial2tree(g);
  CHECK(r.yes == o);
  CHECK(validate_rep(r.rep).ok);
}

TEST_CASE("two hexagons sharing a vertex and a cross") {
  Graph g = parse_graph("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 6\n6 7\n7 8\n8 9\n9 10\n10 0\n");
  CHECK(oracle_test(g, {}, {12, 24}));
  ComposeResult r = test_partial2tree(g);
  CHECK(r.yes);
  CHECK(validate_rep(r.rep).ok);
  ComposeResult star = test_partial2tree(complete_bipartite(1, 4));
  CHECK(star.yes);
  CHECK(validate_rep(star.rep).ok);
}

TEST_CASE("lazy and eager labels agree") {
  for (uint64_t s = 0; s < 150; ++s) {
    Graph g = gen_random(RandomKind::Partial2Tree, 6 + static_cast<int>(s % 30), 70 + s);
    ComposeResult eager = test_partial2tree(g, {.realize = false});
    ComposeResult lazy = test_partial2tree(g, {.lazy_labels = true, .realize = false});
    CHECK(eager.yes == lazy.yes);
    CHECK(lazy.local_tests <= eager.local_tests);
    CHECK(eager.case_hit >= 1);
    CHECK(eager.case_hit <= 3);
  }
}

TEST_CASE("constraints of a rooted tree") {
  // triangle-free star of two squares and a pendant edge at vertex 0
  Graph g = parse_graph("0 1\n1 2\n2 3\n3 0\n0 4\n4 5\n5 6\n6 0\n1 7\n");
  BcTree bc = build_bc_tree(g);
  int sq = bc.block_of_edge[g.find_edge(0, 1)];
  RootedBc rb = root_bc_tree(bc, sq);
  auto cfg = derive_constraints(g, bc, rb);
  REQUIRE(cfg.size() == bc.blocks.size());
  CHECK(cfg[sq].parent_cut == -1);
  int other = bc.block_of_edge[g.find_edge(0, 4)];
  CHECK(cfg[other].parent_vertex == 0);
  CHECK(cfg[other].ext != ExtKind::None);
  int pendant = bc.block_of_edge[g.find_edge(1, 7)];
  CHECK(cfg[pendant].parent_vertex == 1);
}

TEST_CASE("fast path switch") {
  Graph ip = gen_random(RandomKind::IndependentParallel, 40, 9);
  ComposeResult on = test_partial2tree(ip, {.fast_path = FastPath::On});
  ComposeResult off = test_partial2tree(ip, {.fast_path = FastPath::Off});
  CHECK(on.yes == off.yes);
  CHECK(on.used_fast_path);
  CHECK_FALSE(off.used_fast_path);
  CHECK_THROWS_AS(test_partial2tree(cycle_graph(5), {.fast_path = FastPath::On}), InputError);
  CHECK_THROWS_AS(test_partial2tree(parse_graph("0 3\n3 1\n0 4\n4 1\n1 5\n5 2\n1 6\n6 2\n2 7\n7 0\n"), {.fast_path = FastPath::On}), InputError);
}

TEST_CASE("non partial 2-trees are rejected") {
  Graph k4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  CHECK_THROWS_AS(test_partial2tree(k4), InputError);
}
