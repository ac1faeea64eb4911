#include <set>

#include "doctest.h"
#include "rpt/generators.hpp"
#include "rpt/graph.hpp"

using namespace rpt;

TEST_CASE("parse json and edge list") {
  Graph a = parse_graph(R"({"n":4,"edges":[[0,1],[1,2],[2,3],[3,0]]})");
  CHECK(a.n == 4);
  CHECK(a.m() == 4);
  CHECK(a.find_edge(3, 0) == 3);
  Graph b = parse_graph("0 1\n1 2\n2 0\n");
  CHECK(b.n == 3);
  CHECK(b.m() == 3);
  CHECK(is_simple_cycle(b));
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_graph("{\"n\":2,"), InputError);
  CHECK_THROWS_AS(parse_graph("0 x\n"), InputError);
  CHECK_THROWS_AS(check_graph(parse_graph("0 1\n1 0\n")), InputError);
  CHECK_THROWS_AS(check_graph(parse_graph("0 0\n")), InputError);
  CHECK_THROWS_AS(check_graph(parse_graph(R"({"n":4,"edges":[[0,1],[2,3]]})")), InputError);
  CHECK_THROWS_AS(check_graph(complete_bipartite(1, 5)), InputError);
  CHECK_NOTHROW(check_graph(complete_bipartite(1, 4)));
}

TEST_CASE("classification") {
  CHECK(validate_partial2tree(cycle_graph(5)) == GraphClass::SimpleCycle);
  CHECK(validate_partial2tree(theta_graph({3, 3, 3})) == GraphClass::SpBlock);
  CHECK(validate_partial2tree(complete_bipartite(2, 3)) == GraphClass::SpBlock);
  Graph k4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  CHECK(validate_partial2tree(k4) == GraphClass::NotPartial2Tree);
  Graph bowtie = parse_graph("0 1\n1 2\n2 0\n0 3\n3 4\n4 0\n");
  CHECK(validate_partial2tree(bowtie) == GraphClass::Partial2Tree);
  CHECK(validate_partial2tree(complete_bipartite(1, 3)) == GraphClass::Partial2Tree);
}

TEST_CASE("block-cut tree") {
  Graph g = parse_graph("0 1\n1 2\n2 0\n0 3\n3 4\n4 0\n4 5\n");
  BcTree bc = build_bc_tree(g);
  CHECK(bc.blocks.size() == 3);
  CHECK(bc.cutvertices == std::vector<int>{0, 4});
  int trivial = 0;
  for (auto& b : bc.blocks) trivial += b.trivial;
  CHECK(trivial == 1);
  CHECK(bc.blocks_of_cut[0].size() == 2);
  CHECK(bc.deg_in_block(g, 0, bc.block_of_edge[g.find_edge(0, 1)]) == 2);
  Subgraph s = extract_block(g, bc.blocks[bc.block_of_edge[g.find_edge(3, 4)]]);
  CHECK(s.g.n == 3);
  CHECK(is_simple_cycle(s.g));
}

TEST_CASE("json round trip") {
  Graph g = theta_graph({2, 3, 4});
  Graph h = parse_graph(to_json(g));
  CHECK(h.n == g.n);
  auto key = [](const Graph& x) {
    std::set<std::pair<int, int>> s;
    for (auto [u, v] : x.edges) s.insert({std::min(u, v), std::max(u, v)});
    return s;
  };
  CHECK(key(h) == key(g));
}
