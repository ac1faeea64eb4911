#include <map>

#include "doctest.h"
#include "rpt/block_composer.hpp"
#include "rpt/generators.hpp"
#include "rpt/oracle.hpp"
#include "rpt/sp_tester.hpp"

using namespace rpt;

namespace {

// root chain length -> (non-root chain length or 0 for the P-node) -> set, frozen from the oracle
using Frozen = std::map<int, std::map<int, std::string>>;

void check_theta(const std::vector<int>& lengths, const Frozen& want) {
  SpqTree t = build_spq_star(theta_graph(lengths));
  SpDp dp(t);
  for (int q : t.qnodes) {
    RootedView rv = rooted_view(t, q);
    for (int x : rv.order) {
      if (x == q) continue;
      int key = t.nodes[x].kind == NodeKind::P ? 0 : t.nodes[x].length();
      CAPTURE(q);
      CAPTURE(x);
      CHECK(dp.sigma(x, rv.parent[x], rv.u[x]).str() == want.at(t.nodes[q].length()).at(key));
    }
  }
}

}  // namespace

TEST_CASE("theta sets match frozen oracle values") {
  check_theta({3, 3, 3}, {{3, {{0, "[-2,-1,0,1,2]"}, {3, "[-2,-1,0,1,2]"}}}});
  check_theta({2, 3, 4}, {{2, {{0, "[-3,-2,-1,0,1,2,3]"}, {3, "[-2,-1,0,1,2]"}, {4, "[-3,-2,-1,0,1,2,3]"}}},
                          {3, {{0, "[-3,-2,-1,0,1,2,3]"}, {2, "[-1,0,1]"}, {4, "[-3,-2,-1,0,1,2,3]"}}},
                          {4, {{0, "[-2,-1,0,1,2]"}, {2, "[-1,0,1]"}, {3, "[-2,-1,0,1,2]"}}}});
  check_theta({1, 3, 3}, {{1, {{0, "[-2,-1,0,1,2]"}, {3, "[-2,-1,0,1,2]"}}},
                          {3, {{0, "[-2,-1,0,1,2]"}, {1, "[0]"}, {3, "[-2,-1,0,1,2]"}}}});
  check_theta({1, 4, 4}, {{1, {{0, "[-3,-2,-1,0,1,2,3]"}, {4, "[-3,-2,-1,0,1,2,3]"}}},
                          {4, {{0, "[-2,-1,0,1,2]"}, {1, "[0]"}, {4, "[-3,-2,-1,0,1,2,3]"}}}});
}

TEST_CASE("block verdicts") {
  CHECK(test_sp_block(build_spq_star(theta_graph({3, 3, 3}))).has_value());
  CHECK_FALSE(test_sp_block(build_spq_star(theta_graph({2, 2, 3}))).has_value());
  CHECK_FALSE(test_sp_block(build_spq_star(complete_bipartite(2, 3))).has_value());
}

TEST_CASE("memo off and shuffled roots give the same verdicts") {
  for (uint64_t s = 0; s < 60; ++s) {
    SpqTree t = build_spq_star(gen_random(RandomKind::Sp, 6 + static_cast<int>(s % 20), s));
    bool base = test_sp_block(t).has_value();
    CHECK(test_sp_block(t, {}, {.memo = false}).has_value() == base);
    CHECK(test_sp_block(t, {}, {.shuffle_roots = true, .seed = s}).has_value() == base);
  }
}

TEST_CASE("witness assignment is consistent with the sets") {
  for (uint64_t s = 0; s < 40; ++s) {
    SpqTree t = build_spq_star(gen_random(RandomKind::Sp, 8 + static_cast<int>(s % 12), 50 + s));
    auto w = test_sp_block(t);
    if (!w) continue;
    SpDp dp(t);
    const RootedView& rv = w->assignment.view;
    for (int x : rv.order)
      if (x != w->root) CHECK(dp.sigma(x, rv.parent[x], rv.u[x]).contains(w->assignment.sigma2[x]));
  }
}

TEST_CASE("candidate roots") {
  SpqTree t = build_spq_star(theta_graph({2, 3, 4}));
  auto all = candidate_roots(t, {});
  REQUIRE(all.size() == 3);
  CHECK(t.nodes[all[0]].length() == 4);
  int mid = t.nodes[all[1]].chain[1];
  CHECK(candidate_roots(t, {RootConstraint::ForcedRootChain, mid}) == std::vector<int>{all[1]});
  CHECK_THROWS_AS(candidate_roots(t, {RootConstraint::ExternalNonRight, t.nodes[all[0]].a}), std::invalid_argument);
}

TEST_CASE("cycle closed forms against the oracle") {
  using W = CornerConstraint::Where;
  struct Row {
    CycleConstraint c;
    CornerConstraint cc;
  };
  std::vector<Row> rows{{CycleConstraint::ReflexAtVertex, {W::Internal, 0, 0x08}},
                        {CycleConstraint::ExternalFlat, {W::External, 0, 0x04}},
                        {CycleConstraint::ExternalReflex, {W::External, 0, 0x08}}};
  for (int n = 3; n <= 8; ++n) {
    CHECK(cycle_feasible(n, CycleConstraint::None) == oracle_test(cycle_graph(n)));
    for (auto& r : rows) CHECK(cycle_feasible(n, r.c) == oracle_test(cycle_graph(n), {r.cc}));
  }
  CHECK_FALSE(cycle_feasible(4, CycleConstraint::ReflexAtVertex));
  CHECK(cycle_feasible(6, CycleConstraint::ReflexAtVertex));
  CHECK(cycle_feasible(5, CycleConstraint::ExternalNonRight));
  auto turns = cycle_turns(std::vector<uint8_t>(6, 7));
  REQUIRE(turns.has_value());
  int sum = 0;
  for (int t : *turns) sum += t;
  CHECK(sum == 4);
}

TEST_CASE("reroot order does not recurse forever") {
  Graph g = gen_random(RandomKind::Partial2Tree, 10, 71);
  CHECK_NOTHROW(test_partial2tree(g));
  SpqTree t = build_spq_star(
      parse_graph("0 1\n0 2\n1 2\n1 3\n1 5\n2 3\n2 4\n3 4\n5 6\n6 7\n3 7\n"));
  SpDp dp(t);
  for (int q : t.qnodes) {
    RootedView rv = rooted_view(t, q);
    for (int x : rv.order)
      if (x != q) CHECK(dp.sigma(x, rv.parent[x], rv.u[x]) == oracle_spirality_set(t, rv, x));
  }
}
