#include "doctest.h"
#include "rpt/generators.hpp"
#include "rpt/ip_fastpath.hpp"

using namespace rpt;

TEST_CASE("shapes") {
  Interval i;
  REQUIRE(classify(SpiralitySet::single(0), i));
  CHECK(i == Interval::trivial(0));
  REQUIRE(classify(SpiralitySet::from_values({-2, 2}), i));
  CHECK(i == Interval::trivial(1));
  REQUIRE(classify(SpiralitySet::from_values({-4, -2, 2, 4}), i));
  CHECK(i == Interval::jump1(1, 2));
  REQUIRE(classify(SpiralitySet::range(-6, 6), i));
  CHECK(i == Interval::jump1(0, 3));
  REQUIRE(classify(SpiralitySet::range(-8, 8, 4), i));
  CHECK(i == Interval::jump2(4));
  REQUIRE(classify(SpiralitySet::from_values({-6, -2, 2, 6}), i));
  CHECK(i == Interval::jump2(3));
  CHECK_FALSE(classify(SpiralitySet::from_values({0, 4, 6}), i));
  CHECK(interval_q(1) == Interval::trivial(0));
  CHECK(interval_q(5) == Interval::jump1(0, 4));
  CHECK(Interval::jump2(5).admits(3));
  CHECK_FALSE(Interval::jump2(5).admits(2));
}

TEST_CASE("series counters") {
  SeriesCounters c;
  c.add(Interval::trivial(0));
  c.add(Interval::jump1(1, 2));
  CHECK(interval_series(c) == Interval::jump1(1, 2));
  c.add(Interval::jump2(4));
  CHECK(interval_series(c) == Interval::jump1(0, 6));
  c.remove(Interval::jump1(1, 2));
  CHECK(interval_series(c) == Interval::jump2(4));
  c.add(Interval::empty());
  CHECK(interval_series(c).is_empty());
}

TEST_CASE("reroot counters match recomputation") {
  for (uint64_t s = 0; s < 30; ++s) {
    SpqTree t = build_spq_star(gen_random(RandomKind::IndependentParallel, 20 + static_cast<int>(s % 60), s));
    IpDp dp(t);
    for (int q : t.qnodes) {
      RootedView rv = rooted_view(t, q);
      for (int x : rv.order) {
        if (x == q) continue;
        dp.get(x, rv.parent[x]);
        if (t.nodes[x].kind == NodeKind::S) CHECK(dp.counters(x, rv.parent[x]) == dp.counters_from_scratch(x, rv.parent[x]));
      }
    }
  }
}

TEST_CASE("fast path agrees with the general tester") {
  for (uint64_t s = 0; s < 80; ++s) {
    SpqTree t = build_spq_star(gen_random(RandomKind::IndependentParallel, 8 + static_cast<int>(s % 40), 400 + s));
    auto a = test_ip(t);
    CHECK(a.has_value() == test_sp_block(t).has_value());
    if (a) {
      const RootedView& rv = a->assignment.view;
      IpDp dp(t);
      for (int x : rv.order)
        if (x != a->root) CHECK(dp.get(x, rv.parent[x]).admits(std::abs(a->assignment.sigma2[x]) / 2));
    }
  }
  CHECK_THROWS_AS(test_ip(build_spq_star(parse_graph("0 3\n3 1\n0 4\n4 1\n1 5\n5 2\n1 6\n6 2\n2 7\n7 0\n"))), std::invalid_argument);
}

TEST_CASE("series split hits the target") {
  std::vector<Interval> kids{Interval::jump2(4), Interval::jump1(0, 3), Interval::trivial(1)};
  for (int target = -8; target <= 8; ++target) {
    SeriesCounters c;
    for (auto& k : kids) c.add(k);
    if (!interval_series(c).admits(std::abs(target))) continue;
    auto parts = split_series(kids, target);
    int sum = 0;
    for (size_t i = 0; i < kids.size(); ++i) {
      CHECK(kids[i].admits(std::abs(parts[i])));
      sum += parts[i];
    }
    CHECK(sum == target);
  }
}

TEST_CASE("root check") {
  CHECK(root_check(Interval::jump1(0, 4), 1));
  CHECK_FALSE(root_check(Interval::trivial(0), 3));
  CHECK(root_check(Interval::trivial(1), 4));
  CHECK_FALSE(root_check(Interval::trivial(1), 3));
}
