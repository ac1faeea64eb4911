#include <random>

#include "doctest.h"
#include "rpt/spirality.hpp"

using namespace rpt;

namespace {

SpiralitySet random_set(std::mt19937& rng, int parity) {
  std::uniform_int_distribution<int> lo(-300, 300), len(0, 400), coin(0, 3);
  int a = lo(rng), b = a + len(rng);
  std::vector<int> v;
  for (int x = a; x <= b; ++x)
    if ((x & 1) == parity && coin(rng)) v.push_back(x);
  if (v.empty()) v.push_back(2 * a + parity);
  return SpiralitySet::from_values(v);
}

}  // namespace

TEST_CASE("set basics") {
  SpiralitySet s = SpiralitySet::range(-4, 4);
  CHECK(s.count() == 5);
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(1));
  CHECK(s.symmetric());
  CHECK(s.str() == "[-2,-1,0,1,2]");
  CHECK(SpiralitySet::from_values({-1, 1, 3}).str() == "[-1/2,1/2,3/2]");
  CHECK(s.shifted(2).min() == -2);
  CHECK(SpiralitySet().empty());
  CHECK((SpiralitySet::range(0, 6) & SpiralitySet::range(4, 10)).values() == std::vector<int>{4, 6});
}

TEST_CASE("chain sets") {
  CHECK(q_star_set(1).str() == "[0]");
  CHECK(q_star_set(3).str() == "[-2,-1,0,1,2]");
  CHECK(compose_series({q_star_set(2), q_star_set(2)}).str() == "[-2,-1,0,1,2]");
}

TEST_CASE("sum backends agree") {
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    SpiralitySet a = random_set(rng, i & 1), b = random_set(rng, (i >> 1) & 1);
    SpiralitySet ref = cartesian_sum_naive(a, b);
    CHECK(cartesian_sum_serial(a, b) == ref);
    CHECK(cartesian_sum_omp(a, b) == ref);
    CHECK(cartesian_sum_fft(a, b) == ref);
    CHECK(cartesian_sum(a, b) == ref);
  }
  CHECK(cartesian_sum(SpiralitySet(), q_star_set(2)).empty());
}

TEST_CASE("support tree drops one child") {
  std::mt19937 rng(5);
  for (int k : {2, 3, 5, 8}) {
    std::vector<SpiralitySet> kids;
    for (int i = 0; i < k; ++i) kids.push_back(random_set(rng, 0));
    SupportTree t(kids);
    CHECK(t.root() == compose_series(kids));
    for (int j = 0; j < k; ++j) {
      std::vector<SpiralitySet> rest;
      for (int i = 0; i < k; ++i)
        if (i != j) rest.push_back(kids[i]);
      CHECK(t.delta_without(j) == compose_series(rest));
    }
  }
}

TEST_CASE("parallel compositions") {
  // three chains of length 3 between poles of degree 3
  SpiralitySet c = q_star_set(3);
  SpiralitySet p = p3_set(c, c, c);
  CHECK(p.str() == "[0]");
  CHECK_FALSE(compose_parallel3({c, c, c}, 0).empty());
  CHECK(compose_parallel3({c, c, c}, 2).empty());

  P2Coefs k;
  SpiralitySet two = p2_set(q_star_set(2), q_star_set(3), k, kAlphaFree);
  CHECK_FALSE(two.empty());
  for (int v : two.values()) {
    auto ch = compose_parallel2(q_star_set(2), q_star_set(3), k, kAlphaFree, v);
    REQUIRE_FALSE(ch.empty());
    CHECK(ch.front().sigma_left2 - ch.front().sigma_right2 >= 4);
  }
}
