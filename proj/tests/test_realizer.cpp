#include "doctest.h"
#include "rpt/block_composer.hpp"
#include "rpt/generators.hpp"
#include "rpt/realizer.hpp"

using namespace rpt;

TEST_CASE("synthesized blocks are valid and match the assignment") {
  for (uint64_t s = 0; s < 80; ++s) {
    SpqTree t = build_spq_star(gen_random(RandomKind::Sp, 6 + static_cast<int>(s % 40), 900 + s));
    auto w = test_sp_block(t);
    if (!w) continue;
    OrthoRep r = synthesize(t, w->assignment);
    CHECK(validate_rep(r).ok);
    CHECK(spirality_mismatches(t, w->assignment, r).empty());
  }
}

TEST_CASE("cycles") {
  Graph c = cycle_graph(6);
  auto order = cycle_order(c);
  CHECK(order.size() == 6);
  OrthoRep r = realize_cycle(c, order, {1, 1, -1, 1, 1, 1});
  CHECK(validate_rep(r).ok);
  r.coords = compact(r);
  CHECK(validate_rep(r).ok);
}

TEST_CASE("reflex gadget round trip") {
  Graph g = theta_graph({3, 3, 3});
  int c = -1;
  for (int v = 0; v < g.n && c < 0; ++v)
    if (g.degree(v) == 2) c = v;
  GadgetInfo gi;
  Graph h = apply_reflex_gadget(g, c, gi);
  CHECK(h.n == g.n + 6);
  CHECK(h.m() == g.m() + 8);
  GadgetInfo junk;
  CHECK_THROWS_AS(apply_reflex_gadget(g, 0, junk), std::invalid_argument);
  SpqTree t = build_spq_star(h);
  auto w = test_sp_block(t, {RootConstraint::ForcedRootChain, gi.p2});
  REQUIRE(w.has_value());
  OrthoRep r = strip_gadget(synthesize(t, w->assignment), gi);
  CHECK(r.n == g.n);
  CHECK(r.edges.size() == static_cast<size_t>(g.m()));
  CHECK(validate_rep(r).ok);
  CHECK(std::max(r.angle[c][0], r.angle[c][1]) == 3);
}

TEST_CASE("drawings of whole graphs") {
  for (uint64_t s = 0; s < 150; ++s) {
    Graph g = gen_random(RandomKind::Partial2Tree, 5 + static_cast<int>(s % 25), 3000 + s);
    ComposeResult r = test_partial2tree(g);
    if (!r.yes) continue;
    REQUIRE(r.rep.has_coords());
    ValidationReport v = validate_rep(r.rep);
    CHECK(v.ok);
    CHECK(to_svg(r.rep).find("<svg") != std::string::npos);
    CHECK(rep_from_json(to_json(r.rep)) == r.rep);
  }
}

TEST_CASE("validation catches broken angles") {
  ComposeResult r = test_partial2tree(cycle_graph(4));
  REQUIRE(r.yes);
  OrthoRep bad = r.rep;
  bad.angle[0][0] = 2;
  CHECK_FALSE(validate_rep(bad).ok);
  bad = r.rep;
  bad.coords[1] = bad.coords[0];
  CHECK_FALSE(validate_rep(bad).ok);
}

TEST_CASE("compaction after edge splits") {
  for (int N : {2, 4, 6}) {
    ComposeResult r = test_partial2tree(gen_lower_bound(N).g);
    REQUIRE(r.yes);
    CHECK(validate_rep(r.rep).ok);
  }
}
