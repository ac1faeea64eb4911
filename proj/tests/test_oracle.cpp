#include <map>

#include "doctest.h"
#include "rpt/generators.hpp"
#include "rpt/oracle.hpp"

using namespace rpt;

TEST_CASE("embedding counts") {
  CHECK(count_embeddings(cycle_graph(4)) == 1);
  CHECK(count_embeddings(theta_graph({3, 3, 3})) == 2);
  CHECK(count_embeddings(complete_bipartite(2, 3)) == 2);
  CHECK(count_embeddings(complete_bipartite(1, 4)) == 6);
}

TEST_CASE("faces of a theta embedding") {
  Graph g = theta_graph({2, 2, 2});
  int seen = 0;
  enumerate_embeddings(g, [&](const Rotation&, const EmbeddingFaces& f) {
    CHECK(f.walks.size() == 3);
    ++seen;
    return true;
  });
  CHECK(seen == 2);
}

TEST_CASE("small verdicts") {
  CHECK(oracle_test(Graph(1)));
  CHECK(oracle_test(complete_bipartite(1, 4)));
  CHECK_FALSE(oracle_test(cycle_graph(3)));
  CHECK(oracle_test(cycle_graph(4)));
  CHECK_FALSE(oracle_test(complete_bipartite(2, 3)));
  auto w = oracle_witness(theta_graph({3, 3, 3}));
  REQUIRE(w.has_value());
  CHECK(validate_rep(*w).ok);
}

TEST_CASE("exhaustive corpus tallies") {
  // frozen oracle output for n <= 7
  std::map<int, std::pair<int, int>> want{{1, {1, 1}},  {2, {1, 1}},  {3, {2, 1}},    {4, {5, 3}},
                                          {5, {15, 5}}, {6, {46, 12}}, {7, {161, 29}}};
  std::map<int, std::pair<int, int>> got;
  for (const Graph& g : exhaustive_partial2trees(7)) {
    ++got[g.n].first;
    got[g.n].second += oracle_test(g, {}, {12, 24});
  }
  CHECK(got == want);
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(oracle_test(cycle_graph(30)), OracleError);
  CHECK(oracle_test(cycle_graph(12), {}, {12, 24}));
}
