#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rpt/graph.hpp"

namespace rpt {

struct LowerBound {
  Graph g;
  int N = 0, L = 0;
  std::vector<int> level_sizes;          // vertices of G_0 .. G_L
  std::array<int, 2> copy_a{}, copy_b{};  // poles of the two copies of G_L
  std::vector<int> p1, p2;               // vertex paths of the two closing chains
};

// Throws std::invalid_argument for odd or too small N, and when the graph would exceed max_vertices.
LowerBound gen_lower_bound(int N, long long max_vertices = 5'000'000);

enum class RandomKind { Sp, Partial2Tree, IndependentParallel };
RandomKind parse_kind(const std::string& s);
const char* to_string(RandomKind k);

// Seeded and deterministic; exactly n vertices.
Graph gen_random(RandomKind kind, int n, uint64_t seed);

// Canonical string of g, invariant under relabelling.
std::string canonical_form(const Graph& g);

// All connected partial 2-trees with max degree 4 and 1 <= n <= max_n, one per isomorphism class.
std::vector<Graph> exhaustive_partial2trees(int max_n);

Graph cycle_graph(int n);
Graph theta_graph(const std::vector<int>& lengths);
Graph complete_bipartite(int a, int b);

}  // namespace rpt
