#pragma once
#include <string>
#include <utility>
#include <vector>

#include "rpt/graph.hpp"

namespace rpt {

enum class NodeKind { S, P, Q };

struct SpqNode {
  NodeKind kind = NodeKind::Q;
  std::vector<int> nbrs;
  // S only: seps[i] is the skeleton vertex shared by nbrs[i] and nbrs[(i+1) % k].
  std::vector<int> seps;
  int a = -1, b = -1;  // P: poles. Q: chain ends.
  std::vector<int> chain;        // Q: vertex path a..b
  std::vector<int> chain_edges;  // Q: block edge ids along the path
  int length() const { return static_cast<int>(chain_edges.size()); }
};

struct SpqTree {
  Graph g;
  std::vector<SpqNode> nodes;
  std::vector<int> qnodes;
  std::vector<int> q_of_edge;
  std::vector<int> q_of_interior;  // -1 for branch vertices
  std::vector<int> dir_base;       // directed (node, nbr index) -> dense id

  int size() const { return static_cast<int>(nodes.size()); }
  int num_dirs() const { return dir_base.empty() ? 0 : dir_base.back(); }
  int nbr_index(int node, int nb) const;
  int dir(int node, int parent) const { return dir_base[node] + nbr_index(node, parent); }
  // Poles of node when its parent is `parent`, unordered.
  std::pair<int, int> poles(int node, int parent) const;
  // Number of edges of the pertinent graph incident to pole w.
  int pole_indeg(int node, int parent, int w) const;
  std::string to_json() const;
};

// Throws std::invalid_argument for cycles and for blocks that are not SP.
SpqTree build_spq_star(const Graph& block);

struct RootedView {
  int root = -1;
  int s = -1, t = -1;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;  // S: ordered u -> v
  std::vector<int> u, v;
  std::vector<int> indeg_u, indeg_v, outdeg_u, outdeg_v;
  std::vector<int> size;   // pertinent vertex count
  std::vector<int> order;  // preorder from root
};

RootedView rooted_view(const SpqTree& t, int root);

bool is_independent_parallel(const SpqTree& t);

}  // namespace rpt
