#pragma once
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpt {

struct Graph {
  int n = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> adj;  // vertex -> incident edge ids

  Graph() = default;
  explicit Graph(int vertices) : n(vertices), adj(vertices) {}

  int add_edge(int u, int v);
  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  int other(int e, int v) const { return edges[e][0] == v ? edges[e][1] : edges[e][0]; }
  int find_edge(int u, int v) const;
  int max_degree() const;
  bool connected() const;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// JSON {"n":..,"edges":[[u,v],..]} or whitespace edge list. Throws InputError.
Graph parse_graph(const std::string& text);
// Checks simplicity, ids, degree <= 4 and connectivity. Throws InputError.
void check_graph(const Graph& g);
std::string to_json(const Graph& g);

enum class GraphClass { SimpleCycle, SpBlock, Partial2Tree, NotPartial2Tree };
const char* to_string(GraphClass c);
GraphClass validate_partial2tree(const Graph& g);

bool is_simple_cycle(const Graph& g);
// Biconnected multigraph reduces to one edge under series/parallel reductions.
bool is_sp_reducible(const Graph& g);

struct Block {
  std::vector<int> vertices;  // sorted
  std::vector<int> edges;     // sorted
  bool trivial = false;
};

struct BcTree {
  std::vector<Block> blocks;
  std::vector<int> cutvertices;                  // sorted vertex ids
  std::vector<int> cut_index;                    // vertex -> index in cutvertices or -1
  std::vector<std::vector<int>> blocks_of_cut;   // per cutvertex index
  std::vector<std::vector<int>> cuts_of_block;   // per block, cutvertex indices
  std::vector<int> block_of_edge;

  int deg_in_block(const Graph& g, int v, int b) const;
};

BcTree build_bc_tree(const Graph& g);

struct Subgraph {
  Graph g;
  std::vector<int> to_global;   // local vertex -> global vertex
  std::vector<int> edge_global; // local edge -> global edge
};

Subgraph extract_block(const Graph& g, const Block& b);

Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace rpt
