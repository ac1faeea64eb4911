#pragma once
#include <optional>
#include <vector>

#include "rpt/bc_types.hpp"
#include "rpt/graph.hpp"
#include "rpt/ortho_rep.hpp"
#include "rpt/sp_tester.hpp"

namespace rpt {

enum class ExtKind { None, Reflex, Flat, NonRight };
const char* to_string(ExtKind k);

struct BlockConfig {
  int block = -1;
  int parent_cut = -1;           // cutvertex index, -1 when the block is the root
  int parent_vertex = -1;
  std::vector<int> child_cuts;   // cutvertex indices
  std::vector<int> reflex;       // global vertices with a reflex-angle constraint
  ExtKind ext = ExtKind::None;   // constraint on the parent cutvertex
};

enum class FastPath { Auto, On, Off };

struct ComposeOptions {
  bool lazy_labels = false;
  bool realize = true;
  FastPath fast_path = FastPath::Auto;
  BlockOptions block;
};

struct ComposeResult {
  bool yes = false;
  GraphClass cls = GraphClass::NotPartial2Tree;
  int root_block = -1;
  int case_hit = 0;             // 1, 2 or 3 after the first visit
  int roots_tried = 0;
  long long label_work = 0;     // cumulative-label evaluations
  long long local_tests = 0;    // constrained block tests run
  bool used_fast_path = false;
  std::optional<Witness> witness;  // single SP block inputs
  RootedBc rooted;
  std::vector<BlockConfig> configs;
  OrthoRep rep;
};

RootedBc root_bc_tree(const BcTree& bc, int root_block);

// Configuration of block b when its parent is cutvertex index `parent_cut` (-1: root).
BlockConfig derive_config(const Graph& g, const BcTree& bc, int b, int parent_cut);
std::vector<BlockConfig> derive_constraints(const Graph& g, const BcTree& bc, const RootedBc& rb);

// Constrained test of one block; the representation uses the block's local ids.
std::optional<OrthoRep> test_block(const Subgraph& sub, const BlockConfig& cfg, const ComposeOptions& opt = {},
                                   std::optional<Witness>* witness = nullptr, bool* fast = nullptr);

// Throws InputError when g is not a partial 2-tree.
ComposeResult test_partial2tree(const Graph& g, const ComposeOptions& opt = {});

}  // namespace rpt
