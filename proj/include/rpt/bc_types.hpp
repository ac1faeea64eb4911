#pragma once
#include <vector>

namespace rpt {

// BC-tree rooted at a block. Node ids: blocks 0..B-1, cutvertex index i is node B+i.
struct RootedBc {
  int root_block = -1;
  std::vector<int> parent;                // per node, -1 for the root
  std::vector<std::vector<int>> children;
  std::vector<int> order;                 // BFS order
  std::vector<int> depth;
};

}  // namespace rpt
