#pragma once
#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "rpt/graph.hpp"
#include "rpt/spirality.hpp"
#include "rpt/spq_tree.hpp"

namespace rpt {

struct RootConstraint {
  enum Kind { None, ExternalFlat, ExternalNonRight, ForcedRootChain } kind = None;
  int vertex = -1;  // the constrained vertex, or for ForcedRootChain any interior vertex of the chain
};

// Memoized spirality sets keyed by directed tree edge (node, parent).
class SpDp {
 public:
  explicit SpDp(const SpqTree& t, int pin_vertex = -1, bool memo = true);
  // u is the first pole in the current orientation; it only matters when a pin is set.
  const SpiralitySet& sigma(int node, int parent, int u);
  const SpqTree& tree() const { return t_; }
  void clear();
  P2Coefs p2_coefs(int node, int parent, int u, const std::array<int, 2>& kids) const;
  AlphaMask p2_mask(int node, int u, int v) const;
  long long sums() const { return sums_; }

 private:
  SpiralitySet compute(int node, int parent, int u);
  const SpqTree& t_;
  int pin_ = -1;
  int pin_node_ = -1;
  bool memo_ = true;
  std::vector<SpiralitySet> val_;
  std::vector<char> done_;
  std::vector<int> first_parent_;
  std::vector<std::unique_ptr<SupportTree>> support_;
  SpiralitySet scratch_;
  long long sums_ = 0;
};

struct NodeAssignment {
  RootedView view;
  std::vector<int> sigma2;
  std::vector<std::vector<int>> order;   // children left to right (P) or u to v (S)
  std::vector<std::array<int, 4>> alpha;  // P with two children: u left, u right, v left, v right
  std::vector<std::vector<int>> turns;   // Q: one entry per interior vertex, u to v
};

struct Witness {
  int root = -1;
  int sigma_child2 = 0;
  int sigma_root2 = 0;
  NodeAssignment assignment;
};

struct BlockOptions {
  bool memo = true;
  bool shuffle_roots = false;
  unsigned long long seed = 0;
};

// Roots admissible under a constraint, in trial order (longest chain first).
std::vector<int> candidate_roots(const SpqTree& t, const RootConstraint& c);
// Doubled (lo, hi) range admitted for the root chain.
std::pair<int, int> root_range(const SpqTree& t, int root, const RootConstraint& c);

std::optional<Witness> test_sp_block(const SpqTree& t, const RootConstraint& c = {}, const BlockOptions& opt = {});
NodeAssignment construct(SpDp& dp, int root, int sigma_child2, int sigma_root2, const RootConstraint& c);

// Turns for a simple cycle walked clockwise; allowed[i] is a bitmask over {-1,0,1} (bit t+1).
std::optional<std::vector<int>> cycle_turns(const std::vector<uint8_t>& allowed);

enum class CycleConstraint { None, ReflexAtVertex, ExternalNonRight, ExternalFlat, ExternalReflex };
bool cycle_feasible(int n, CycleConstraint c);

}  // namespace rpt
