#pragma once
#include <string>
#include <vector>

#include "rpt/bc_types.hpp"
#include "rpt/graph.hpp"
#include "rpt/ortho_rep.hpp"
#include "rpt/sp_tester.hpp"
#include "rpt/spq_tree.hpp"

namespace rpt {

OrthoRep synthesize(const SpqTree& t, const NodeAssignment& a);

std::vector<char> component_mask(const SpqTree& t, const RootedView& rv, int node);
// Nodes whose measured spirality differs from the assigned one.
std::vector<int> spirality_mismatches(const SpqTree& t, const NodeAssignment& a, const OrthoRep& r);

struct GadgetInfo {
  int c = -1, u = -1, v = -1, w = -1, p1 = -1, p2 = -1, p3 = -1;
  int ea = -1, eb = -1;  // original edges at c, now a-u and v-b
  std::array<int, 2> ea_orig{}, eb_orig{};
  int n_before = 0, m_before = 0;
};

// Subdivides both edges at c and adds the length-2 and length-4 paths between the new vertices.
Graph apply_reflex_gadget(const Graph& block, int c, GadgetInfo& info);
// Undoes one gadget (the last applied) on a representation of the gadgeted graph.
OrthoRep strip_gadget(const OrthoRep& r, const GadgetInfo& gi);

// Cycle block drawn with the given clockwise turns; order lists the vertices around the cycle.
OrthoRep realize_cycle(const Graph& cycle, const std::vector<int>& order, const std::vector<int>& turns);
std::vector<int> cycle_order(const Graph& cycle);

// Fixes ext_edge/ext_from to a dart of the unique face with turn sum -4.
void fix_external(OrthoRep& r);

// Merges per-block representations (local ids) into one for g, top-down over the rooted BC-tree.
OrthoRep merge_blocks(const Graph& g, const BcTree& bc, const RootedBc& rb, const std::vector<OrthoRep>& reps,
                      const std::vector<Subgraph>& subs);

}  // namespace rpt
