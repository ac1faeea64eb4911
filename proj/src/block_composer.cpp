#include "rpt/block_composer.hpp"

#include <algorithm>
#include <stdexcept>

#include "rpt/ip_fastpath.hpp"
#include "rpt/realizer.hpp"

namespace rpt {

const char* to_string(ExtKind k) {
  switch (k) {
    case ExtKind::None: return "none";
    case ExtKind::Reflex: return "external-reflex";
    case ExtKind::Flat: return "external-flat";
    case ExtKind::NonRight: return "external-non-right";
  }
  return "?";
}

RootedBc root_bc_tree(const BcTree& bc, int root_block) {
  int B = static_cast<int>(bc.blocks.size());
  int N = B + static_cast<int>(bc.cutvertices.size());
  RootedBc r;
  r.root_block = root_block;
  r.parent.assign(N, -1);
  r.children.assign(N, {});
  r.depth.assign(N, 0);
  std::vector<char> seen(N, 0);
  r.order = {root_block};
  seen[root_block] = 1;
  for (size_t h = 0; h < r.order.size(); ++h) {
    int x = r.order[h];
    std::vector<int> nb;
    if (x < B)
      for (int c : bc.cuts_of_block[x]) nb.push_back(B + c);
    else
      nb = bc.blocks_of_cut[x - B];
    for (int y : nb) {
      if (seen[y]) continue;
      seen[y] = 1;
      r.parent[y] = x;
      r.depth[y] = r.depth[x] + 1;
      r.children[x].push_back(y);
      r.order.push_back(y);
    }
  }
  return r;
}

BlockConfig derive_config(const Graph& g, const BcTree& bc, int b, int parent_cut) {
  BlockConfig cfg;
  cfg.block = b;
  cfg.parent_cut = parent_cut;
  for (int c : bc.cuts_of_block[b]) {
    if (c == parent_cut) continue;
    cfg.child_cuts.push_back(c);
    const auto& bl = bc.blocks_of_cut[c];
    if (bl.size() != 2) continue;
    int v = bc.cutvertices[c];
    int h = bl[0] == b ? bl[1] : bl[0];
    if (bc.deg_in_block(g, v, b) == 2 && bc.deg_in_block(g, v, h) == 2) cfg.reflex.push_back(v);
  }
  if (parent_cut >= 0) {
    int c = bc.cutvertices[parent_cut];
    cfg.parent_vertex = c;
    int dj = bc.deg_in_block(g, c, b);
    int d = g.degree(c);
    if (d == 4 && dj == 2) {
      bool reflex = false;
      for (int h : bc.blocks_of_cut[parent_cut])
        if (h != b && bc.deg_in_block(g, c, h) == 2) reflex = true;
      cfg.ext = reflex ? ExtKind::Reflex : ExtKind::NonRight;
    } else if (d == 4 && dj == 3) {
      cfg.ext = ExtKind::Flat;
    } else if (d == 3 && dj == 2) {
      cfg.ext = ExtKind::NonRight;
    }
  }
  return cfg;
}

std::vector<BlockConfig> derive_constraints(const Graph& g, const BcTree& bc, const RootedBc& rb) {
  int B = static_cast<int>(bc.blocks.size());
  std::vector<BlockConfig> out;
  for (int b = 0; b < B; ++b) {
    int p = rb.parent[b];
    out.push_back(derive_config(g, bc, b, p < 0 ? -1 : p - B));
  }
  return out;
}

namespace {

OrthoRep edge_rep() {
  OrthoRep r;
  r.n = 2;
  r.edges = {{0, 1}};
  r.rot = {{0}, {0}};
  r.angle = {{4}, {4}};
  r.ext_edge = 0;
  r.ext_from = 0;
  return r;
}

int local_id(const Subgraph& sub, int gv) {
  auto it = std::lower_bound(sub.to_global.begin(), sub.to_global.end(), gv);
  if (it == sub.to_global.end() || *it != gv) throw std::logic_error("vertex not in block");
  return static_cast<int>(it - sub.to_global.begin());
}

int ext_corner_angle(const OrthoRep& r, int v) {
  int k = r.degree(v);
  FaceInfo f = trace_faces(r);
  for (int i = 0; i < k; ++i) {
    int e = r.rot[v][(i + 1) % k];
    if (f.face_of_dart[dart_id(r, e, r.other(e, v))] == f.external) return r.angle[v][i];
  }
  return -1;
}

void check_constraints(const OrthoRep& r, const std::vector<int>& reflex, ExtKind ext, int c) {
  for (int v : reflex)
    if (std::find(r.angle[v].begin(), r.angle[v].end(), 3) == r.angle[v].end())
      throw std::logic_error("block realization misses a reflex angle at " + std::to_string(v));
  if (ext == ExtKind::None) return;
  int a = ext_corner_angle(r, c);
  bool ok = ext == ExtKind::Reflex ? a == 3 : ext == ExtKind::Flat ? a == 2 : a >= 2;
  if (!ok) throw std::logic_error("block realization violates the external constraint at " + std::to_string(c));
}

}  // namespace

namespace {

std::optional<OrthoRep> run_block(const Subgraph& sub, const BlockConfig& cfg, const ComposeOptions& opt, bool realize,
                                  std::optional<Witness>* witness, bool* fast) {
  const Graph& g = sub.g;
  if (g.m() == 1) return edge_rep();
  std::vector<int> reflex;
  for (int v : cfg.reflex) reflex.push_back(local_id(sub, v));
  int c = cfg.ext == ExtKind::None ? -1 : local_id(sub, cfg.parent_vertex);
  if (is_simple_cycle(g)) {
    std::vector<int> order = cycle_order(g);
    std::vector<uint8_t> allowed(g.n, 7);
    for (int i = 0; i < g.n; ++i) {
      int v = order[i];
      if (std::find(reflex.begin(), reflex.end(), v) != reflex.end()) allowed[i] = 5;
      if (v == c) allowed[i] &= cfg.ext == ExtKind::Reflex ? 4 : cfg.ext == ExtKind::NonRight ? 6 : 2;
    }
    auto turns = cycle_turns(allowed);
    if (!turns) return std::nullopt;
    if (!realize) return OrthoRep{};
    OrthoRep r = realize_cycle(g, order, *turns);
    check_constraints(r, reflex, cfg.ext, c);
    return r;
  }
  Graph h = g;
  std::vector<GadgetInfo> gadgets;
  for (int v : reflex) {
    GadgetInfo gi;
    h = apply_reflex_gadget(h, v, gi);
    gadgets.push_back(gi);
  }
  RootConstraint rc;
  if (cfg.ext == ExtKind::Reflex) {
    GadgetInfo gi;
    h = apply_reflex_gadget(h, c, gi);
    gadgets.push_back(gi);
    rc = {RootConstraint::ForcedRootChain, gi.p2};
  } else if (cfg.ext == ExtKind::Flat) {
    rc = {RootConstraint::ExternalFlat, c};
  } else if (cfg.ext == ExtKind::NonRight) {
    rc = {RootConstraint::ExternalNonRight, c};
  }
  SpqTree t = build_spq_star(h);
  std::optional<Witness> w;
  bool use_ip = gadgets.empty() && rc.kind == RootConstraint::None && opt.fast_path != FastPath::Off &&
                is_independent_parallel(t);
  if (fast) *fast = use_ip;
  w = use_ip ? test_ip(t) : test_sp_block(t, rc, opt.block);
  if (!w) return std::nullopt;
  if (witness) *witness = w;
  if (!realize) return OrthoRep{};
  OrthoRep r = synthesize(t, w->assignment);
  for (auto it = gadgets.rbegin(); it != gadgets.rend(); ++it) r = strip_gadget(r, *it);
  check_constraints(r, reflex, cfg.ext, c);
  return r;
}

}  // namespace

std::optional<OrthoRep> test_block(const Subgraph& sub, const BlockConfig& cfg, const ComposeOptions& opt,
                                   std::optional<Witness>* witness, bool* fast) {
  return run_block(sub, cfg, opt, true, witness, fast);
}

ComposeResult test_partial2tree(const Graph& g, const ComposeOptions& opt) {
  ComposeResult res;
  res.cls = validate_partial2tree(g);
  if (res.cls == GraphClass::NotPartial2Tree) throw InputError("graph is not a partial 2-tree");
  if (g.m() == 0) {
    res.yes = true;
    res.case_hit = 1;
    res.rep.n = g.n;
    res.rep.rot.assign(g.n, {});
    res.rep.angle.assign(g.n, {});
    res.rep.coords.assign(g.n, {0, 0});
    return res;
  }
  BcTree bc = build_bc_tree(g);
  int B = static_cast<int>(bc.blocks.size());
  if (opt.fast_path == FastPath::On) {
    bool ok = res.cls == GraphClass::SpBlock && is_independent_parallel(build_spq_star(g));
    if (!ok) throw InputError("fast path requires an independent-parallel SP block");
  }
  std::vector<Subgraph> subs;
  for (const auto& b : bc.blocks) subs.push_back(extract_block(g, b));

  // local labels: slot 0 = block is the root, slot i+1 = parent is cuts_of_block[b][i]
  std::vector<std::vector<signed char>> local(B);
  for (int b = 0; b < B; ++b) local[b].assign(bc.cuts_of_block[b].size() + 1, -1);
  auto slot_of = [&](int b, int cut) {
    if (cut < 0) return 0;
    const auto& cs = bc.cuts_of_block[b];
    return static_cast<int>(std::find(cs.begin(), cs.end(), cut) - cs.begin()) + 1;
  };
  auto compute_local = [&](int b, int slot) {
    int cut = slot == 0 ? -1 : bc.cuts_of_block[b][slot - 1];
    BlockConfig cfg = derive_config(g, bc, b, cut);
    return run_block(subs[b], cfg, opt, false, nullptr, nullptr).has_value();
  };
  if (!opt.lazy_labels) {
    std::vector<std::pair<int, int>> jobs;
    for (int b = 0; b < B; ++b)
      for (int s = 0; s < static_cast<int>(local[b].size()); ++s) jobs.push_back({b, s});
    int J = static_cast<int>(jobs.size());
    std::vector<signed char> out(J, 0);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < J; ++i) out[i] = compute_local(jobs[i].first, jobs[i].second) ? 1 : 0;
    for (int i = 0; i < J; ++i) local[jobs[i].first][jobs[i].second] = out[i];
    res.local_tests = J;
  }
  auto label = [&](int b, int cut) {
    int s = slot_of(b, cut);
    if (local[b][s] < 0) {
      local[b][s] = compute_local(b, s) ? 1 : 0;
      ++res.local_tests;
    }
    return local[b][s] == 1;
  };

  RootedBc t1 = root_bc_tree(bc, 0);
  int N = static_cast<int>(t1.parent.size());
  std::vector<char> dl(N, 1);
  std::vector<int> fc(N, 0);  // children with a false label
  for (auto it = t1.order.rbegin(); it != t1.order.rend(); ++it) {
    int x = *it;
    for (int y : t1.children[x]) fc[x] += dl[y] ? 0 : 1;
    res.label_work += 1 + static_cast<long long>(t1.children[x].size());
    bool ok = fc[x] == 0;
    if (x < B && ok) ok = label(x, t1.parent[x] < 0 ? -1 : t1.parent[x] - B);
    dl[x] = ok;
  }
  int chosen = -1;
  if (dl[0]) {
    res.case_hit = 1;
    chosen = 0;
    res.roots_tried = 1;
  } else if (std::any_of(fc.begin(), fc.end(), [](int c) { return c >= 2; })) {
    res.case_hit = 2;
    res.roots_tried = 1;
  } else {
    res.case_hit = 3;
    std::vector<int> path{0};
    for (;;) {
      int x = path.back(), nx = -1;
      for (int y : t1.children[x])
        if (!dl[y]) nx = y;
      if (nx < 0) break;
      path.push_back(nx);
    }
    int deep = path.back();
    // labels of the part above each node, top-down along the path then over the subtree
    std::vector<char> ul(N, 1);
    auto up = [&](int x) {
      int p = t1.parent[x];
      bool ok = fc[p] - (dl[x] ? 0 : 1) == 0;
      if (p != 0 && ok) ok = ul[p];
      if (p < B && ok) ok = label(p, x - B);
      ul[x] = ok;
      ++res.label_work;
    };
    for (size_t i = 1; i < path.size(); ++i) up(path[i]);
    std::vector<int> sub{deep};
    for (size_t h = 0; h < sub.size(); ++h)
      for (int y : t1.children[sub[h]]) {
        up(y);
        sub.push_back(y);
      }
    for (int r : sub) {
      if (r >= B) continue;
      ++res.roots_tried;
      res.label_work += 2;
      bool ok = fc[r] == 0 && (r == 0 || ul[r]) && label(r, -1);
      if (ok) {
        chosen = r;
        break;
      }
    }
  }
  res.yes = chosen >= 0;
  if (!res.yes) return res;
  res.root_block = chosen;
  res.rooted = root_bc_tree(bc, chosen);
  res.configs = derive_constraints(g, bc, res.rooted);
  if (!opt.realize) return res;
  std::vector<OrthoRep> reps(B);
  for (int b = 0; b < B; ++b) {
    std::optional<Witness> w;
    bool fast = false;
    auto r = run_block(subs[b], res.configs[b], opt, true, &w, &fast);
    if (!r) throw std::logic_error("block " + std::to_string(b) + " failed after a positive label");
    reps[b] = std::move(*r);
    if (B == 1) {
      res.witness = w;
      res.used_fast_path = fast;
    }
  }
  res.rep = merge_blocks(g, bc, res.rooted, reps, subs);
  res.rep.coords = compact(res.rep);
  return res;
}

}  // namespace rpt
