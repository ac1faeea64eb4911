#include "rpt/realizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace rpt {

namespace {

struct P2Corner {
  int el = -1, er = -1, al = 0, ar = 0;
};

void remove_edge(OrthoRep& r, int e) {
  for (int z : r.edges[e]) {
    int k = r.degree(z);
    int i = r.pos(z, e);
    if (k >= 2) r.angle[z][(i - 1 + k) % k] += r.angle[z][i];
    r.rot[z].erase(r.rot[z].begin() + i);
    r.angle[z].erase(r.angle[z].begin() + i);
  }
}

}  // namespace

OrthoRep synthesize(const SpqTree& t, const NodeAssignment& a) {
  const RootedView& rv = a.view;
  const Graph& g = t.g;
  int nn = t.size();
  std::vector<std::vector<int>> at_u(nn), at_v(nn);
  auto oriented_chain = [&](int q, std::vector<int>& verts, std::vector<int>& es) {
    const SpqNode& nd = t.nodes[q];
    verts = nd.chain;
    es = nd.chain_edges;
    if (nd.chain.front() != rv.u[q]) {
      std::reverse(verts.begin(), verts.end());
      std::reverse(es.begin(), es.end());
    }
  };
  for (auto it = rv.order.rbegin(); it != rv.order.rend(); ++it) {
    int x = *it;
    const SpqNode& nd = t.nodes[x];
    if (nd.kind == NodeKind::Q) {
      std::vector<int> vs, es;
      oriented_chain(x, vs, es);
      at_u[x] = {es.front()};
      at_v[x] = {es.back()};
    } else if (nd.kind == NodeKind::S) {
      at_u[x] = at_u[a.order[x].front()];
      at_v[x] = at_v[a.order[x].back()];
    } else {
      for (int c : a.order[x]) {
        at_u[x].insert(at_u[x].end(), at_u[c].begin(), at_u[c].end());
        at_v[x].insert(at_v[x].end(), at_v[c].begin(), at_v[c].end());
      }
    }
  }
  OrthoRep r;
  r.n = g.n;
  r.edges = g.edges;
  r.rot.assign(g.n, {});
  r.angle.assign(g.n, {});
  auto place = [&](int w, const std::vector<int>& out, const std::vector<int>& in) {
    r.rot[w] = out;
    r.rot[w].insert(r.rot[w].end(), in.rbegin(), in.rend());
    r.angle[w].assign(r.rot[w].size(), 0);
  };
  for (int q : t.qnodes) {
    std::vector<int> vs, es;
    oriented_chain(q, vs, es);
    for (size_t i = 1; i + 1 < vs.size(); ++i) {
      int w = vs[i];
      int tr = a.turns[q][i - 1];
      r.rot[w] = {es[i], es[i - 1]};
      r.angle[w] = {2 - tr, 2 + tr};
    }
  }
  for (int x = 0; x < nn; ++x) {
    if (t.nodes[x].kind != NodeKind::S || x == rv.root) continue;
    const auto& ch = a.order[x];
    for (size_t i = 0; i + 1 < ch.size(); ++i) place(rv.v[ch[i]], at_u[ch[i + 1]], at_v[ch[i]]);
  }
  int top = rv.children[rv.root][0];
  std::vector<int> rvs, res;
  oriented_chain(rv.root, rvs, res);
  {
    std::vector<int> out = at_u[top];
    out.push_back(res.front());
    place(rv.s, out, {});
    std::vector<int> in = at_v[top];
    in.push_back(res.back());
    place(rv.t, {}, in);
  }
  std::vector<P2Corner> p2(g.n);
  for (int x = 0; x < nn; ++x) {
    if (t.nodes[x].kind != NodeKind::P || a.order[x].size() != 2 || x == rv.root) continue;
    int l = a.order[x][0], rr = a.order[x][1];
    const auto& al = a.alpha[x];
    for (int side = 0; side < 2; ++side) {
      int w = side == 0 ? rv.u[x] : rv.v[x];
      if (g.degree(w) != 3) continue;
      const auto& L = side == 0 ? at_u[l] : at_v[l];
      const auto& R = side == 0 ? at_u[rr] : at_v[rr];
      if (L.size() != 1 || R.size() != 1) throw std::logic_error("synthesize: unexpected pole degree");
      p2[w] = {L[0], R[0], al[2 * side], al[2 * side + 1]};
    }
  }
  for (int w = 0; w < g.n; ++w) {
    int k = g.degree(w);
    if (static_cast<int>(r.rot[w].size()) != k) throw std::logic_error("synthesize: rotation incomplete at " + std::to_string(w));
    if (k == 4) r.angle[w] = {1, 1, 1, 1};
    if (k == 3) {
      const P2Corner& pc = p2[w];
      if (pc.el < 0) throw std::logic_error("synthesize: degree-3 vertex without P-node");
      for (int i = 0; i < 3; ++i) {
        int e1 = r.rot[w][i], e2 = r.rot[w][(i + 1) % 3];
        bool hl = e1 == pc.el || e2 == pc.el, hr = e1 == pc.er || e2 == pc.er;
        r.angle[w][i] = hl && hr ? pc.al + pc.ar : hl ? 2 - pc.al : 2 - pc.ar;
      }
    }
  }
  r.ext_edge = res.front();
  r.ext_from = rv.s;
  return r;
}

std::vector<char> component_mask(const SpqTree& t, const RootedView& rv, int node) {
  std::vector<char> m(t.g.m(), 0);
  std::vector<int> st{node};
  while (!st.empty()) {
    int x = st.back();
    st.pop_back();
    if (t.nodes[x].kind == NodeKind::Q)
      for (int e : t.nodes[x].chain_edges) m[e] = 1;
    if (x == rv.root) continue;
    for (int c : rv.children[x]) st.push_back(c);
  }
  return m;
}

std::vector<int> spirality_mismatches(const SpqTree& t, const NodeAssignment& a, const OrthoRep& r) {
  std::vector<int> bad;
  const RootedView& rv = a.view;
  for (int x : rv.order) {
    std::vector<char> m = component_mask(t, rv, x);
    int got = measure_spirality(r, m, rv.u[x], rv.v[x]);
    if (got != a.sigma2[x]) bad.push_back(x);
  }
  return bad;
}

Graph apply_reflex_gadget(const Graph& block, int c, GadgetInfo& info) {
  if (c < 0 || c >= block.n || block.degree(c) != 2)
    throw std::invalid_argument("apply_reflex_gadget: vertex must have degree 2 in the block");
  int n = block.n, m = block.m();
  info = {};
  info.c = c;
  info.n_before = n;
  info.m_before = m;
  info.ea = block.adj[c][0];
  info.eb = block.adj[c][1];
  info.ea_orig = block.edges[info.ea];
  info.eb_orig = block.edges[info.eb];
  int a = block.other(info.ea, c), b = block.other(info.eb, c);
  info.u = n;
  info.v = n + 1;
  info.w = n + 2;
  info.p1 = n + 3;
  info.p2 = n + 4;
  info.p3 = n + 5;
  Graph h(n + 6);
  for (int e = 0; e < m; ++e) {
    if (e == info.ea)
      h.add_edge(a, info.u);
    else if (e == info.eb)
      h.add_edge(info.v, b);
    else
      h.add_edge(block.edges[e][0], block.edges[e][1]);
  }
  h.add_edge(info.u, c);
  h.add_edge(c, info.v);
  h.add_edge(info.u, info.w);
  h.add_edge(info.w, info.v);
  h.add_edge(info.u, info.p1);
  h.add_edge(info.p1, info.p2);
  h.add_edge(info.p2, info.p3);
  h.add_edge(info.p3, info.v);
  return h;
}

OrthoRep strip_gadget(const OrthoRep& in, const GadgetInfo& gi) {
  OrthoRep r = in;
  int m = gi.m_before;
  int e_uc = m, e_cv = m + 1, e_uw = m + 2, e_wv = m + 3;
  int k = r.degree(gi.u);
  if (k != 4 || r.degree(gi.v) != 4) throw std::logic_error("strip_gadget: gadget poles must have degree 4");
  int op = r.rot[gi.u][(r.pos(gi.u, gi.ea) + 2) % 4];
  int x, ux, xv;
  if (op == e_uc) {
    x = gi.c;
    ux = e_uc;
    xv = e_cv;
    remove_edge(r, e_uw);
    remove_edge(r, e_wv);
  } else if (op == e_uw) {
    x = gi.w;
    ux = e_uw;
    xv = e_wv;
    remove_edge(r, e_uc);
    remove_edge(r, e_cv);
  } else {
    throw std::logic_error("strip_gadget: long path opposite the original edge");
  }
  for (int e = m + 4; e < m + 8; ++e) remove_edge(r, e);
  for (int p : {gi.u, gi.v})
    if (r.degree(p) != 2 || r.angle[p][0] != 2) throw std::logic_error("strip_gadget: pole is not straight");
  r.rot[x][r.pos(x, ux)] = gi.ea;
  r.rot[x][r.pos(x, xv)] = gi.eb;
  if (x != gi.c) {
    r.rot[gi.c] = r.rot[x];
    r.angle[gi.c] = r.angle[x];
  }
  OrthoRep o;
  o.n = gi.n_before;
  o.edges.assign(r.edges.begin(), r.edges.begin() + m);
  o.edges[gi.ea] = gi.ea_orig;
  o.edges[gi.eb] = gi.eb_orig;
  o.rot.assign(r.rot.begin(), r.rot.begin() + o.n);
  o.angle.assign(r.angle.begin(), r.angle.begin() + o.n);
  fix_external(o);
  return o;
}

std::vector<int> cycle_order(const Graph& cyc) {
  std::vector<int> ord{0};
  int prev_e = -1, v = 0;
  for (int i = 1; i < cyc.n; ++i) {
    int e = cyc.adj[v][0] == prev_e ? cyc.adj[v][1] : cyc.adj[v][0];
    v = cyc.other(e, v);
    prev_e = e;
    ord.push_back(v);
  }
  return ord;
}

OrthoRep realize_cycle(const Graph& cyc, const std::vector<int>& order, const std::vector<int>& turns) {
  int n = cyc.n;
  OrthoRep r;
  r.n = n;
  r.edges = cyc.edges;
  r.rot.assign(n, {});
  r.angle.assign(n, {});
  for (int i = 0; i < n; ++i) {
    int v = order[i], nx = order[(i + 1) % n], pv = order[(i - 1 + n) % n];
    int out = cyc.find_edge(v, nx), in = cyc.find_edge(pv, v);
    r.rot[v] = {out, in};
    r.angle[v] = {2 - turns[i], 2 + turns[i]};
  }
  r.ext_edge = cyc.find_edge(order[0], order[1]);
  r.ext_from = order[1];
  return r;
}

void fix_external(OrthoRep& r) {
  r.ext_edge = -1;
  r.ext_from = -1;
  if (r.edges.empty()) return;
  FaceInfo f = trace_faces(r);
  if (f.external < 0) throw std::logic_error("fix_external: no face with turn sum -4");
  r.ext_edge = f.walks[f.external][0].e;
  r.ext_from = f.walks[f.external][0].from;
}

OrthoRep merge_blocks(const Graph& g, const BcTree& bc, const RootedBc& rb, const std::vector<OrthoRep>& reps,
                      const std::vector<Subgraph>& subs) {
  int B = static_cast<int>(bc.blocks.size());
  OrthoRep R;
  R.n = g.n;
  R.edges = g.edges;
  R.rot.assign(g.n, {});
  R.angle.assign(g.n, {});
  auto local_of = [&](int b, int gv) {
    const auto& tg = subs[b].to_global;
    return static_cast<int>(std::lower_bound(tg.begin(), tg.end(), gv) - tg.begin());
  };
  auto ext_corner = [&](int b, int lv) {
    const OrthoRep& r = reps[b];
    int k = r.degree(lv);
    if (k == 1) return 0;
    FaceInfo f = trace_faces(r);
    for (int i = 0; i < k; ++i) {
      int e = r.rot[lv][(i + 1) % k];
      if (f.face_of_dart[dart_id(r, e, r.other(e, lv))] == f.external) return i;
    }
    throw std::logic_error("merge_blocks: cutvertex not on external face");
  };
  for (int node : rb.order) {
    if (node < B) {
      int b = node;
      int pc = rb.parent[b] >= 0 ? bc.cutvertices[rb.parent[b] - B] : -1;
      const OrthoRep& r = reps[b];
      for (int lv = 0; lv < r.n; ++lv) {
        int gv = subs[b].to_global[lv];
        if (gv == pc) continue;
        R.rot[gv].clear();
        for (int e : r.rot[lv]) R.rot[gv].push_back(subs[b].edge_global[e]);
        R.angle[gv] = r.angle[lv];
      }
      if (b == rb.root_block) {
        R.ext_edge = subs[b].edge_global[r.ext_edge];
        R.ext_from = subs[b].to_global[r.ext_from];
      }
      continue;
    }
    int c = bc.cutvertices[node - B];
    std::vector<std::pair<int, int>> kids;  // (a_j, block)
    for (int b : rb.children[node]) {
      int lv = local_of(b, c);
      kids.push_back({reps[b].angle[lv][ext_corner(b, lv)], b});
    }
    std::sort(kids.begin(), kids.end());
    for (auto [aj, b] : kids) {
      const OrthoRep& r = reps[b];
      int lv = local_of(b, c);
      int i = ext_corner(b, lv);
      int k = r.degree(lv);
      auto& hr = R.rot[c];
      auto& ha = R.angle[c];
      int ih = static_cast<int>(std::max_element(ha.begin(), ha.end()) - ha.begin());
      int a = ha[ih];
      if (a + aj < 6) throw std::logic_error("merge_blocks: no corner large enough at cutvertex " + std::to_string(c));
      std::vector<int> nr, na;
      for (int j = 0; j <= ih; ++j) {
        nr.push_back(hr[j]);
        na.push_back(ha[j]);
      }
      na.back() = 1;
      for (int s = 1; s <= k; ++s) {
        int j = (i + s) % k;
        nr.push_back(subs[b].edge_global[r.rot[lv][j]]);
        na.push_back(s == k ? a + aj - 5 : r.angle[lv][j]);
      }
      for (int j = ih + 1; j < static_cast<int>(hr.size()); ++j) {
        nr.push_back(hr[j]);
        na.push_back(ha[j]);
      }
      hr = std::move(nr);
      ha = std::move(na);
    }
  }
  return R;
}

}  // namespace rpt
