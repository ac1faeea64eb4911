#include "rpt/spq_tree.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace rpt {

int SpqTree::nbr_index(int node, int nb) const {
  const auto& l = nodes[node].nbrs;
  for (int i = 0; i < static_cast<int>(l.size()); ++i)
    if (l[i] == nb) return i;
  throw std::logic_error("nbr_index: not adjacent");
}

std::pair<int, int> SpqTree::poles(int node, int parent) const {
  const SpqNode& x = nodes[node];
  if (x.kind != NodeKind::S) return {x.a, x.b};
  int k = static_cast<int>(x.nbrs.size());
  int i = nbr_index(node, parent);
  return {x.seps[(i - 1 + k) % k], x.seps[i]};
}

int SpqTree::pole_indeg(int node, int parent, int w) const {
  const SpqNode& x = nodes[node];
  switch (x.kind) {
    case NodeKind::Q: return 1;
    case NodeKind::S: {
      int k = static_cast<int>(x.nbrs.size());
      int i = nbr_index(node, parent);
      int c = w == x.seps[i] ? x.nbrs[(i + 1) % k] : x.nbrs[(i - 1 + k) % k];
      return pole_indeg(c, node, w);
    }
    case NodeKind::P: {
      int d = 0;
      for (int c : x.nbrs)
        if (c != parent) d += pole_indeg(c, node, w);
      return d;
    }
  }
  return 0;
}

std::string SpqTree::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < size(); ++i) {
    const SpqNode& x = nodes[i];
    nlohmann::json o;
    o["id"] = i;
    o["kind"] = x.kind == NodeKind::S ? "S" : x.kind == NodeKind::P ? "P" : "Q";
    o["nbrs"] = x.nbrs;
    if (x.kind == NodeKind::S) o["seps"] = x.seps;
    if (x.kind == NodeKind::P) o["poles"] = {x.a, x.b};
    if (x.kind == NodeKind::Q) o["chain"] = x.chain;
    j.push_back(o);
  }
  return j.dump();
}

namespace {

struct MEdge {
  int x, y, node;
  bool alive = true;
};

struct Builder {
  SpqTree& t;
  std::vector<MEdge> es;
  std::vector<std::vector<int>> inc;  // vertex -> multigraph edge ids (may hold dead)
  std::vector<int> mdeg;
  std::unordered_map<long long, int> by_pair;
  std::vector<std::vector<int>> kids;   // construction children per node
  std::vector<std::vector<int>> xs;     // S: path vertices
  std::vector<char> dead;
  std::deque<int> work;
  int s0 = -1, t0 = -1;

  explicit Builder(SpqTree& tree) : t(tree) {}

  long long key(int x, int y) const {
    if (x > y) std::swap(x, y);
    return static_cast<long long>(x) * t.g.n + y;
  }

  int new_node(NodeKind k) {
    t.nodes.push_back({});
    t.nodes.back().kind = k;
    kids.emplace_back();
    xs.emplace_back();
    dead.push_back(0);
    return t.size() - 1;
  }

  void add_edge(int x, int y, int node) {
    auto it = by_pair.find(key(x, y));
    if (it != by_pair.end()) {
      MEdge& old = es[it->second];
      int p = old.node;
      if (t.nodes[p].kind != NodeKind::P) {
        int np = new_node(NodeKind::P);
        t.nodes[np].a = std::min(x, y);
        t.nodes[np].b = std::max(x, y);
        kids[np].push_back(p);
        old.node = p = np;
      }
      if (t.nodes[node].kind == NodeKind::P) {
        for (int c : kids[node]) kids[p].push_back(c);
        dead[node] = 1;
      } else {
        kids[p].push_back(node);
      }
      return;
    }
    int id = static_cast<int>(es.size());
    es.push_back({x, y, node});
    inc[x].push_back(id);
    inc[y].push_back(id);
    ++mdeg[x];
    ++mdeg[y];
    by_pair[key(x, y)] = id;
  }

  void kill(int id) {
    MEdge& e = es[id];
    e.alive = false;
    by_pair.erase(key(e.x, e.y));
    for (int w : {e.x, e.y}) {
      --mdeg[w];
      auto& l = inc[w];
      l.erase(std::find(l.begin(), l.end(), id));
      if (mdeg[w] == 2 && w != s0 && w != t0) work.push_back(w);
    }
  }

  // Path (node list + vertex list) of an edge oriented to start at `from`.
  void path_of(int id, int from, std::vector<int>& nl, std::vector<int>& vl) {
    const MEdge& e = es[id];
    int nd = e.node;
    if (t.nodes[nd].kind == NodeKind::S) {
      nl = kids[nd];
      vl = xs[nd];
      dead[nd] = 1;
      if (vl.front() != from) {
        std::reverse(nl.begin(), nl.end());
        std::reverse(vl.begin(), vl.end());
      }
    } else {
      nl = {nd};
      vl = {from, e.x == from ? e.y : e.x};
    }
  }

  void series(int w) {
    int e1 = inc[w][0], e2 = inc[w][1];
    int x = es[e1].x == w ? es[e1].y : es[e1].x;
    std::vector<int> n1, v1, n2, v2;
    path_of(e1, x, n1, v1);
    path_of(e2, w, n2, v2);
    int y = v2.back();
    kill(e1);
    kill(e2);
    int s = new_node(NodeKind::S);
    kids[s] = n1;
    kids[s].insert(kids[s].end(), n2.begin(), n2.end());
    xs[s] = v1;
    xs[s].insert(xs[s].end(), v2.begin() + 1, v2.end());
    add_edge(x, y, s);
  }

  void run() {
    const Graph& g = t.g;
    int n = g.n;
    t.q_of_edge.assign(g.m(), -1);
    t.q_of_interior.assign(n, -1);
    std::vector<int> branch;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) >= 3) branch.push_back(v);
    if (branch.size() < 2) throw std::invalid_argument("build_spq_star: block is a cycle");
    for (int v = 0; v < n; ++v)
      if (g.degree(v) < 2) throw std::invalid_argument("build_spq_star: block not biconnected");
    for (int b : branch)
      for (int e0 : g.adj[b]) {
        if (t.q_of_edge[e0] != -1) continue;
        int q = new_node(NodeKind::Q);
        SpqNode& nd = t.nodes[q];
        nd.chain.push_back(b);
        int cur = b, e = e0;
        while (true) {
          t.q_of_edge[e] = q;
          nd.chain_edges.push_back(e);
          cur = g.other(e, cur);
          nd.chain.push_back(cur);
          if (g.degree(cur) != 2) break;
          t.q_of_interior[cur] = q;
          e = g.adj[cur][0] == e ? g.adj[cur][1] : g.adj[cur][0];
        }
        nd.a = nd.chain.front();
        nd.b = nd.chain.back();
        t.qnodes.push_back(q);
      }
    inc.assign(n, {});
    mdeg.assign(n, 0);
    int q0 = t.qnodes[0];
    s0 = t.nodes[q0].a;
    t0 = t.nodes[q0].b;
    for (size_t i = 1; i < t.qnodes.size(); ++i) {
      int q = t.qnodes[i];
      add_edge(t.nodes[q].a, t.nodes[q].b, q);
    }
    for (int b : branch)
      if (mdeg[b] == 2 && b != s0 && b != t0) work.push_back(b);
    while (!work.empty()) {
      int w = work.front();
      work.pop_front();
      if (mdeg[w] != 2 || w == s0 || w == t0) continue;
      series(w);
    }
    int top = -1, alive = 0;
    for (auto& e : es)
      if (e.alive) {
        ++alive;
        top = e.node;
        if (!((e.x == s0 && e.y == t0) || (e.x == t0 && e.y == s0)))
          throw std::invalid_argument("build_spq_star: block is not series-parallel");
      }
    if (alive != 1) throw std::invalid_argument("build_spq_star: block is not series-parallel");
    if (t.nodes[top].kind == NodeKind::Q) throw std::invalid_argument("build_spq_star: block is a cycle");
    finish(top, q0);
  }

  void finish(int top, int q0) {
    // compact away absorbed nodes
    std::vector<int> remap(t.size(), -1);
    std::vector<SpqNode> out;
    std::vector<std::vector<int>> okids, oxs;
    for (int i = 0; i < t.size(); ++i)
      if (!dead[i]) {
        remap[i] = static_cast<int>(out.size());
        out.push_back(std::move(t.nodes[i]));
        okids.push_back(std::move(kids[i]));
        oxs.push_back(std::move(xs[i]));
      }
    t.nodes = std::move(out);
    for (auto& q : t.qnodes) q = remap[q];
    for (auto& q : t.q_of_edge) q = remap[q];
    for (auto& q : t.q_of_interior)
      if (q >= 0) q = remap[q];
    top = remap[top];
    q0 = remap[q0];
    for (auto& l : okids)
      for (auto& c : l) c = remap[c];
    std::vector<int> par(t.size(), -1);
    std::vector<int> st{top};
    par[top] = q0;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int c : okids[v]) {
        par[c] = v;
        st.push_back(c);
      }
    }
    for (int i = 0; i < t.size(); ++i) {
      SpqNode& nd = t.nodes[i];
      nd.nbrs = okids[i];
      if (i == q0) {
        nd.nbrs = {top};
        continue;
      }
      nd.nbrs.push_back(par[i]);
      if (nd.kind == NodeKind::S) {
        const auto& p = oxs[i];
        nd.seps.assign(p.begin() + 1, p.end());
        nd.seps.push_back(p.front());
        nd.a = p.front();
        nd.b = p.back();
      }
    }
    t.dir_base.assign(t.size() + 1, 0);
    for (int i = 0; i < t.size(); ++i)
      t.dir_base[i + 1] = t.dir_base[i] + static_cast<int>(t.nodes[i].nbrs.size());
  }
};

}  // namespace

SpqTree build_spq_star(const Graph& block) {
  SpqTree t;
  t.g = block;
  Builder b(t);
  b.run();
  return t;
}

RootedView rooted_view(const SpqTree& t, int root) {
  if (root < 0 || root >= t.size() || t.nodes[root].kind != NodeKind::Q)
    throw std::invalid_argument("rooted_view: root is not a Q*-node");
  int n = t.size();
  RootedView rv;
  rv.root = root;
  rv.parent.assign(n, -1);
  rv.children.assign(n, {});
  rv.u.assign(n, -1);
  rv.v.assign(n, -1);
  const SpqNode& r = t.nodes[root];
  rv.s = std::min(r.a, r.b);
  rv.t = std::max(r.a, r.b);
  rv.u[root] = rv.s;
  rv.v[root] = rv.t;
  int top = r.nbrs[0];
  rv.parent[top] = root;
  rv.children[root] = {top};
  rv.u[top] = rv.s;
  rv.v[top] = rv.t;
  rv.order = {root};
  std::vector<int> st{top};
  while (!st.empty()) {
    int x = st.back();
    st.pop_back();
    rv.order.push_back(x);
    const SpqNode& nd = t.nodes[x];
    int p = rv.parent[x];
    auto& ch = rv.children[x];
    if (nd.kind == NodeKind::P) {
      for (int c : nd.nbrs)
        if (c != p) {
          ch.push_back(c);
          rv.u[c] = rv.u[x];
          rv.v[c] = rv.v[x];
        }
    } else if (nd.kind == NodeKind::S) {
      int k = static_cast<int>(nd.nbrs.size());
      int i = t.nbr_index(x, p);
      bool fwd = rv.u[x] == nd.seps[i];
      for (int j = 1; j < k; ++j) {
        int c, a, b;
        if (fwd) {
          c = nd.nbrs[(i + j) % k];
          a = nd.seps[(i + j - 1) % k];
          b = nd.seps[(i + j) % k];
        } else {
          c = nd.nbrs[((i - j) % k + k) % k];
          a = nd.seps[((i - j) % k + k) % k];
          b = nd.seps[((i - j - 1) % k + k) % k];
        }
        ch.push_back(c);
        rv.u[c] = a;
        rv.v[c] = b;
      }
    }
    for (int c : ch) rv.parent[c] = x;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) st.push_back(*it);
  }
  rv.indeg_u.assign(n, 0);
  rv.indeg_v.assign(n, 0);
  rv.size.assign(n, 0);
  for (auto it = rv.order.rbegin(); it != rv.order.rend(); ++it) {
    int x = *it;
    const SpqNode& nd = t.nodes[x];
    const auto& ch = rv.children[x];
    if (nd.kind == NodeKind::Q) {
      rv.indeg_u[x] = rv.indeg_v[x] = 1;
      rv.size[x] = nd.length() + 1;
    } else if (nd.kind == NodeKind::S) {
      rv.indeg_u[x] = rv.indeg_u[ch.front()];
      rv.indeg_v[x] = rv.indeg_v[ch.back()];
      int s = 0;
      for (int c : ch) s += rv.size[c];
      rv.size[x] = s - static_cast<int>(ch.size()) + 1;
    } else {
      int s = 0;
      for (int c : ch) {
        rv.indeg_u[x] += rv.indeg_u[c];
        rv.indeg_v[x] += rv.indeg_v[c];
        s += rv.size[c];
      }
      rv.size[x] = s - 2 * (static_cast<int>(ch.size()) - 1);
    }
  }
  rv.outdeg_u.assign(n, 0);
  rv.outdeg_v.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    rv.outdeg_u[x] = t.g.degree(rv.u[x]) - rv.indeg_u[x];
    rv.outdeg_v[x] = t.g.degree(rv.v[x]) - rv.indeg_v[x];
  }
  return rv;
}

bool is_independent_parallel(const SpqTree& t) {
  std::vector<int> cnt(t.g.n, 0);
  for (const auto& nd : t.nodes)
    if (nd.kind == NodeKind::P && (++cnt[nd.a] > 1 || ++cnt[nd.b] > 1)) return false;
  return true;
}

}  // namespace rpt
