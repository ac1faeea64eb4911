#include "rpt/sp_tester.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

namespace rpt {

SpDp::SpDp(const SpqTree& t, int pin_vertex, bool memo) : t_(t), pin_(pin_vertex), memo_(memo) {
  val_.resize(t.num_dirs());
  done_.assign(t.num_dirs(), 0);
  first_parent_.assign(t.size(), -1);
  support_.resize(t.size());
  if (pin_ >= 0)
    for (int i = 0; i < t.size(); ++i)
      if (t.nodes[i].kind == NodeKind::P && (t.nodes[i].a == pin_ || t.nodes[i].b == pin_)) pin_node_ = i;
}

void SpDp::clear() {
  std::fill(done_.begin(), done_.end(), 0);
  std::fill(first_parent_.begin(), first_parent_.end(), -1);
  for (auto& s : support_) s.reset();
}

const SpiralitySet& SpDp::sigma(int node, int parent, int u) {
  int d = t_.dir(node, parent);
  if (memo_ && done_[d]) return val_[d];
  SpiralitySet s = compute(node, parent, u);
  val_[d] = std::move(s);
  done_[d] = 1;
  return val_[d];
}

P2Coefs SpDp::p2_coefs(int node, int parent, int u, const std::array<int, 2>& kids) const {
  auto [a, b] = t_.poles(node, parent);
  int v = u == a ? b : a;
  P2Coefs k;
  std::array<std::array<int, 2>, 2> in{};
  std::array<int, 2> pol{u, v};
  for (int c = 0; c < 2; ++c)
    for (int w = 0; w < 2; ++w) in[c][w] = t_.pole_indeg(kids[c], node, pol[w]);
  for (int w = 0; w < 2; ++w) {
    int out = t_.g.degree(pol[w]) - in[0][w] - in[1][w];
    for (int c = 0; c < 2; ++c) k.kc[c][w] = (in[c][w] == 1 && out == 1) ? 2 : 1;
  }
  return k;
}

AlphaMask SpDp::p2_mask(int node, int u, int v) const {
  AlphaMask m = kAlphaFree;
  if (t_.g.degree(u) == 4) m[0] = m[1] = 2;
  if (t_.g.degree(v) == 4) m[2] = m[3] = 2;
  if (node == pin_node_) {
    if (pin_ == u) m[0] &= 1;
    if (pin_ == v) m[2] &= 1;
  }
  return m;
}

SpiralitySet SpDp::compute(int node, int parent, int u) {
  const SpqNode& nd = t_.nodes[node];
  if (nd.kind == NodeKind::Q) return q_star_set(nd.length());
  if (nd.kind == NodeKind::S) {
    int k = static_cast<int>(nd.nbrs.size());
    int j = t_.nbr_index(node, parent);
    bool fwd = u == nd.seps[j];
    auto first_pole = [&](int i) { return fwd ? nd.seps[(i - 1 + k) % k] : nd.seps[i]; };
    bool shared = pin_ < 0 && memo_;
    bool ready = shared && first_parent_[node] >= 0 && first_parent_[node] != j;
    for (int i = 0; ready && i < k && !support_[node]; ++i)
      if (!done_[t_.dir(nd.nbrs[i], node)]) ready = false;
    if (ready) {
      if (!support_[node]) {
        std::vector<SpiralitySet> in;
        for (int i = 0; i < k; ++i) in.push_back(sigma(nd.nbrs[i], node, first_pole(i)));
        support_[node] = std::make_unique<SupportTree>(in);
        sums_ += 2LL * support_[node]->leaves();
      }
      sums_ += 8;
      return support_[node]->delta_without(j);
    }
    if (shared) first_parent_[node] = j;
    SpiralitySet acc = SpiralitySet::single(0);
    for (int i = 0; i < k; ++i) {
      if (i == j) continue;
      SpiralitySet c = sigma(nd.nbrs[i], node, first_pole(i));
      acc = cartesian_sum(acc, c);
      ++sums_;
      if (acc.empty()) break;
    }
    return acc;
  }
  std::vector<int> kids;
  for (int c : nd.nbrs)
    if (c != parent) kids.push_back(c);
  int v = u == nd.a ? nd.b : nd.a;
  if (kids.size() == 3) {
    SpiralitySet a = sigma(kids[0], node, u), b = sigma(kids[1], node, u), c = sigma(kids[2], node, u);
    return p3_set(a, b, c);
  }
  if (kids.size() != 2) throw std::logic_error("P-node with unexpected child count");
  SpiralitySet a = sigma(kids[0], node, u), b = sigma(kids[1], node, u);
  return p2_set(a, b, p2_coefs(node, parent, u, {kids[0], kids[1]}), p2_mask(node, u, v));
}

std::vector<int> candidate_roots(const SpqTree& t, const RootConstraint& c) {
  std::vector<int> r;
  switch (c.kind) {
    case RootConstraint::None: r = t.qnodes; break;
    case RootConstraint::ExternalFlat:
      for (int q : t.qnodes)
        if (t.nodes[q].a == c.vertex || t.nodes[q].b == c.vertex) r.push_back(q);
      break;
    case RootConstraint::ExternalNonRight:
    case RootConstraint::ForcedRootChain:
      if (c.vertex < 0 || c.vertex >= t.g.n || t.q_of_interior[c.vertex] < 0)
        throw std::invalid_argument("root constraint vertex is not interior to a chain");
      r = {t.q_of_interior[c.vertex]};
      break;
  }
  std::stable_sort(r.begin(), r.end(), [&](int a, int b) { return t.nodes[a].length() > t.nodes[b].length(); });
  return r;
}

std::pair<int, int> root_range(const SpqTree& t, int root, const RootConstraint& c) {
  int l = t.nodes[root].length();
  int hi = c.kind == RootConstraint::ExternalNonRight ? l - 2 : l - 1;
  return {-2 * (l - 1), 2 * hi};
}

namespace {

std::vector<int> greedy_turns(int count, int sigma) {
  std::vector<int> tr(count, 0);
  int s = sigma > 0 ? 1 : -1;
  for (int i = 0; i < std::abs(sigma) && i < count; ++i) tr[i] = s;
  return tr;
}

}  // namespace

NodeAssignment construct(SpDp& dp, int root, int sigma_child2, int sigma_root2, const RootConstraint& c) {
  const SpqTree& t = dp.tree();
  NodeAssignment a;
  a.view = rooted_view(t, root);
  const RootedView& rv = a.view;
  int n = t.size();
  a.sigma2.assign(n, 0);
  a.order.assign(n, {});
  a.alpha.assign(n, {0, 0, 0, 0});
  a.turns.assign(n, {});
  a.sigma2[root] = sigma_root2;
  int top = rv.children[root][0];
  a.sigma2[top] = sigma_child2;
  auto fail = [&](int x) {
    throw std::logic_error("construct: no consistent choice at node " + std::to_string(x));
  };
  for (int x : rv.order) {
    if (x == root) continue;
    const SpqNode& nd = t.nodes[x];
    const auto& ch = rv.children[x];
    int sg = a.sigma2[x];
    if (nd.kind == NodeKind::S) {
      int k = static_cast<int>(ch.size());
      std::vector<SpiralitySet> sets;
      for (int y : ch) sets.push_back(dp.sigma(y, x, rv.u[y]));
      std::vector<SpiralitySet> prefix(k);
      prefix[0] = sets[0];
      for (int i = 1; i < k; ++i) prefix[i] = cartesian_sum(prefix[i - 1], sets[i]);
      if (!prefix[k - 1].contains(sg)) fail(x);
      for (int i = k - 1; i >= 1; --i) {
        auto vals = sets[i].values();
        std::stable_sort(vals.begin(), vals.end(), [](int p, int q) { return std::abs(p) < std::abs(q); });
        bool ok = false;
        for (int val : vals)
          if (prefix[i - 1].contains(sg - val)) {
            a.sigma2[ch[i]] = val;
            sg -= val;
            ok = true;
            break;
          }
        if (!ok) fail(x);
      }
      a.sigma2[ch[0]] = sg;
      a.order[x] = ch;
    } else if (nd.kind == NodeKind::P) {
      if (ch.size() == 3) {
        std::array<SpiralitySet, 3> sets{dp.sigma(ch[0], x, rv.u[x]), dp.sigma(ch[1], x, rv.u[x]),
                                         dp.sigma(ch[2], x, rv.u[x])};
        auto perms = compose_parallel3(sets, sg);
        if (perms.empty()) fail(x);
        auto p = perms.front();
        a.order[x] = {ch[p[0]], ch[p[1]], ch[p[2]]};
        a.sigma2[ch[p[0]]] = sg + 4;
        a.sigma2[ch[p[1]]] = sg;
        a.sigma2[ch[p[2]]] = sg - 4;
      } else {
        SpiralitySet s0 = dp.sigma(ch[0], x, rv.u[x]), s1 = dp.sigma(ch[1], x, rv.u[x]);
        auto k = dp.p2_coefs(x, rv.parent[x], rv.u[x], {ch[0], ch[1]});
        auto m = dp.p2_mask(x, rv.u[x], rv.v[x]);
        auto choices = compose_parallel2(s0, s1, k, m, sg);
        if (choices.empty()) fail(x);
        const P2Choice& pc = choices.front();
        int l = ch[pc.left], r = ch[1 - pc.left];
        a.order[x] = {l, r};
        a.alpha[x] = pc.alpha;
        a.sigma2[l] = pc.sigma_left2;
        a.sigma2[r] = pc.sigma_right2;
      }
    }
  }
  for (int q : t.qnodes) {
    int len = t.nodes[q].length();
    int s2 = a.sigma2[q];
    if (s2 % 2 != 0 || std::abs(s2 / 2) > len - 1) throw std::logic_error("construct: chain spirality out of range");
    a.turns[q] = greedy_turns(len - 1, s2 / 2);
  }
  if (c.kind == RootConstraint::ExternalNonRight) {
    const SpqNode& nd = t.nodes[root];
    auto& tr = a.turns[root];
    // chain runs a..b; the view walks s..t
    std::vector<int> path = nd.chain;
    if (path.front() != rv.s) std::reverse(path.begin(), path.end());
    int idx = static_cast<int>(std::find(path.begin(), path.end(), c.vertex) - path.begin()) - 1;
    if (idx < 0 || idx >= static_cast<int>(tr.size())) throw std::logic_error("construct: constrained vertex not on root");
    if (tr[idx] > 0) {
      auto it = std::find_if(tr.begin(), tr.end(), [](int x) { return x <= 0; });
      if (it == tr.end()) throw std::logic_error("construct: no non-positive turn available");
      std::swap(*it, tr[idx]);
    }
  }
  return a;
}

std::optional<Witness> test_sp_block(const SpqTree& t, const RootConstraint& c, const BlockOptions& opt) {
  bool pinned = c.kind == RootConstraint::ExternalFlat;
  SpDp dp(t, pinned ? c.vertex : -1, opt.memo);
  auto roots = candidate_roots(t, c);
  if (opt.shuffle_roots) {
    std::mt19937_64 rng(opt.seed);
    std::shuffle(roots.begin(), roots.end(), rng);
  }
  for (int root : roots) {
    if (pinned) dp.clear();
    const SpqNode& r = t.nodes[root];
    int s = std::min(r.a, r.b);
    const SpiralitySet& sig = dp.sigma(r.nbrs[0], root, s);
    auto [lo, hi] = root_range(t, root, c);
    int best = 0;
    bool found = false;
    for (int x : sig.values()) {
      int y = x - 8;
      if (y < lo || y > hi) continue;
      if (!found || std::abs(x) < std::abs(best)) {
        best = x;
        found = true;
      }
    }
    if (!found) continue;
    Witness w;
    w.root = root;
    w.sigma_child2 = best;
    w.sigma_root2 = best - 8;
    w.assignment = construct(dp, root, best, best - 8, c);
    return w;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> cycle_turns(const std::vector<uint8_t>& allowed) {
  int n = static_cast<int>(allowed.size());
  if (n < 3) return std::nullopt;
  int off = n;
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(2 * n + 1, 0));
  reach[0][off] = 1;
  for (int i = 0; i < n; ++i)
    for (int s = 0; s <= 2 * n; ++s)
      if (reach[i][s])
        for (int tt = -1; tt <= 1; ++tt)
          if ((allowed[i] >> (tt + 1)) & 1 && s + tt >= 0 && s + tt <= 2 * n) reach[i + 1][s + tt] = 1;
  if (off + 4 > 2 * n || !reach[n][off + 4]) return std::nullopt;
  std::vector<int> out(n);
  int s = off + 4;
  for (int i = n - 1; i >= 0; --i)
    for (int tt = 1; tt >= -1; --tt) {
      int p = s - tt;
      if ((allowed[i] >> (tt + 1)) & 1 && p >= 0 && p <= 2 * n && reach[i][p]) {
        out[i] = tt;
        s = p;
        break;
      }
    }
  return out;
}

bool cycle_feasible(int n, CycleConstraint c) {
  if (n < 3) return false;
  std::vector<uint8_t> allowed(n, 7);
  switch (c) {
    case CycleConstraint::None: break;
    case CycleConstraint::ReflexAtVertex: allowed[0] = 1; break;
    case CycleConstraint::ExternalNonRight: allowed[0] = 6; break;
    case CycleConstraint::ExternalFlat: allowed[0] = 2; break;
    case CycleConstraint::ExternalReflex: allowed[0] = 4; break;
  }
  return cycle_turns(allowed).has_value();
}

}  // namespace rpt
