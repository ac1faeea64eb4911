#include "rpt/ip_fastpath.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>

namespace rpt {

bool Interval::admits(int v) const {
  v = std::abs(v);
  switch (shape) {
    case Empty: return false;
    case Trivial: return v == M;
    case Jump1: return v >= m && v <= M;
    case Jump2: return v >= m && v <= M && (M - v) % 2 == 0;
  }
  return false;
}

std::string Interval::str() const {
  switch (shape) {
    case Empty: return "empty";
    case Trivial: return "[" + std::to_string(M) + "]";
    case Jump1: return "[" + std::to_string(m) + "," + std::to_string(M) + "]^1";
    case Jump2: return "[" + std::to_string(m) + "," + std::to_string(M) + "]^2";
  }
  return "?";
}

namespace {

// Shape with the given membership on [0, 5] and per-parity maxima above 5 (-1 if none).
Interval shape_of(const std::array<bool, 6>& small, const std::array<int, 2>& top) {
  int M = std::max(top[0], top[1]);
  for (int v = 5; v >= 0 && M < 0; --v)
    if (small[v]) M = v;
  if (M < 0) return Interval::empty();
  auto f = [&](int v) { return v <= 5 ? small[v] : v <= top[v % 2]; };
  Interval c;
  if (M == 0)
    c = Interval::trivial(0);
  else if (M == 1)
    c = f(0) ? Interval::jump1(0, 1) : Interval::trivial(1);
  else if (M == 2)
    c = f(1) ? Interval::jump1(f(0) ? 0 : 1, 2) : Interval::jump2(2);
  else
    c = f(M - 1) ? Interval::jump1(f(0) ? 0 : 1, M) : Interval::jump2(M);
  bool ok = !(c.shape == Interval::Jump1 && c.m == 1 && c.M != 2);
  for (int v = 0; v <= 5 && ok; ++v) ok = c.admits(v) == small[v];
  for (int p = 0; p < 2 && ok; ++p) {
    int ct = -1;
    for (int v = c.M; v >= 6 && v >= c.M - 1; --v)
      if (v % 2 == p && c.admits(v)) ct = v;
    ok = ct == top[p];
  }
  if (!ok) throw std::logic_error("interval outside the six shapes");
  return c;
}

// Largest value <= b with parity allowed by mask (bit p), if at least 6.
void raise_top(std::array<int, 2>& top, int b, int mask) {
  for (int p = 0; p < 2; ++p) {
    if (!((mask >> p) & 1)) continue;
    int v = (b % 2 + 2) % 2 == p ? b : b - 1;
    if (v >= 6) top[p] = std::max(top[p], v);
  }
}

int parity_mask(const Interval& c, int shift) {
  // parities of x with x + shift admitted for large x
  if (c.shape == Interval::Jump1) return 3;
  return 1 << (((c.M - shift) % 2 + 2) % 2);
}

constexpr std::array<std::array<int, 2>, 6> kAlphaPairs{{{0, 2}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}}};
constexpr std::array<std::array<int, 3>, 6> kPerms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

}  // namespace

bool classify(const SpiralitySet& s, Interval& out) {
  if (s.empty()) {
    out = Interval::empty();
    return true;
  }
  std::vector<int> pos;
  for (int d : s.values()) {
    if (d % 2 != 0) return false;
    if (d >= 0) pos.push_back(d / 2);
  }
  if (pos.empty()) return false;
  std::array<bool, 6> small{};
  std::array<int, 2> top{-1, -1};
  for (int v : pos)
    if (v <= 5)
      small[v] = true;
  int M = pos.back();
  try {
    for (int p = 0; p < 2; ++p) {
      int v = M % 2 == p ? M : M - 1;
      if (v >= 6 && s.contains(2 * v)) top[p] = v;
    }
    out = shape_of(small, top);
  } catch (const std::logic_error&) {
    return false;
  }
  for (int v : pos)
    if (!out.admits(v)) return false;
  int count = 0;
  for (int v = 0; v <= out.M; ++v) count += out.admits(v);
  return count == static_cast<int>(pos.size());
}

void SeriesCounters::add(const Interval& c) {
  ++n;
  if (c.is_empty()) {
    ++empty;
    return;
  }
  if (c.shape == Interval::Trivial && c.M == 0) ++x;
  if (c.shape == Interval::Jump1) {
    ++z;
    if (c.m == 1) ++y;
  }
  M += c.M;
}

void SeriesCounters::remove(const Interval& c) {
  --n;
  if (c.is_empty()) {
    --empty;
    return;
  }
  if (c.shape == Interval::Trivial && c.M == 0) --x;
  if (c.shape == Interval::Jump1) {
    --z;
    if (c.m == 1) --y;
  }
  M -= c.M;
}

Interval interval_q(int len) {
  if (len < 1) throw std::invalid_argument("chain length must be positive");
  return len == 1 ? Interval::trivial(0) : Interval::jump1(0, len - 1);
}

Interval interval_series(const SeriesCounters& c) {
  if (c.empty > 0) return Interval::empty();
  int M = static_cast<int>(c.M);
  if (c.z > 0) {
    if (M != 2) return Interval::jump1(0, M);
    return c.x + c.y == c.n && c.y == 1 ? Interval::jump1(1, 2) : Interval::jump1(0, 2);
  }
  if (M <= 1) return Interval::trivial(M);
  return Interval::jump2(M);
}

Interval interval_p3(const Interval& a, const Interval& b, const Interval& c) {
  if (a.is_empty() || b.is_empty() || c.is_empty()) return Interval::empty();
  std::array<const Interval*, 3> k{&a, &b, &c};
  std::array<bool, 6> small{};
  std::array<int, 2> top{-1, -1};
  for (auto p : kPerms) {
    const Interval &l = *k[p[0]], &m = *k[p[1]], &r = *k[p[2]];
    for (int s = 0; s <= 5; ++s) small[s] = small[s] || (l.admits(s + 2) && m.admits(s) && r.admits(s - 2));
    int mask = parity_mask(l, -2) & parity_mask(m, 0) & parity_mask(r, 2);
    raise_top(top, std::min({l.M - 2, m.M, r.M + 2}), mask);
  }
  return shape_of(small, top);
}

Interval interval_p2(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  std::array<const Interval*, 2> k{&a, &b};
  std::array<bool, 6> small{};
  std::array<int, 2> top{-1, -1};
  for (int left = 0; left < 2; ++left) {
    const Interval &l = *k[left], &r = *k[1 - left];
    for (auto [al, ar] : kAlphaPairs) {
      for (int s = 0; s <= 5; ++s) small[s] = small[s] || (l.admits(s + al) && r.admits(s - ar));
      int mask = parity_mask(l, -al) & parity_mask(r, ar);
      raise_top(top, std::min(l.M - al, r.M + ar), mask);
    }
  }
  return shape_of(small, top);
}

bool root_check(const Interval& child, int len) {
  for (int sr = 0; sr <= std::min(4, len - 1); ++sr)
    if (child.admits(4 - sr)) return true;
  return false;
}

IpDp::IpDp(const SpqTree& t) : t_(t) {
  val_.resize(t.num_dirs());
  done_.assign(t.num_dirs(), 0);
  first_.assign(t.size(), -1);
  full_.resize(t.size());
  has_full_.assign(t.size(), 0);
}

const Interval& IpDp::get(int node, int parent) {
  int d = t_.dir(node, parent);
  if (done_[d]) return val_[d];
  std::vector<std::pair<int, int>> st{{node, parent}};
  std::vector<std::pair<int, int>> need;
  while (!st.empty()) {
    auto [x, p] = st.back();
    if (done_[t_.dir(x, p)]) {
      st.pop_back();
      continue;
    }
    const SpqNode& nd = t_.nodes[x];
    need.clear();
    int j = t_.nbr_index(x, p);
    bool all = nd.kind == NodeKind::S && first_[x] >= 0 && first_[x] != j;
    for (int i = 0; i < static_cast<int>(nd.nbrs.size()); ++i) {
      if (i == j && !all) continue;
      int y = nd.nbrs[i];
      if (!done_[t_.dir(y, x)]) need.push_back({y, x});
    }
    if (nd.kind == NodeKind::Q) need.clear();
    if (need.empty()) {
      evaluate(x, p);
      st.pop_back();
    } else {
      st.insert(st.end(), need.begin(), need.end());
    }
  }
  return val_[d];
}

SeriesCounters IpDp::counters_from_scratch(int node, int parent) {
  SeriesCounters c;
  for (int y : t_.nodes[node].nbrs)
    if (y != parent) c.add(get(y, node));
  return c;
}

SeriesCounters IpDp::counters(int node, int parent) {
  get(node, parent);
  int j = t_.nbr_index(node, parent);
  if (first_[node] == j) return counters_from_scratch(node, parent);
  SeriesCounters c = full_[node];
  c.remove(val_[t_.dir(parent, node)]);
  return c;
}

void IpDp::evaluate(int x, int p) {
  const SpqNode& nd = t_.nodes[x];
  int d = t_.dir(x, p);
  Interval r;
  if (nd.kind == NodeKind::Q) {
    r = interval_q(nd.length());
  } else if (nd.kind == NodeKind::S) {
    int j = t_.nbr_index(x, p);
    if (first_[x] < 0 || first_[x] == j) {
      first_[x] = j;
      SeriesCounters c;
      for (int y : nd.nbrs)
        if (y != p) c.add(val_[t_.dir(y, x)]);
      direct_ += static_cast<long long>(nd.nbrs.size());
      r = interval_series(c);
    } else {
      if (!has_full_[x]) {
        SeriesCounters c;
        for (int y : nd.nbrs) c.add(val_[t_.dir(y, x)]);
        direct_ += static_cast<long long>(nd.nbrs.size());
        full_[x] = c;
        has_full_[x] = 1;
      }
      SeriesCounters c = full_[x];
      c.remove(val_[t_.dir(p, x)]);
      ++reroots_;
      r = interval_series(c);
    }
  } else {
    std::vector<Interval> k;
    for (int y : nd.nbrs)
      if (y != p) k.push_back(val_[t_.dir(y, x)]);
    direct_ += static_cast<long long>(nd.nbrs.size());
    if (k.size() == 3)
      r = interval_p3(k[0], k[1], k[2]);
    else if (k.size() == 2)
      r = interval_p2(k[0], k[1]);
    else
      throw std::logic_error("P-node with unexpected child count");
  }
  val_[d] = r;
  done_[d] = 1;
}

std::vector<int> split_series(const std::vector<Interval>& kids, int target) {
  int k = static_cast<int>(kids.size());
  std::vector<int> out(k, 0);
  int sign = target < 0 ? -1 : 1;
  int tgt = std::abs(target);
  std::vector<int> idx;
  for (int i = 0; i < k; ++i)
    if (kids[i].shape != Interval::Jump1) idx.push_back(i);
  for (int i = 0; i < k; ++i)
    if (kids[i].shape == Interval::Jump1) idx.push_back(i);
  SeriesCounters rest;
  for (const auto& c : kids) rest.add(c);
  long long delta = rest.M - tgt;
  if (delta < 0) throw std::logic_error("split_series: target above maximum");
  for (int pos = 0; pos < k; ++pos) {
    int i = idx[pos];
    const Interval& c = kids[i];
    rest.remove(c);
    if (pos == k - 1) {
      if (!c.admits(tgt)) throw std::logic_error("split_series: target not admitted");
      out[i] = tgt;
      break;
    }
    Interval ri = interval_series(rest);
    long long lo = std::max<long long>({c.M - delta, -c.M, tgt - rest.M});
    bool ok = false;
    for (long long v = lo; v <= lo + 5 && v <= c.M; ++v)
      if (c.admits(static_cast<int>(v)) && ri.admits(static_cast<int>(tgt - v))) {
        out[i] = static_cast<int>(v);
        delta -= c.M - v;
        tgt -= static_cast<int>(v);
        ok = true;
        break;
      }
    if (!ok) throw std::logic_error("split_series: no feasible value");
  }
  for (int& v : out) v *= sign;
  return out;
}

NodeAssignment construct_ip(IpDp& dp, int root, int sigma_child2) {
  const SpqTree& t = dp.tree();
  NodeAssignment a;
  a.view = rooted_view(t, root);
  const RootedView& rv = a.view;
  int n = t.size();
  a.sigma2.assign(n, 0);
  a.order.assign(n, {});
  a.alpha.assign(n, {0, 0, 0, 0});
  a.turns.assign(n, {});
  int top = rv.children[root][0];
  a.sigma2[top] = sigma_child2;
  a.sigma2[root] = sigma_child2 - 8;
  auto fail = [](int x) { throw std::logic_error("construct_ip: no consistent choice at node " + std::to_string(x)); };
  for (int x : rv.order) {
    if (x == root || t.nodes[x].kind == NodeKind::Q) continue;
    const auto& ch = rv.children[x];
    int sg = a.sigma2[x] / 2;
    std::vector<Interval> iv;
    for (int y : ch) iv.push_back(dp.get(y, x));
    if (t.nodes[x].kind == NodeKind::S) {
      auto vals = split_series(iv, sg);
      for (size_t i = 0; i < ch.size(); ++i) a.sigma2[ch[i]] = 2 * vals[i];
      a.order[x] = ch;
    } else if (ch.size() == 3) {
      std::array<int, 3> by_max{0, 1, 2};
      std::stable_sort(by_max.begin(), by_max.end(), [&](int p, int q) { return iv[p].M > iv[q].M; });
      bool ok = false;
      for (auto p : kPerms) {
        int l = by_max[p[0]], c = by_max[p[1]], r = by_max[p[2]];
        if (iv[l].admits(sg + 2) && iv[c].admits(sg) && iv[r].admits(sg - 2)) {
          a.order[x] = {ch[l], ch[c], ch[r]};
          a.sigma2[ch[l]] = 2 * (sg + 2);
          a.sigma2[ch[c]] = 2 * sg;
          a.sigma2[ch[r]] = 2 * (sg - 2);
          ok = true;
          break;
        }
      }
      if (!ok) fail(x);
    } else {
      bool ok = false;
      // right child at full alpha first
      static constexpr std::array<std::array<int, 4>, 9> kAlphas{{{0, 1, 0, 1},
                                                                  {1, 1, 0, 1},
                                                                  {0, 1, 1, 1},
                                                                  {1, 1, 1, 1},
                                                                  {1, 0, 0, 1},
                                                                  {0, 1, 1, 0},
                                                                  {1, 0, 1, 1},
                                                                  {1, 1, 1, 0},
                                                                  {1, 0, 1, 0}}};
      for (int left = 0; left < 2 && !ok; ++left) {
        int l = left, r = 1 - left;
        for (const auto& al : kAlphas) {
          int sl = sg + al[0] + al[2], sr = sg - al[1] - al[3];
          if (iv[l].admits(sl) && iv[r].admits(sr)) {
            a.order[x] = {ch[l], ch[r]};
            a.alpha[x] = al;
            a.sigma2[ch[l]] = 2 * sl;
            a.sigma2[ch[r]] = 2 * sr;
            ok = true;
            break;
          }
        }
      }
      if (!ok) fail(x);
    }
  }
  for (int q : t.qnodes) {
    int len = t.nodes[q].length();
    int s = a.sigma2[q] / 2;
    if (std::abs(s) > len - 1) throw std::logic_error("construct_ip: chain spirality out of range");
    a.turns[q].assign(len - 1, 0);
    for (int i = 0; i < std::abs(s); ++i) a.turns[q][i] = s > 0 ? 1 : -1;
  }
  return a;
}

std::optional<Witness> test_ip(const SpqTree& t) {
  if (!is_independent_parallel(t)) throw std::invalid_argument("graph is not independent-parallel");
  IpDp dp(t);
  for (int root : candidate_roots(t, {})) {
    const SpqNode& r = t.nodes[root];
    const Interval& iv = dp.get(r.nbrs[0], root);
    int len = r.length();
    if (!root_check(iv, len)) continue;
    int best = 0;
    bool found = false;
    for (int v : {0, 1, -1, 2, -2, 3, -3, 4, -4}) {
      int sr = v - 4;
      if (sr < -(len - 1) || sr > len - 1 || !iv.admits(v)) continue;
      best = v;
      found = true;
      break;
    }
    if (!found) continue;
    Witness w;
    w.root = root;
    w.sigma_child2 = 2 * best;
    w.sigma_root2 = 2 * best - 8;
    w.assignment = construct_ip(dp, root, 2 * best);
    return w;
  }
  return std::nullopt;
}

}  // namespace rpt
