#include "rpt/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace rpt {

namespace {

struct Builder {
  int nv = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<int> deg;

  int vertex() {
    deg.push_back(0);
    return nv++;
  }
  void edge(int u, int v) {
    edges.push_back({u, v});
    ++deg[u];
    ++deg[v];
  }
  void chain(int s, int t, int interior) {
    int prev = s;
    for (int i = 0; i < interior; ++i) {
      int w = vertex();
      edge(prev, w);
      prev = w;
    }
    edge(prev, t);
  }
  void subdivide(int e) {
    auto [u, v] = edges[e];
    int w = vertex();
    edges[e] = {u, w};
    edges.push_back({w, v});
    deg[w] = 2;
  }
  Graph graph() const {
    Graph g(nv);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }
};

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

void grow_sp(Builder& b, int n, std::mt19937_64& rng) {
  while (b.nv < n) {
    int m = static_cast<int>(b.edges.size());
    int e = uniform(rng, 0, m - 1);
    auto [u, v] = b.edges[e];
    if (uniform(rng, 0, 1) == 0 && b.deg[u] < 4 && b.deg[v] < 4) {
      int k = uniform(rng, 1, std::min(3, n - b.nv));
      b.chain(u, v, k);
    } else {
      b.subdivide(e);
    }
  }
}

// Splits total into k positive parts at random; requires total >= k.
std::vector<int> split(int total, int k, std::mt19937_64& rng) {
  std::vector<int> p(k, 1);
  for (int i = 0; i < total - k; ++i) ++p[uniform(rng, 0, k - 1)];
  return p;
}

void ip_parallel(Builder& b, int s, int t, int k, int budget, std::mt19937_64& rng);

// Child of a P-node between s and t that never makes s or t a pole of another P-node.
void ip_child(Builder& b, int s, int t, int budget, std::mt19937_64& rng) {
  if (budget < 4 || uniform(rng, 0, 2) == 0) {
    b.chain(s, t, std::max(1, std::min(budget, uniform(rng, 1, 3))));
    return;
  }
  int a = b.vertex(), c = b.vertex();
  b.edge(s, a);
  int k = uniform(rng, 2, 3);
  if (budget - 2 < k) k = 2;
  ip_parallel(b, a, c, k, budget - 2, rng);
  b.edge(c, t);
}

void ip_parallel(Builder& b, int s, int t, int k, int budget, std::mt19937_64& rng) {
  auto parts = split(std::max(budget, k), k, rng);
  for (int p : parts) ip_child(b, s, t, p, rng);
}

}  // namespace

RandomKind parse_kind(const std::string& s) {
  if (s == "sp") return RandomKind::Sp;
  if (s == "partial2tree") return RandomKind::Partial2Tree;
  if (s == "independent_parallel" || s == "ip") return RandomKind::IndependentParallel;
  throw std::invalid_argument("unknown kind: " + s);
}

const char* to_string(RandomKind k) {
  switch (k) {
    case RandomKind::Sp: return "sp";
    case RandomKind::Partial2Tree: return "partial2tree";
    case RandomKind::IndependentParallel: return "independent_parallel";
  }
  return "?";
}

Graph gen_random(RandomKind kind, int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Builder b;
  if (kind == RandomKind::Sp) {
    if (n < 4) throw std::invalid_argument("sp graphs need at least 4 vertices");
    int u = b.vertex(), v = b.vertex();
    b.chain(u, v, 1);
    b.chain(u, v, 1);
    b.edge(u, v);
    grow_sp(b, n, rng);
    return b.graph();
  }
  if (kind == RandomKind::IndependentParallel) {
    if (n < 5) throw std::invalid_argument("independent-parallel graphs need at least 5 vertices");
    int s = b.vertex(), t = b.vertex();
    int k = n >= 8 ? uniform(rng, 3, 4) : 3;
    ip_parallel(b, s, t, k, n - 2 - 4, rng);
    while (b.nv > n) throw std::logic_error("generator overshoot");
    while (b.nv < n) b.subdivide(uniform(rng, 0, static_cast<int>(b.edges.size()) - 1));
    return b.graph();
  }
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  b.vertex();
  bool first = true;
  while (b.nv < n) {
    int rem = n - b.nv;
    int host = uniform(rng, 0, b.nv - 1);
    if (b.deg[host] >= 4) continue;
    int type = uniform(rng, 0, 2);
    if (first && rem >= 3) type = uniform(rng, 1, 2);
    first = false;
    if (type == 2 && (rem < 3 || b.deg[host] > 2)) type = 1;
    if (type == 1 && (rem < 2 || b.deg[host] > 2)) type = 0;
    if (type == 0) {
      b.chain(host, b.vertex(), 0);
    } else if (type == 1) {
      int k = uniform(rng, 3, std::min(6, rem + 1));
      b.chain(host, host, k - 1);
    } else {
      int s = uniform(rng, 4, std::min(8, rem + 1));
      Graph sp = gen_random(RandomKind::Sp, s, rng());
      int pick = 0;
      for (int v = 0; v < sp.n; ++v)
        if (sp.degree(v) < sp.degree(pick)) pick = v;
      std::vector<int> id(sp.n);
      for (int v = 0; v < sp.n; ++v) id[v] = v == pick ? host : b.vertex();
      for (auto [u, v] : sp.edges) b.edge(id[u], id[v]);
    }
  }
  return b.graph();
}

LowerBound gen_lower_bound(int N, long long max_vertices) {
  if (N < 2 || N % 2 != 0) throw std::invalid_argument("N must be even and at least 2");
  LowerBound lb;
  lb.N = N;
  lb.L = N / 2 + 1;
  std::vector<long long> sz{N + 4};
  for (int k = 1; k <= lb.L; ++k) sz.push_back(k == 1 ? 3 * sz[0] - 4 : 2 + 3 * sz[k - 1]);
  long long total = 2 * sz[lb.L] + 4;
  if (total > max_vertices) throw std::invalid_argument("lower-bound graph too large");
  for (long long s : sz) lb.level_sizes.push_back(static_cast<int>(s));
  Builder b;
  std::function<void(int, int, int)> build = [&](int k, int s, int t) {
    if (k == 0) {
      b.chain(s, t, N + 2);
      return;
    }
    for (int i = 0; i < 3; ++i) {
      if (k == 1) {
        build(0, s, t);
        continue;
      }
      int a = b.vertex(), c = b.vertex();
      b.edge(s, a);
      build(k - 1, a, c);
      b.edge(c, t);
    }
  };
  int a1 = b.vertex(), a2 = b.vertex(), b1 = b.vertex(), b2 = b.vertex();
  build(lb.L, a1, a2);
  build(lb.L, b1, b2);
  auto path = [&](int s, int t) {
    int x = b.vertex(), y = b.vertex();
    b.edge(s, x);
    b.edge(x, y);
    b.edge(y, t);
    return std::vector<int>{s, x, y, t};
  };
  lb.p1 = path(a2, b1);
  lb.p2 = path(b2, a1);
  lb.copy_a = {a1, a2};
  lb.copy_b = {b1, b2};
  lb.g = b.graph();
  return lb;
}

namespace {

std::vector<int> refine(const Graph& g, std::vector<int> col) {
  int n = g.n;
  int classes = static_cast<int>(std::set<int>(col.begin(), col.end()).size());
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{col[v]};
      std::vector<int> nb;
      for (int e : g.adj[v]) nb.push_back(col[g.other(e, v)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {s, v};
    }
    std::vector<std::vector<int>> keys;
    for (auto& p : sig) keys.push_back(p.first);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (int v = 0; v < n; ++v)
      col[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
    int nc = static_cast<int>(keys.size());
    if (nc == classes) return col;
    classes = nc;
  }
}

std::string canon_rec(const Graph& g, const std::vector<int>& col0) {
  std::vector<int> col = refine(g, col0);
  int n = g.n;
  std::vector<int> cnt(n, 0);
  for (int c : col) ++cnt[c];
  int target = -1;
  for (int c = 0; c < n && target < 0; ++c)
    if (cnt[c] > 1) target = c;
  if (target < 0) {
    std::string s(static_cast<size_t>(n) * n, '0');
    for (auto [u, v] : g.edges) {
      s[col[u] * n + col[v]] = '1';
      s[col[v] * n + col[u]] = '1';
    }
    return s;
  }
  std::string best;
  for (int v = 0; v < n; ++v) {
    if (col[v] != target) continue;
    std::vector<int> c2(n);
    for (int w = 0; w < n; ++w) c2[w] = 2 * col[w] + (w == v ? 0 : 1);
    std::string s = canon_rec(g, c2);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

}  // namespace

std::string canonical_form(const Graph& g) {
  std::vector<int> col(g.n);
  for (int v = 0; v < g.n; ++v) col[v] = g.degree(v);
  return std::to_string(g.n) + ":" + canon_rec(g, col);
}

std::vector<Graph> exhaustive_partial2trees(int max_n) {
  std::vector<Graph> out;
  std::vector<Graph> level{Graph(1)};
  out.push_back(Graph(1));
  for (int n = 2; n <= max_n; ++n) {
    std::map<std::string, Graph> next;
    for (const Graph& g : level) {
      int k = g.n;
      for (int mask = 1; mask < (1 << k); ++mask) {
        if (__builtin_popcount(mask) > 4) continue;
        bool ok = true;
        for (int v = 0; v < k && ok; ++v)
          if ((mask >> v) & 1 && g.degree(v) >= 4) ok = false;
        if (!ok) continue;
        Graph h(k + 1);
        for (auto [u, v] : g.edges) h.add_edge(u, v);
        for (int v = 0; v < k; ++v)
          if ((mask >> v) & 1) h.add_edge(v, k);
        if (validate_partial2tree(h) == GraphClass::NotPartial2Tree) continue;
        std::string c = canonical_form(h);
        if (!next.count(c)) next.emplace(c, std::move(h));
      }
    }
    level.clear();
    for (auto& [c, g] : next) {
      level.push_back(g);
      out.push_back(g);
    }
  }
  return out;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph theta_graph(const std::vector<int>& lengths) {
  Builder b;
  int s = b.vertex(), t = b.vertex();
  for (int l : lengths) b.chain(s, t, l - 1);
  return b.graph();
}

Graph complete_bipartite(int a, int c) {
  Graph g(a + c);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < c; ++j) g.add_edge(i, a + j);
  return g;
}

}  // namespace rpt
