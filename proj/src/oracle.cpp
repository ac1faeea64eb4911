#include "rpt/oracle.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <numeric>

namespace rpt {

OracleLimits OracleLimits::from_env() {
  OracleLimits l;
  if (const char* s = std::getenv("ORTHOTEST_MAX_ORACLE_N")) {
    int v = std::atoi(s);
    if (v > 0) {
      l.max_n = v;
      l.max_m = std::max(l.max_m, 2 * v);
    }
  }
  return l;
}

namespace {

void check_limits(const Graph& g, const OracleLimits& lim) {
  if (g.n > lim.max_n || g.m() > lim.max_m)
    throw OracleError("oracle size bound exceeded (n=" + std::to_string(g.n) + ", m=" + std::to_string(g.m()) +
                      ", bound n<=" + std::to_string(lim.max_n) + ", m<=" + std::to_string(lim.max_m) + ")");
}

struct FastFaces {
  const Graph& g;
  std::vector<std::array<int, 2>> posv;  // position of edge e in rot of edges[e][0], edges[e][1]
  explicit FastFaces(const Graph& gr) : g(gr), posv(gr.m()) {}

  int count(const Rotation& rot) {
    for (int v = 0; v < g.n; ++v)
      for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) {
        int e = rot[v][i];
        posv[e][g.edges[e][0] == v ? 0 : 1] = i;
      }
    int m = g.m();
    std::vector<char> seen(2 * m, 0);
    int faces = 0;
    for (int d0 = 0; d0 < 2 * m; ++d0) {
      if (seen[d0]) continue;
      ++faces;
      int d = d0;
      while (!seen[d]) {
        seen[d] = 1;
        int e = d >> 1, side = d & 1;
        int b = g.edges[e][side ^ 1];
        int k = static_cast<int>(rot[b].size());
        int i = posv[e][side ^ 1];
        int ne = rot[b][(i - 1 + k) % k];
        d = 2 * ne + (g.edges[ne][0] == b ? 0 : 1);
      }
    }
    return faces;
  }
};

struct AngleSearch {
  const Graph& g;
  const Rotation& rot;
  const EmbeddingFaces& F;
  std::vector<int> target;  // INT_MIN: free face
  std::vector<std::vector<int>> cface;
  std::vector<std::vector<std::vector<int>>> opts;
  std::vector<int> order;
  std::vector<int> fsum, frem;
  std::vector<std::vector<int>> cur;
  std::function<bool(const std::vector<std::vector<int>>&)> emit;
  bool stop = false;

  AngleSearch(const Graph& gr, const Rotation& r, const EmbeddingFaces& f) : g(gr), rot(r), F(f) {}

  bool setup(int ext_face, const std::vector<CornerConstraint>& cons, bool ext_free) {
    int nf = static_cast<int>(F.walks.size());
    target.assign(nf, 4);
    if (ext_face >= 0) target[ext_face] = ext_free ? INT_MIN : -4;
    cface.assign(g.n, {});
    opts.assign(g.n, {});
    fsum.assign(nf, 0);
    frem.assign(nf, 0);
    cur.assign(g.n, {});
    static const std::vector<std::vector<std::vector<int>>> base{
        {{}}, {{4}}, {{1, 3}, {2, 2}, {3, 1}}, {{1, 1, 2}, {1, 2, 1}, {2, 1, 1}}, {{1, 1, 1, 1}}};
    for (int v = 0; v < g.n; ++v) {
      int k = static_cast<int>(rot[v].size());
      for (int j = 0; j < k; ++j) {
        int e = rot[v][(j + 1) % k];
        int from = g.other(e, v);
        int f = F.face_of_dart[2 * e + (g.edges[e][0] == from ? 0 : 1)];
        cface[v].push_back(f);
        ++frem[f];
      }
      for (const auto& o : base[k]) {
        bool ok = true;
        for (const auto& c : cons) {
          if (c.vertex != v) continue;
          bool any = false;
          for (int j = 0; j < k; ++j) {
            bool inside = (c.allowed >> o[j]) & 1;
            bool is_ext = cface[v][j] == ext_face;
            if (c.where == CornerConstraint::External && is_ext && !inside) ok = false;
            if (c.where == CornerConstraint::Internal && !is_ext && !inside) ok = false;
            if (inside) any = true;
          }
          if (c.where == CornerConstraint::Any && !any) ok = false;
        }
        if (ok) opts[v].push_back(o);
      }
      if (opts[v].empty()) return false;
    }
    order.resize(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return opts[a].size() < opts[b].size(); });
    return true;
  }

  bool face_ok(int f) const {
    if (target[f] == INT_MIN) return true;
    int need = target[f] - fsum[f];
    return need <= frem[f] && need >= -2 * frem[f];
  }

  void rec(int idx) {
    if (stop) return;
    if (idx == g.n) {
      if (!emit(cur)) stop = true;
      return;
    }
    int v = order[idx];
    int k = static_cast<int>(rot[v].size());
    for (const auto& o : opts[v]) {
      for (int j = 0; j < k; ++j) {
        fsum[cface[v][j]] += 2 - o[j];
        --frem[cface[v][j]];
      }
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) ok = face_ok(cface[v][j]);
      if (ok) {
        cur[v] = o;
        rec(idx + 1);
      }
      for (int j = 0; j < k; ++j) {
        fsum[cface[v][j]] -= 2 - o[j];
        ++frem[cface[v][j]];
      }
      if (stop) return;
    }
  }
};

}  // namespace

EmbeddingFaces embedding_faces(const Graph& g, const Rotation& rot) {
  OrthoRep r = rep_from_rotation(g, rot);
  EmbeddingFaces ef;
  int m = g.m();
  ef.face_of_dart.assign(2 * m, -1);
  for (int d0 = 0; d0 < 2 * m; ++d0) {
    if (ef.face_of_dart[d0] != -1) continue;
    int id = static_cast<int>(ef.walks.size());
    ef.walks.emplace_back();
    Dart d{d0 >> 1, g.edges[d0 >> 1][d0 & 1]};
    while (ef.face_of_dart[dart_id(r, d.e, d.from)] == -1) {
      ef.face_of_dart[dart_id(r, d.e, d.from)] = id;
      ef.walks[id].push_back(d);
      d = next_dart(r, d);
    }
  }
  return ef;
}

OrthoRep rep_from_rotation(const Graph& g, const Rotation& rot) {
  OrthoRep r;
  r.n = g.n;
  r.edges = g.edges;
  r.rot = rot;
  r.angle.assign(g.n, {});
  for (int v = 0; v < g.n; ++v) r.angle[v].assign(rot[v].size(), 0);
  return r;
}

void enumerate_embeddings(const Graph& g, const std::function<bool(const Rotation&, const EmbeddingFaces&)>& f,
                          const OracleLimits& lim) {
  check_limits(g, lim);
  int n = g.n;
  std::vector<std::vector<std::vector<int>>> perms(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> rest(g.adj[v].begin() + (g.adj[v].empty() ? 0 : 1), g.adj[v].end());
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<int> p;
      if (!g.adj[v].empty()) p.push_back(g.adj[v][0]);
      p.insert(p.end(), rest.begin(), rest.end());
      perms[v].push_back(p);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  int want_faces = 2 - g.n + g.m();
  FastFaces ff(g);
  std::vector<int> idx(n, 0);
  Rotation rot(n);
  for (int v = 0; v < n; ++v) rot[v] = perms[v][0];
  while (true) {
    if (g.m() == 0 || ff.count(rot) == want_faces) {
      EmbeddingFaces ef = embedding_faces(g, rot);
      if (!f(rot, ef)) return;
    }
    int v = 0;
    while (v < n) {
      if (++idx[v] < static_cast<int>(perms[v].size())) {
        rot[v] = perms[v][idx[v]];
        break;
      }
      idx[v] = 0;
      rot[v] = perms[v][0];
      ++v;
    }
    if (v == n) return;
  }
}

long long count_embeddings(const Graph& g, const OracleLimits& lim) {
  long long c = 0;
  enumerate_embeddings(g, [&](const Rotation&, const EmbeddingFaces&) {
    ++c;
    return true;
  }, lim);
  return c;
}

std::optional<OrthoRep> zero_bend_feasible(const Graph& g, const Rotation& rot, int ext_face,
                                           const std::vector<CornerConstraint>& cons) {
  EmbeddingFaces ef = embedding_faces(g, rot);
  AngleSearch s(g, rot, ef);
  if (!s.setup(ext_face, cons, false)) return std::nullopt;
  std::optional<OrthoRep> out;
  s.emit = [&](const std::vector<std::vector<int>>& ang) {
    OrthoRep r = rep_from_rotation(g, rot);
    r.angle = ang;
    const Dart& d = ef.walks[ext_face].front();
    r.ext_edge = d.e;
    r.ext_from = d.from;
    out = std::move(r);
    return false;
  };
  s.rec(0);
  return out;
}

std::optional<OrthoRep> oracle_witness(const Graph& g, const std::vector<CornerConstraint>& cons,
                                       const OracleLimits& lim) {
  if (g.m() == 0) {
    OrthoRep r;
    r.n = g.n;
    r.rot.assign(g.n, {});
    r.angle.assign(g.n, {});
    return r;
  }
  std::optional<OrthoRep> out;
  enumerate_embeddings(g, [&](const Rotation& rot, const EmbeddingFaces& ef) {
    for (int f = 0; f < static_cast<int>(ef.walks.size()); ++f) {
      out = zero_bend_feasible(g, rot, f, cons);
      if (out) return false;
    }
    return true;
  }, lim);
  return out;
}

bool oracle_test(const Graph& g, const std::vector<CornerConstraint>& cons, const OracleLimits& lim) {
  return oracle_witness(g, cons, lim).has_value();
}

SpiralitySet oracle_spirality_set(const SpqTree& t, const RootedView& rv, int node, const OracleLimits& lim) {
  const Graph& bg = t.g;
  std::vector<int> loc(bg.n, -1);
  Graph h;
  std::vector<int> stack{node};
  std::vector<std::array<int, 2>> es;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (t.nodes[x].kind == NodeKind::Q)
      for (int e : t.nodes[x].chain_edges) es.push_back(bg.edges[e]);
    for (int c : rv.children[x]) stack.push_back(c);
  }
  int cnt = 0;
  for (auto& e : es)
    for (int w : e)
      if (loc[w] < 0) loc[w] = cnt++;
  int u = loc[rv.u[node]], v = loc[rv.v[node]];
  int stubs = rv.outdeg_u[node] + rv.outdeg_v[node];
  h = Graph(cnt + stubs);
  for (auto& e : es) h.add_edge(loc[e[0]], loc[e[1]]);
  int ncomp = h.m();
  int next = cnt;
  for (int i = 0; i < rv.outdeg_u[node]; ++i) h.add_edge(u, next++);
  for (int i = 0; i < rv.outdeg_v[node]; ++i) h.add_edge(v, next++);
  std::vector<char> mask(h.m(), 0);
  for (int e = 0; e < ncomp; ++e) mask[e] = 1;
  SpiralitySet out;
  auto contiguous = [&](const Rotation& rot, int w) {
    int k = static_cast<int>(rot[w].size()), changes = 0;
    for (int i = 0; i < k; ++i) changes += mask[rot[w][i]] != mask[rot[w][(i + 1) % k]];
    return changes <= 2;
  };
  enumerate_embeddings(h, [&](const Rotation& rot, const EmbeddingFaces& ef) {
    if (!contiguous(rot, u) || !contiguous(rot, v)) return true;
    int f = ef.face_of_dart[2 * ncomp];
    for (int e = ncomp; e < h.m(); ++e)
      if (ef.face_of_dart[2 * e] != f) return true;
    AngleSearch s(h, rot, ef);
    if (!s.setup(f, {}, true)) return true;
    s.emit = [&](const std::vector<std::vector<int>>& ang) {
      OrthoRep r = rep_from_rotation(h, rot);
      r.angle = ang;
      out.insert(measure_spirality(r, mask, u, v));
      return true;
    };
    s.rec(0);
    return true;
  }, lim);
  return out;
}

}  // namespace rpt
