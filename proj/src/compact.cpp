#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "rpt/ortho_rep.hpp"

namespace rpt {

namespace {

// Directions: 0 east, 1 south, 2 west, 3 north (clockwise order).
struct Plane {
  std::vector<std::array<int, 4>> slot;
  std::vector<std::array<int, 2>> ends;  // ends[1] lies in direction dir[e] from ends[0]
  std::vector<int> dir;

  int add_vertex() {
    slot.push_back({-1, -1, -1, -1});
    return static_cast<int>(slot.size()) - 1;
  }
  int add_edge(int a, int b, int d) {
    int e = static_cast<int>(ends.size());
    ends.push_back({a, b});
    dir.push_back(d);
    if (slot[a][d] != -1 || slot[b][(d + 2) & 3] != -1) throw std::logic_error("compact: slot already taken");
    slot[a][d] = e;
    slot[b][(d + 2) & 3] = e;
    return e;
  }
  int head(int e, int from) const { return ends[e][0] == from ? ends[e][1] : ends[e][0]; }
  int dart_dir(int e, int from) const { return ends[e][0] == from ? dir[e] : (dir[e] + 2) & 3; }
  // next dart with the face on the right, and the turn taken at the head
  std::pair<Dart, int> next(Dart d) const {
    int b = head(d.e, d.from);
    int dd = dart_dir(d.e, d.from);
    static const int order[4] = {1, 0, 3, 2};
    static const int turn[4] = {1, 0, -1, -2};
    for (int i = 0; i < 4; ++i) {
      int c = (dd + order[i]) & 3;
      if (slot[b][c] != -1) return {{slot[b][c], b}, turn[i]};
    }
    throw std::logic_error("compact: isolated vertex");
  }
  // subdivide edge e with a new vertex; returns it
  int split(int e) {
    int b = ends[e][1], d = dir[e];
    int z = add_vertex();
    ends[e][1] = z;
    slot[z][(d + 2) & 3] = e;
    slot[b][(d + 2) & 3] = -1;
    add_edge(z, b, d);
    return z;
  }
};

struct Walk {
  std::vector<Dart> darts;
  std::vector<int> turn;  // turn[i] at head of darts[i]
};

Walk walk_face(const Plane& p, Dart start) {
  Walk w;
  Dart d = start;
  do {
    auto [nx, t] = p.next(d);
    w.darts.push_back(d);
    w.turn.push_back(t);
    if (w.darts.size() > 2 * p.ends.size()) throw std::logic_error("compact: face walk does not close");
    d = nx;
  } while (!(d.e == start.e && d.from == start.from));
  return w;
}

}  // namespace

std::vector<std::array<long long, 2>> compact(const OrthoRep& r) {
  int n = r.n;
  std::vector<std::array<long long, 2>> out(n, {0, 0});
  int m = static_cast<int>(r.edges.size());
  if (m == 0) return out;
  Plane p;
  for (int v = 0; v < n; ++v) p.add_vertex();
  // edge directions by propagation of angles
  std::vector<int> edir(m, -1);  // direction from edges[e][0] to edges[e][1]
  std::vector<char> seen(n, 0);
  std::vector<int> st;
  auto dir_from = [&](int e, int v) { return r.edges[e][0] == v ? edir[e] : (edir[e] + 2) & 3; };
  auto set_from = [&](int e, int v, int d) { edir[e] = r.edges[e][0] == v ? d : (d + 2) & 3; };
  for (int s = 0; s < n; ++s) {
    if (seen[s] || r.rot[s].empty()) continue;
    seen[s] = 1;
    set_from(r.rot[s][0], s, 0);
    st.push_back(s);
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      int k = r.degree(v), i0 = -1;
      for (int i = 0; i < k; ++i)
        if (edir[r.rot[v][i]] != -1) {
          i0 = i;
          break;
        }
      int d = dir_from(r.rot[v][i0], v);
      for (int j = 0; j < k; ++j) {
        int i = (i0 + j) % k;
        int e = r.rot[v][i];
        if (edir[e] == -1) set_from(e, v, d);
        else if (dir_from(e, v) != d) throw std::logic_error("compact: inconsistent angles");
        int w = r.other(e, v);
        if (!seen[w]) {
          seen[w] = 1;
          st.push_back(w);
        }
        d = (d + r.angle[v][i]) & 3;
      }
    }
  }
  for (int e = 0; e < m; ++e) p.add_edge(r.edges[e][0], r.edges[e][1], edir[e]);

  // frame around the external face
  int ee = r.ext_edge, ef = r.ext_from;
  if (ee < 0) {
    FaceInfo f = trace_faces(r);
    ee = f.walks[f.external][0].e;
    ef = f.walks[f.external][0].from;
  }
  Walk ext = walk_face(p, {ee, ef});
  int j = -1;
  for (size_t i = 0; i < ext.turn.size(); ++i)
    if (ext.turn[i] < 0) {
      j = static_cast<int>(i);
      break;
    }
  if (j < 0) throw std::logic_error("compact: external face has no reflex corner");
  {
    Dart in = ext.darts[j];
    int rv = p.head(in.e, in.from);
    int D = p.dart_dir(in.e, in.from);
    int z = p.add_vertex();
    int c0 = p.add_vertex(), c1 = p.add_vertex(), c2 = p.add_vertex(), c3 = p.add_vertex();
    p.add_edge(rv, z, D);
    p.add_edge(z, c1, (D + 1) & 3);
    p.add_edge(c1, c2, (D + 2) & 3);
    p.add_edge(c2, c3, (D + 3) & 3);
    p.add_edge(c3, c0, D);
    p.add_edge(c0, z, (D + 1) & 3);
  }
  int frame_ext_edge = static_cast<int>(p.ends.size()) - 2;  // c3 -> c0
  int frame_c0 = p.ends[frame_ext_edge][1];

  // refine every internal face into rectangles
  std::vector<Dart> work;
  for (int e = 0; e < static_cast<int>(p.ends.size()); ++e) {
    work.push_back({e, p.ends[e][0]});
    work.push_back({e, p.ends[e][1]});
  }
  std::vector<char> clean;
  auto did = [&](Dart d) { return 2 * d.e + (p.ends[d.e][0] == d.from ? 0 : 1); };
  auto is_outer = [&](const Walk& w) {
    for (auto& d : w.darts)
      if (d.e == frame_ext_edge && d.from == frame_c0) return true;
    return false;
  };
  while (!work.empty()) {
    Dart d = work.back();
    work.pop_back();
    if (p.ends[d.e][0] != d.from && p.ends[d.e][1] != d.from) d.from = p.ends[d.e][1];  // edge was split
    clean.resize(2 * p.ends.size(), 0);
    if (clean[did(d)]) continue;
    Walk w = walk_face(p, d);
    if (is_outer(w)) {
      for (auto& x : w.darts) clean[did(x)] = 1;
      continue;
    }
    int L = static_cast<int>(w.darts.size());
    int jr = -1;
    for (int i = 0; i < L; ++i)
      if (w.turn[i] < 0) {
        jr = i;
        break;
      }
    if (jr < 0) {
      for (auto& x : w.darts) clean[did(x)] = 1;
      continue;
    }
    Dart in = w.darts[jr];
    int rv = p.head(in.e, in.from);
    int D = p.dart_dir(in.e, in.from);
    int delta = w.turn[jr];
    int k = -1;
    for (int s = 1; s <= L; ++s) {
      int i = (jr + s) % L;
      // darts[i] leaves in direction D + delta
      if (delta == 1) {
        k = i;
        break;
      }
      delta += w.turn[i];
    }
    if (k < 0) throw std::logic_error("compact: face refinement failed");
    Dart dk = w.darts[k];
    int z = p.split(dk.e);
    int ne = p.add_edge(rv, z, D);
    clean.resize(2 * p.ends.size(), 0);
    work.push_back({ne, rv});
    work.push_back({ne, z});
  }

  // coordinates by longest paths over segment classes
  int N = static_cast<int>(p.slot.size());
  auto solve = [&](int axis) {
    // axis 0: x (classes joined by vertical edges, ordered by east edges)
    std::vector<int> uf(N);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    int join = axis == 0 ? 3 : 0;   // north edges join x-classes; east edges join y-classes
    int order = axis == 0 ? 0 : 3;  // east edges order x; north edges order y
    for (int v = 0; v < N; ++v)
      if (p.slot[v][join] != -1) uf[find(v)] = find(p.head(p.slot[v][join], v));
    std::vector<std::vector<int>> adj(N);
    std::vector<int> indeg(N, 0);
    for (int v = 0; v < N; ++v)
      if (p.slot[v][order] != -1) {
        int a = find(v), b = find(p.head(p.slot[v][order], v));
        adj[a].push_back(b);
        ++indeg[b];
      }
    std::vector<long long> val(N, 0);
    std::vector<int> q;
    for (int v = 0; v < N; ++v)
      if (find(v) == v && indeg[v] == 0) q.push_back(v);
    size_t h = 0;
    while (h < q.size()) {
      int a = q[h++];
      for (int b : adj[a]) {
        val[b] = std::max(val[b], val[a] + 1);
        if (--indeg[b] == 0) q.push_back(b);
      }
    }
    std::vector<long long> res(N);
    for (int v = 0; v < N; ++v) res[v] = val[find(v)];
    return res;
  };
  auto xs = solve(0), ys = solve(1);
  long long minx = *std::min_element(xs.begin(), xs.begin() + n);
  long long miny = *std::min_element(ys.begin(), ys.begin() + n);
  for (int v = 0; v < n; ++v) out[v] = {xs[v] - minx, ys[v] - miny};
  return out;
}

}  // namespace rpt
