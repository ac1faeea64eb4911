#include "rpt/ortho_rep.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rpt {

int OrthoRep::pos(int v, int e) const {
  const auto& l = rot[v];
  for (int i = 0; i < static_cast<int>(l.size()); ++i)
    if (l[i] == e) return i;
  throw std::logic_error("OrthoRep::pos: edge " + std::to_string(e) + " not at vertex " + std::to_string(v));
}

Dart next_dart(const OrthoRep& r, Dart d) {
  int b = r.other(d.e, d.from);
  int k = r.degree(b);
  int i = r.pos(b, d.e);
  return {r.rot[b][(i - 1 + k) % k], b};
}

int corner_at_head(const OrthoRep& r, Dart d) {
  int b = r.other(d.e, d.from);
  int k = r.degree(b);
  int i = r.pos(b, d.e);
  return r.angle[b][(i - 1 + k) % k];
}

FaceInfo trace_faces(const OrthoRep& r) {
  FaceInfo f;
  int m = static_cast<int>(r.edges.size());
  f.face_of_dart.assign(2 * m, -1);
  for (int e = 0; e < m; ++e)
    for (int side = 0; side < 2; ++side) {
      if (f.face_of_dart[2 * e + side] != -1) continue;
      int id = static_cast<int>(f.walks.size());
      std::vector<Dart> walk;
      int sum = 0;
      Dart d{e, r.edges[e][side]};
      while (f.face_of_dart[dart_id(r, d.e, d.from)] == -1) {
        f.face_of_dart[dart_id(r, d.e, d.from)] = id;
        walk.push_back(d);
        sum += 2 - corner_at_head(r, d);
        d = next_dart(r, d);
      }
      f.walks.push_back(std::move(walk));
      f.turn_sum.push_back(sum);
    }
  if (r.ext_edge >= 0)
    f.external = f.face_of_dart[dart_id(r, r.ext_edge, r.ext_from)];
  else
    for (int i = 0; i < static_cast<int>(f.walks.size()); ++i)
      if (f.turn_sum[i] == -4) {
        f.external = i;
        break;
      }
  return f;
}

int turn_at(const OrthoRep& r, int w, int e_in, int e_out) {
  int k = r.degree(w);
  int i = r.pos(w, e_out), j = r.pos(w, e_in);
  int sweep = 0;
  for (int x = i; x != j; x = (x + 1) % k) sweep += r.angle[w][x];
  return 2 - sweep;
}

namespace {

int dir_of(const std::array<long long, 2>& a, const std::array<long long, 2>& b) {
  if (a[1] == b[1] && b[0] > a[0]) return 0;
  if (a[0] == b[0] && b[1] < a[1]) return 1;
  if (a[1] == b[1] && b[0] < a[0]) return 2;
  if (a[0] == b[0] && b[1] > a[1]) return 3;
  return -1;
}

// Axis-parallel closed segments intersect?
bool segs_meet(std::array<long long, 2> a, std::array<long long, 2> b, std::array<long long, 2> c,
               std::array<long long, 2> d) {
  long long ax0 = std::min(a[0], b[0]), ax1 = std::max(a[0], b[0]);
  long long ay0 = std::min(a[1], b[1]), ay1 = std::max(a[1], b[1]);
  long long cx0 = std::min(c[0], d[0]), cx1 = std::max(c[0], d[0]);
  long long cy0 = std::min(c[1], d[1]), cy1 = std::max(c[1], d[1]);
  return ax0 <= cx1 && cx0 <= ax1 && ay0 <= cy1 && cy0 <= ay1;
}

}  // namespace

ValidationReport validate_rep(const OrthoRep& r) {
  ValidationReport rep;
  auto fail = [&](const std::string& s) {
    rep.ok = false;
    if (rep.errors.size() < 50) rep.errors.push_back(s);
  };
  int m = static_cast<int>(r.edges.size());
  if (static_cast<int>(r.rot.size()) != r.n || static_cast<int>(r.angle.size()) != r.n) {
    fail("rotation/angle tables have wrong size");
    return rep;
  }
  std::vector<int> seen(m, 0);
  for (int v = 0; v < r.n; ++v) {
    if (r.rot[v].size() != r.angle[v].size()) {
      fail("vertex " + std::to_string(v) + ": angle count differs from degree");
      return rep;
    }
    int sum = 0;
    for (size_t i = 0; i < r.rot[v].size(); ++i) {
      int e = r.rot[v][i];
      if (e < 0 || e >= m || (r.edges[e][0] != v && r.edges[e][1] != v)) {
        fail("vertex " + std::to_string(v) + ": foreign edge in rotation");
        return rep;
      }
      ++seen[e];
      int a = r.angle[v][i];
      if (a < 1 || a > 4) fail("vertex " + std::to_string(v) + ": angle out of range");
      sum += a;
    }
    if (!r.rot[v].empty() && sum != 4) fail("vertex " + std::to_string(v) + ": angle sum " + std::to_string(sum) + " != 4");
  }
  for (int e = 0; e < m; ++e)
    if (seen[e] != 2) {
      fail("edge " + std::to_string(e) + " not in both rotations");
      return rep;
    }
  if (m == 0) return rep;
  FaceInfo f = trace_faces(r);
  int nf = static_cast<int>(f.walks.size());
  if (r.n - m + nf != 2) fail("Euler check failed: V-E+F = " + std::to_string(r.n - m + nf));
  if (f.external < 0) fail("no external face");
  for (int i = 0; i < nf; ++i) {
    int want = i == f.external ? -4 : 4;
    if (f.turn_sum[i] != want)
      fail("face " + std::to_string(i) + ": turn sum " + std::to_string(f.turn_sum[i]) + " != " + std::to_string(want));
  }
  if (!r.has_coords()) return rep;
  if (static_cast<int>(r.coords.size()) != r.n) {
    fail("coordinate table has wrong size");
    return rep;
  }
  for (int v = 0; v < r.n; ++v) {
    int k = r.degree(v);
    for (int i = 0; i < k; ++i) {
      int e = r.rot[v][i], e2 = r.rot[v][(i + 1) % k];
      int d1 = dir_of(r.coords[v], r.coords[r.other(e, v)]);
      int d2 = dir_of(r.coords[v], r.coords[r.other(e2, v)]);
      if (d1 < 0) {
        fail("edge " + std::to_string(e) + " is not an axis-parallel segment");
        continue;
      }
      if (k > 1 && d2 >= 0 && (d1 + r.angle[v][i]) % 4 != d2)
        fail("vertex " + std::to_string(v) + ": drawing disagrees with angles");
    }
  }
  std::map<std::array<long long, 2>, int> at;
  for (int v = 0; v < r.n; ++v)
    if (!at.emplace(r.coords[v], v).second) fail("vertices share a point: " + std::to_string(v));
  // sweep by x-extent to keep the pair check cheap on large drawings
  std::vector<int> ord(m);
  for (int e = 0; e < m; ++e) ord[e] = e;
  auto xlo = [&](int e) { return std::min(r.coords[r.edges[e][0]][0], r.coords[r.edges[e][1]][0]); };
  auto xhi = [&](int e) { return std::max(r.coords[r.edges[e][0]][0], r.coords[r.edges[e][1]][0]); };
  std::sort(ord.begin(), ord.end(), [&](int a, int b) { return xlo(a) < xlo(b); });
  for (int i = 0; i < m; ++i) {
    int e = ord[i];
    auto a = r.coords[r.edges[e][0]], b = r.coords[r.edges[e][1]];
    for (int j = i + 1; j < m && xlo(ord[j]) <= xhi(e); ++j) {
      int g = ord[j];
      auto c = r.coords[r.edges[g][0]], d = r.coords[r.edges[g][1]];
      if (!segs_meet(a, b, c, d)) continue;
      int shared = -1;
      for (int x : r.edges[e])
        for (int y : r.edges[g])
          if (x == y) shared = x;
      if (shared < 0) {
        fail("edges " + std::to_string(e) + " and " + std::to_string(g) + " cross");
        continue;
      }
      // sharing an endpoint: they may only meet there
      int oe = r.other(e, shared), og = r.other(g, shared);
      if (dir_of(r.coords[shared], r.coords[oe]) == dir_of(r.coords[shared], r.coords[og]))
        fail("edges " + std::to_string(e) + " and " + std::to_string(g) + " overlap");
    }
  }
  return rep;
}

int measure_spirality(const OrthoRep& r, const std::vector<char>& comp, int u, int v, uint64_t path_seed) {
  // simple path u -> v inside the component
  std::vector<int> via(r.n, -2);
  std::vector<int> path;
  if (path_seed == 0) {
    std::vector<int> q{u};
    via[u] = -1;
    for (size_t h = 0; h < q.size() && via[v] == -2; ++h) {
      int x = q[h];
      if (x == v) break;
      for (int e : r.rot[x]) {
        if (!comp[e]) continue;
        int y = r.other(e, x);
        if (via[y] != -2) continue;
        via[y] = e;
        q.push_back(y);
      }
    }
  } else {
    std::mt19937_64 rng(path_seed);
    std::vector<std::pair<int, std::vector<int>>> st;
    via[u] = -1;
    auto nbrs = [&](int x) {
      std::vector<int> l;
      for (int e : r.rot[x])
        if (comp[e]) l.push_back(e);
      std::shuffle(l.begin(), l.end(), rng);
      return l;
    };
    st.push_back({u, nbrs(u)});
    while (!st.empty() && via[v] == -2) {
      auto& [x, l] = st.back();
      if (l.empty()) {
        st.pop_back();
        continue;
      }
      int e = l.back();
      l.pop_back();
      int y = r.other(e, x);
      if (via[y] != -2) continue;
      via[y] = e;
      if (y == v) break;
      st.push_back({y, nbrs(y)});
    }
  }
  if (via[v] == -2) throw std::invalid_argument("measure_spirality: poles not connected inside component");
  for (int x = v; x != u; x = r.other(via[x], x)) path.push_back(via[x]);
  std::reverse(path.begin(), path.end());
  long long twice = 0;
  int x = u;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    x = r.other(path[i], x);
    twice += 2 * turn_at(r, x, path[i], path[i + 1]);
  }
  auto pole_part = [&](int w, bool start) {
    std::vector<int> in, ext;
    for (int e : r.rot[w]) (comp[e] ? in : ext).push_back(e);
    if (in.size() == 1 || ext.empty()) return 0LL;
    long long s = 0;
    for (int a : ext) s += start ? turn_at(r, w, a, path.front()) : turn_at(r, w, path.back(), a);
    return 2 * s / static_cast<long long>(ext.size());
  };
  twice += pole_part(u, true) + pole_part(v, false);
  return static_cast<int>(twice);
}

std::string to_json(const OrthoRep& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["edges"] = r.edges;
  j["rot"] = r.rot;
  j["angle"] = r.angle;
  j["ext"] = {r.ext_edge, r.ext_from};
  if (r.has_coords()) j["coords"] = r.coords;
  return j.dump();
}

OrthoRep rep_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  OrthoRep r;
  r.n = j.at("n").get<int>();
  r.edges = j.at("edges").get<std::vector<std::array<int, 2>>>();
  r.rot = j.at("rot").get<std::vector<std::vector<int>>>();
  r.angle = j.at("angle").get<std::vector<std::vector<int>>>();
  r.ext_edge = j.at("ext")[0].get<int>();
  r.ext_from = j.at("ext")[1].get<int>();
  if (j.contains("coords")) r.coords = j["coords"].get<std::vector<std::array<long long, 2>>>();
  return r;
}

bool operator==(const OrthoRep& a, const OrthoRep& b) {
  return a.n == b.n && a.edges == b.edges && a.rot == b.rot && a.angle == b.angle && a.coords == b.coords &&
         a.ext_edge == b.ext_edge && a.ext_from == b.ext_from;
}

std::string to_svg(const OrthoRep& r) {
  if (!r.has_coords()) throw std::invalid_argument("to_svg: representation has no coordinates");
  const long long S = 40, pad = 20;
  long long x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (int v = 0; v < r.n; ++v) {
    auto [x, y] = r.coords[v];
    if (v == 0 || x < x0) x0 = x;
    if (v == 0 || x > x1) x1 = x;
    if (v == 0 || y < y0) y0 = y;
    if (v == 0 || y > y1) y1 = y;
  }
  auto px = [&](long long x) { return (x - x0) * S + pad; };
  auto py = [&](long long y) { return (y1 - y) * S + pad; };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << (x1 - x0) * S + 2 * pad
    << "\" height=\"" << (y1 - y0) * S + 2 * pad << "\">\n";
  for (auto [a, b] : r.edges)
    o << "<line x1=\"" << px(r.coords[a][0]) << "\" y1=\"" << py(r.coords[a][1]) << "\" x2=\"" << px(r.coords[b][0])
      << "\" y2=\"" << py(r.coords[b][1]) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (int v = 0; v < r.n; ++v) {
    o << "<circle cx=\"" << px(r.coords[v][0]) << "\" cy=\"" << py(r.coords[v][1])
      << "\" r=\"5\" fill=\"white\" stroke=\"black\"/>\n";
    o << "<text x=\"" << px(r.coords[v][0]) + 6 << "\" y=\"" << py(r.coords[v][1]) - 6
      << "\" font-size=\"10\">" << v << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace rpt
