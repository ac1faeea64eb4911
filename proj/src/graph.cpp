#include "rpt/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "json.hpp"

namespace rpt {

int Graph::add_edge(int u, int v) {
  int id = m();
  edges.push_back({u, v});
  adj[u].push_back(id);
  adj[v].push_back(id);
  return id;
}

int Graph::find_edge(int u, int v) const {
  for (int e : adj[u])
    if (other(e, u) == v) return e;
  return -1;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::connected() const {
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> st{0};
  seen[0] = 1;
  int cnt = 1;
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int e : adj[v]) {
      int w = other(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        st.push_back(w);
      }
    }
  }
  return cnt == n;
}

void check_graph(const Graph& g) {
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges[e];
    if (u < 0 || v < 0 || u >= g.n || v >= g.n)
      throw InputError("edge " + std::to_string(e) + ": vertex id out of range");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  }
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> nb;
    for (int e : g.adj[v]) nb.push_back(g.other(e, v));
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw InputError("duplicate edge at vertex " + std::to_string(v));
    if (g.degree(v) > 4) throw InputError("vertex " + std::to_string(v) + " has degree > 4");
  }
  if (!g.connected()) throw InputError("graph is disconnected");
}

namespace {

Graph build_checked(int n, const std::vector<std::pair<long long, long long>>& raw) {
  if (n < 0) throw InputError("negative vertex count");
  Graph g(n);
  for (auto [u, v] : raw) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("vertex id out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  check_graph(g);
  return g;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos) throw InputError("empty input");
  std::vector<std::pair<long long, long long>> raw;
  if (text[pos] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const std::exception& ex) {
      throw InputError(std::string("malformed JSON: ") + ex.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) throw InputError("missing integer field n");
    if (!j.contains("edges") || !j["edges"].is_array()) throw InputError("missing array field edges");
    for (auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw InputError("edge entries must be [u,v] integer pairs");
      raw.emplace_back(e[0].get<long long>(), e[1].get<long long>());
    }
    return build_checked(j["n"].get<int>(), raw);
  }
  std::istringstream in(text);
  std::string line;
  long long maxid = -1;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    std::istringstream ls(line);
    long long u, v;
    std::string rest;
    if (!(ls >> u >> v) || (ls >> rest))
      throw InputError("line " + std::to_string(lineno) + ": expected \"u v\"");
    raw.emplace_back(u, v);
    maxid = std::max({maxid, u, v});
  }
  if (raw.empty()) throw InputError("no edges");
  return build_checked(static_cast<int>(maxid + 1), raw);
}

std::string to_json(const Graph& g) {
  std::vector<std::array<int, 2>> es;
  for (auto [u, v] : g.edges) es.push_back({std::min(u, v), std::max(u, v)});
  std::sort(es.begin(), es.end());
  nlohmann::json j;
  j["n"] = g.n;
  j["edges"] = nlohmann::json::array();
  for (auto& e : es) j["edges"].push_back({e[0], e[1]});
  return j.dump();
}

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::SimpleCycle: return "SimpleCycle";
    case GraphClass::SpBlock: return "SpBlock";
    case GraphClass::Partial2Tree: return "Partial2Tree";
    case GraphClass::NotPartial2Tree: return "NotPartial2Tree";
  }
  return "?";
}

bool is_simple_cycle(const Graph& g) {
  if (g.n < 3 || g.m() != g.n) return false;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) != 2) return false;
  return g.connected();
}

bool is_sp_reducible(const Graph& g) {
  if (g.n < 2) return false;
  // neighbor lists with parallel edges collapsed
  std::vector<std::vector<int>> nb(g.n);
  for (auto [u, v] : g.edges) {
    nb[u].push_back(v);
    nb[v].push_back(u);
  }
  for (auto& l : nb) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  std::vector<char> alive(g.n, 1);
  int nalive = g.n;
  std::deque<int> q;
  for (int v = 0; v < g.n; ++v)
    if (nb[v].size() <= 2) q.push_back(v);
  auto erase_from = [&](int a, int x) {
    auto& l = nb[a];
    l.erase(std::find(l.begin(), l.end(), x));
  };
  while (!q.empty() && nalive > 2) {
    int v = q.front();
    q.pop_front();
    if (!alive[v] || nb[v].size() != 2) continue;
    int a = nb[v][0], b = nb[v][1];
    alive[v] = 0;
    --nalive;
    erase_from(a, v);
    erase_from(b, v);
    if (std::find(nb[a].begin(), nb[a].end(), b) == nb[a].end()) {
      nb[a].push_back(b);
      nb[b].push_back(a);
    }
    if (nb[a].size() <= 2) q.push_back(a);
    if (nb[b].size() <= 2) q.push_back(b);
  }
  return nalive == 2;
}

BcTree build_bc_tree(const Graph& g) {
  BcTree t;
  int n = g.n;
  t.block_of_edge.assign(g.m(), -1);
  t.cut_index.assign(n, -1);
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> estack;
  std::vector<std::vector<int>> comps;
  int timer = 0;
  struct Frame {
    int v, pe, idx;
  };
  for (int s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    std::vector<Frame> st{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!st.empty()) {
      Frame& f = st.back();
      int v = f.v;
      if (f.idx < static_cast<int>(g.adj[v].size())) {
        int e = g.adj[v][f.idx++];
        if (e == f.pe) continue;
        int w = g.other(e, v);
        if (disc[w] == -1) {
          estack.push_back(e);
          disc[w] = low[w] = timer++;
          st.push_back({w, e, 0});
        } else if (disc[w] < disc[v]) {
          estack.push_back(e);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        int pe = f.pe;
        st.pop_back();
        if (st.empty()) break;
        int p = st.back().v;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) {
          std::vector<int> comp;
          while (true) {
            int e = estack.back();
            estack.pop_back();
            comp.push_back(e);
            if (e == pe) break;
          }
          comps.push_back(std::move(comp));
        }
      }
    }
  }
  auto key = [&](int e) {
    auto [u, v] = g.edges[e];
    return std::pair<int, int>(std::min(u, v), std::max(u, v));
  };
  for (auto& c : comps)
    std::sort(c.begin(), c.end(), [&](int a, int b) { return key(a) < key(b); });
  std::sort(comps.begin(), comps.end(),
            [&](const auto& a, const auto& b) { return key(a.front()) < key(b.front()); });
  std::vector<int> nblocks(n, 0);
  for (auto& c : comps) {
    Block b;
    b.edges = c;
    std::sort(b.edges.begin(), b.edges.end());
    for (int e : c) {
      b.vertices.push_back(g.edges[e][0]);
      b.vertices.push_back(g.edges[e][1]);
      t.block_of_edge[e] = static_cast<int>(t.blocks.size());
    }
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    b.trivial = b.edges.size() == 1;
    for (int v : b.vertices) ++nblocks[v];
    t.blocks.push_back(std::move(b));
  }
  for (int v = 0; v < n; ++v)
    if (nblocks[v] >= 2) {
      t.cut_index[v] = static_cast<int>(t.cutvertices.size());
      t.cutvertices.push_back(v);
    }
  t.blocks_of_cut.resize(t.cutvertices.size());
  t.cuts_of_block.resize(t.blocks.size());
  for (int b = 0; b < static_cast<int>(t.blocks.size()); ++b)
    for (int v : t.blocks[b].vertices)
      if (t.cut_index[v] >= 0) {
        t.blocks_of_cut[t.cut_index[v]].push_back(b);
        t.cuts_of_block[b].push_back(t.cut_index[v]);
      }
  return t;
}

int BcTree::deg_in_block(const Graph& g, int v, int b) const {
  int d = 0;
  for (int e : g.adj[v])
    if (block_of_edge[e] == b) ++d;
  return d;
}

Subgraph extract_block(const Graph& g, const Block& b) {
  Subgraph s;
  s.to_global = b.vertices;
  s.g = Graph(static_cast<int>(b.vertices.size()));
  auto loc = [&](int v) {
    return static_cast<int>(std::lower_bound(b.vertices.begin(), b.vertices.end(), v) - b.vertices.begin());
  };
  for (int e : b.edges) {
    s.g.add_edge(loc(g.edges[e][0]), loc(g.edges[e][1]));
    s.edge_global.push_back(e);
  }
  return s;
}

GraphClass validate_partial2tree(const Graph& g) {
  if (is_simple_cycle(g)) return GraphClass::SimpleCycle;
  BcTree t = build_bc_tree(g);
  bool single = t.blocks.size() == 1 && !t.blocks[0].trivial;
  for (auto& b : t.blocks) {
    if (b.trivial) continue;
    Subgraph s = extract_block(g, b);
    if (!is_sp_reducible(s.g)) return GraphClass::NotPartial2Tree;
  }
  return single ? GraphClass::SpBlock : GraphClass::Partial2Tree;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.n);
  for (auto [u, v] : g.edges) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace rpt
