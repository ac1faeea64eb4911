#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rpt/block_composer.hpp"
#include "rpt/generators.hpp"
#include "rpt/ip_fastpath.hpp"
#include "rpt/oracle.hpp"
#include "rpt/spirality.hpp"

using namespace rpt;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load(const std::string& path) {
  Graph g = parse_graph(read_file(path));
  check_graph(g);
  return g;
}

json half(int d2) {
  if (d2 % 2 == 0) return d2 / 2;
  return d2 / 2.0;
}

json set_json(const SpiralitySet& s) {
  json a = json::array();
  for (int v : s.values()) a.push_back(half(v));
  return a;
}

json witness_json(const Witness& w) {
  const auto& a = w.assignment;
  json j;
  j["root"] = w.root;
  j["sigma_root_child"] = half(w.sigma_child2);
  j["sigma_root"] = half(w.sigma_root2);
  json nodes = json::array();
  for (int x : a.view.order) {
    json o;
    o["node"] = x;
    o["poles"] = {a.view.u[x], a.view.v[x]};
    o["sigma"] = half(a.sigma2[x]);
    if (!a.order[x].empty()) o["order"] = a.order[x];
    if (a.order[x].size() == 2) o["alpha"] = a.alpha[x];
    if (!a.turns[x].empty()) o["turns"] = a.turns[x];
    nodes.push_back(o);
  }
  j["nodes"] = nodes;
  return j;
}

struct Globals {
  std::string fast_path = "auto";
  std::string fft = "off";
  bool emit_witness = false;
};

ComposeOptions options(const Globals& gl) {
  ComposeOptions o;
  o.fast_path = gl.fast_path == "on" ? FastPath::On : gl.fast_path == "off" ? FastPath::Off : FastPath::Auto;
  set_sum_backend(gl.fft == "on" ? SumBackend::Fft : SumBackend::Auto);
  return o;
}

int cmd_test(const Globals& gl, const std::string& file, bool lazy) {
  Graph g = load(file);
  ComposeOptions o = options(gl);
  o.lazy_labels = lazy;
  o.realize = gl.emit_witness;
  ComposeResult r = test_partial2tree(g, o);
  std::cout << (r.yes ? "YES" : "NO") << "\n";
  if (gl.emit_witness && r.yes) {
    json j;
    j["class"] = to_string(r.cls);
    j["root_block"] = r.root_block;
    if (r.witness) j["witness"] = witness_json(*r.witness);
    j["representation"] = json::parse(to_json(r.rep));
    std::cout << j.dump(2) << "\n";
  }
  return r.yes ? 0 : 1;
}

int cmd_realize(const Globals& gl, const std::string& file, const std::string& out) {
  Graph g = load(file);
  ComposeOptions o = options(gl);
  ComposeResult r = test_partial2tree(g, o);
  if (!r.yes) {
    std::cout << "NO\n";
    return 1;
  }
  ValidationReport v = validate_rep(r.rep);
  std::cout << "YES\n";
  std::cout << "validate: " << (v.ok ? "pass" : "FAIL") << "\n";
  for (const auto& e : v.errors) std::cerr << "  " << e << "\n";
  std::ofstream f(out);
  if (!f) throw InputError("cannot write " + out);
  bool svg = out.size() >= 4 && out.substr(out.size() - 4) == ".svg";
  f << (svg ? to_svg(r.rep) : to_json(r.rep));
  return v.ok ? 0 : 1;
}

int cmd_oracle(const std::string& file) {
  Graph g = load(file);
  bool yes = oracle_test(g);
  std::cout << (yes ? "YES" : "NO") << "\n";
  return yes ? 0 : 1;
}

int cmd_spirality(const Globals& gl, const std::string& file, const std::string& root) {
  options(gl);
  Graph g = load(file);
  SpqTree t = build_spq_star(g);
  int u = -1, v = -1;
  if (std::sscanf(root.c_str(), "%d,%d", &u, &v) != 2) throw InputError("--root expects u,v");
  if (u < 0 || v < 0 || u >= g.n || v >= g.n) throw InputError("--root vertex out of range");
  int e = g.find_edge(u, v);
  if (e < 0) throw InputError("--root must name an edge");
  int q = t.q_of_edge[e];
  RootedView rv = rooted_view(t, q);
  SpDp dp(t);
  json j;
  j["tree"] = json::parse(t.to_json());
  j["root"] = q;
  json nodes = json::array();
  for (int x : rv.order) {
    if (x == q) continue;
    json o;
    o["node"] = x;
    o["parent"] = rv.parent[x];
    o["poles"] = {rv.u[x], rv.v[x]};
    o["set"] = set_json(dp.sigma(x, rv.parent[x], rv.u[x]));
    nodes.push_back(o);
  }
  j["nodes"] = nodes;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_gen(const std::string& what, int N, const std::string& kind, int n, uint64_t seed, const std::string& out) {
  Graph g;
  if (what == "lower-bound")
    g = gen_lower_bound(N).g;
  else if (what == "random")
    g = gen_random(parse_kind(kind), n, seed);
  else
    throw InputError("gen expects lower-bound or random");
  if (out.empty())
    std::cout << to_json(g) << "\n";
  else
    std::ofstream(out) << to_json(g) << "\n";
  return 0;
}

int cmd_bench(const Globals& gl, const std::string& suite, std::vector<int> sizes, int reps, uint64_t seed) {
  ComposeOptions o = options(gl);
  o.realize = false;
  bool ip = suite == "ip";
  if (suite != "ip" && suite != "general") throw InputError("--suite expects general or ip");
  if (sizes.empty()) sizes = ip ? std::vector<int>{1000, 10000, 100000} : std::vector<int>{250, 500, 1000, 2000};
  if (ip && gl.fast_path == "auto") o.fast_path = FastPath::On;
  std::cout << "n,edges,kind,verdict,micros\n";
  for (int n : sizes)
    for (int r = 0; r < reps; ++r) {
      RandomKind k = ip ? RandomKind::IndependentParallel : RandomKind::Sp;
      Graph g = gen_random(k, n, seed + r);
      auto t0 = std::chrono::steady_clock::now();
      ComposeResult res = test_partial2tree(g, o);
      auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
      std::cout << n << "," << g.m() << "," << to_string(k) << "," << (res.yes ? "YES" : "NO") << "," << us << "\n";
    }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-bend orthogonal drawing test for max-degree-4 graphs without K4 minors"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--fast-path", gl.fast_path, "Independent-parallel fast path")
      ->check(CLI::IsMember({"auto", "on", "off"}))
      ->capture_default_str();
  app.add_option("--fft", gl.fft, "FFT Cartesian sums")->check(CLI::IsMember({"on", "off"}))->capture_default_str();
  app.add_flag("--emit-witness", gl.emit_witness, "Print the witness as JSON");

  std::string file, out, root, what, kind = "sp", suite = "general";
  int N = 4, n = 50, reps = 3;
  uint64_t seed = 1;
  bool lazy = false;
  std::vector<int> sizes;

  auto* test = app.add_subcommand("test", "Decide rectilinear planarity");
  test->add_option("file", file)->required();
  test->add_flag("--lazy-labels", lazy, "Compute block labels on demand");
  auto* realize = app.add_subcommand("realize", "Write a drawing as SVG or JSON");
  realize->add_option("file", file)->required();
  realize->add_option("-o,--output", out)->required();
  auto* oracle = app.add_subcommand("oracle", "Brute-force verdict");
  oracle->add_option("file", file)->required();
  auto* spir = app.add_subcommand("spirality", "Dump spirality sets for one root");
  spir->add_option("file", file)->required();
  spir->add_option("--root", root, "Edge u,v on the reference chain")->required();
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->add_option("what", what, "lower-bound or random")->required();
  gen->add_option("--N", N);
  gen->add_option("--kind", kind);
  gen->add_option("--n", n);
  gen->add_option("--seed", seed);
  gen->add_option("-o,--output", out);
  auto* bench = app.add_subcommand("bench", "CSV timings");
  bench->add_option("--suite", suite);
  bench->add_option("--sizes", sizes);
  bench->add_option("--reps", reps);
  bench->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (*test) return cmd_test(gl, file, lazy);
    if (*realize) return cmd_realize(gl, file, out);
    if (*oracle) return cmd_oracle(file);
    if (*spir) return cmd_spirality(gl, file, root);
    if (*gen) return cmd_gen(what, N, kind, n, seed, out);
    if (*bench) return cmd_bench(gl, suite, sizes, reps, seed);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const OracleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
