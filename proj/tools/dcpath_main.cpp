// dcpath: embeddings of 2-colored graphs on double chains, with an
// exhaustive oracle, SVG rendering and sweep/bench harnesses.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "dcpath/bench.hpp"
#include "dcpath/json_io.hpp"
#include "dcpath/nhap.hpp"
#include "dcpath/oracle.hpp"
#include "dcpath/svg.hpp"
#include "dcpath/sweep.hpp"

namespace {

using namespace dcpath;

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 1;
constexpr int kExitInternal = 2;
constexpr int kExitInconclusive = 3;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  require(in.good(), "cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path);
  require(out.good(), "cannot open output file: " + path);
  out << data;
}

void write_json(const std::string& path, const json& j) {
  write_output(path, j.dump(2) + "\n");
}

Instance load_instance(const std::string& in_path) {
  return instance_from_json(parse_json(read_input(in_path)));
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>
path_edges(const PathEmbedding& pe) {
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> edges;
  for (std::size_t i = 0; i + 1 < pe.order.size(); ++i)
    edges.push_back({pe.order[i], pe.order[i + 1]});
  return edges;
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>
embedding_edges(const Embedding& emb, const ColoredGraph& g) {
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> edges;
  for (const auto& [u, v] : g.edges) edges.push_back({emb.map[u], emb.map[v]});
  return edges;
}

struct GenArgs {
  int n1 = 0, n2 = 0;
  std::string coloring = "random-equitable";
  std::uint64_t seed = 0;
  std::string c1, c2;
  char c1_color = 'B';
  std::string out;
};

int run_gen(const GenArgs& a) {
  Instance inst;
  inst.dc = generate_double_chain(a.n1, a.n2);
  if (a.coloring == "random-equitable") {
    inst.coloring = random_equitable_coloring(a.n1, a.n2, a.seed);
  } else if (a.coloring == "periodic16") {
    inst.coloring.c1 = periodic_coloring_16(a.n1);
    // Fill c2 alternating, starting with whichever color is behind.
    int blacks = count_color(inst.coloring.c1, Color::Black);
    int whites = a.n1 - blacks;
    for (int i = 0; i < a.n2; ++i) {
      if (blacks <= whites) {
        inst.coloring.c2.push_back('B');
        ++blacks;
      } else {
        inst.coloring.c2.push_back('W');
        ++whites;
      }
    }
  } else if (a.coloring == "explicit") {
    require(static_cast<int>(a.c1.size()) == a.n1 &&
                static_cast<int>(a.c2.size()) == a.n2,
            "--c1/--c2 lengths must match --n1/--n2");
    inst.coloring = {a.c1, a.c2};
    for (char c : a.c1 + a.c2) color_from_char(c);
  } else if (a.coloring == "monochromatic-chains") {
    require(a.c1_color == 'B' || a.c1_color == 'W',
            "--c1-color must be B or W");
    inst.coloring.c1.assign(a.n1, a.c1_color);
    inst.coloring.c2.assign(a.n2, a.c1_color == 'B' ? 'W' : 'B');
  } else {
    throw PreconditionError("unknown coloring spec: " + a.coloring);
  }
  write_json(a.out, to_json(inst));
  return kExitOk;
}

struct EmbedArgs {
  std::string in, out, graph, svg;
  bool certify = false;
};

int run_embed_path(const EmbedArgs& a) {
  const Instance inst = load_instance(a.in);
  const PathEmbedding pe =
      embed_nhap(inst.dc, inst.coloring, {/*certify=*/a.certify});
  if (a.certify) {
    const auto rep = validate_path_embedding(inst.dc, inst.coloring, pe);
    ensure(rep.ok, "certification failed: " + rep.violation);
  }
  write_json(a.out, to_json(pe));
  if (!a.svg.empty())
    write_output(a.svg, render_svg(inst.dc, inst.coloring, path_edges(pe)));
  return kExitOk;
}

int run_embed_caterpillar(const EmbedArgs& a) {
  const Instance inst = load_instance(a.in);
  const ColoredGraph g = graph_from_json(parse_json(read_input(a.graph)));
  const Caterpillar cat = caterpillar_from_graph(g);
  const Embedding emb =
      embed_caterpillar(inst.dc, cat, inst.coloring, {/*certify=*/a.certify});
  write_json(a.out, to_json(emb));
  if (!a.svg.empty())
    write_output(a.svg,
                 render_svg(inst.dc, inst.coloring, embedding_edges(emb, g)));
  return kExitOk;
}

int run_embed_stars(const EmbedArgs& a) {
  const Instance inst = load_instance(a.in);
  const ColoredGraph g = graph_from_json(parse_json(read_input(a.graph)));
  const Embedding emb =
      embed_star_forest(inst.dc, g, inst.coloring, {/*certify=*/a.certify});
  write_json(a.out, to_json(emb));
  if (!a.svg.empty())
    write_output(a.svg,
                 render_svg(inst.dc, inst.coloring, embedding_edges(emb, g)));
  return kExitOk;
}

struct OracleArgs {
  std::string in, out, graph, mode = "nhap";
  long long node_limit = 50'000'000;
  double time_limit = 1e9;
};

int run_oracle(const OracleArgs& a) {
  const Instance inst = load_instance(a.in);
  const auto [pts, cols] = flatten_instance(inst.dc, inst.coloring);
  const SearchBudget budget{a.node_limit, a.time_limit};
  json j;
  SearchStatus status;
  auto label_of = [&](int flat) {
    const int n1 = inst.dc.c1.size();
    return json::array(
        {flat < n1 ? "c1" : "c2", flat < n1 ? flat : flat - n1});
  };
  if (a.mode == "nhap") {
    const NhapSearchResult res = brute_force_nhap(pts, cols, budget);
    status = res.status;
    j["status"] = to_string(res.status);
    j["nodes"] = res.nodes;
    if (res.status == SearchStatus::Found) {
      json order = json::array();
      for (int i : res.order) order.push_back(label_of(i));
      j["witness"] = {{"order", order}};
    } else {
      j["witness"] = nullptr;
    }
  } else if (a.mode == "embed") {
    require(!a.graph.empty(), "--graph required for embed mode");
    const ColoredGraph g = graph_from_json(parse_json(read_input(a.graph)));
    const EmbedSearchResult res = brute_force_embed(g, pts, cols, budget);
    status = res.status;
    j["status"] = to_string(res.status);
    j["nodes"] = res.nodes;
    if (res.status == SearchStatus::Found) {
      json map = json::array();
      for (int p : res.point_of_vertex) map.push_back(label_of(p));
      j["witness"] = {{"map", map}};
    } else {
      j["witness"] = nullptr;
    }
  } else {
    throw PreconditionError("unknown oracle mode: " + a.mode);
  }
  write_json(a.out, j);
  return status == SearchStatus::Inconclusive ? kExitInconclusive : kExitOk;
}

struct VerifyArgs {
  std::string in, out, path, embedding, graph;
  int dump_cover_chain = 0;  // 0 = off
  int dump_k = 0;
};

int run_verify(const VerifyArgs& a) {
  const Instance inst = load_instance(a.in);
  json j;
  const ValidationReport dc_rep = validate_double_chain(inst.dc);
  j["double_chain"] = {{"ok", dc_rep.ok}, {"violation", dc_rep.violation}};
  bool all_ok = dc_rep.ok;
  if (!a.path.empty()) {
    const PathEmbedding pe =
        path_embedding_from_json(parse_json(read_input(a.path)));
    const auto rep = validate_path_embedding(inst.dc, inst.coloring, pe);
    j["path"] = {{"ok", rep.ok}, {"violation", rep.violation}};
    all_ok = all_ok && rep.ok;
  }
  if (!a.embedding.empty()) {
    require(!a.graph.empty(), "--graph required with --embedding");
    const ColoredGraph g = graph_from_json(parse_json(read_input(a.graph)));
    const Embedding emb =
        embedding_from_json(parse_json(read_input(a.embedding)));
    const auto rep = validate_embedding(inst.dc, inst.coloring, g, emb);
    j["embedding"] = {{"ok", rep.ok}, {"violation", rep.violation}};
    all_ok = all_ok && rep.ok;
  }
  if (a.dump_cover_chain != 0) {
    require(a.dump_cover_chain == 1 || a.dump_cover_chain == 2,
            "--dump-cover chain must be 1 or 2");
    require(a.dump_k >= 1, "--k must be at least 1");
    const ChainStats st = compute_stats(inst.dc, inst.coloring);
    const std::string colors =
        view_chain_colors(inst.coloring, st, a.dump_cover_chain);
    const Color major =
        a.dump_cover_chain == 1 ? Color::Black : Color::White;
    const auto hogs = cover_with_k_hedgehogs(colors, major, a.dump_k);
    json cover = json::array();
    for (const auto& h : hogs) {
      json spines = json::array();
      for (const auto& [minor, gap] : h.spines)
        spines.push_back({{"minor", minor}, {"gap", gap}});
      cover.push_back({{"body",
                        {{"lo", h.body.lo},
                         {"hi", h.body.hi},
                         {"head", h.body.head},
                         {"tail", h.body.tail}}},
                       {"spines", spines},
                       {"path", h.path}});
    }
    j["hedgehogs"] = cover;
    j["view"] = {{"swapped_chains", st.swapped_chains},
                 {"swapped_colors", st.swapped_colors}};
  }
  write_json(a.out, j);
  return all_ok ? kExitOk : kExitPrecondition;
}

struct RenderArgs {
  std::string in, out, path, embedding, graph;
};

int run_render(const RenderArgs& a) {
  const Instance inst = load_instance(a.in);
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> edges;
  if (!a.path.empty()) {
    const PathEmbedding pe =
        path_embedding_from_json(parse_json(read_input(a.path)));
    edges = path_edges(pe);
  } else if (!a.embedding.empty()) {
    require(!a.graph.empty(), "--graph required with --embedding");
    const ColoredGraph g = graph_from_json(parse_json(read_input(a.graph)));
    const Embedding emb =
        embedding_from_json(parse_json(read_input(a.embedding)));
    edges = embedding_edges(emb, g);
  }
  write_output(a.out, render_svg(inst.dc, inst.coloring, edges));
  return kExitOk;
}

struct SweepArgs {
  std::string suite = "nhap";
  std::string out;
  int max_n = 8;
  int min_chain = 2, max_chain = 5;
  int samples = 1000;
  std::uint64_t seed = 20240601;
  bool inject_fault = false;
};

int run_sweep(const SweepArgs& a) {
  SweepReport rep;
  if (a.suite == "nhap")
    rep = sweep_nhap(a.min_chain, a.max_chain, a.inject_fault);
  else if (a.suite == "caterpillar")
    rep = sweep_caterpillars(a.max_n, a.inject_fault);
  else if (a.suite == "stars")
    rep = sweep_star_forests(a.max_n, a.inject_fault);
  else if (a.suite == "k-cover")
    rep = sweep_k_cover(a.max_chain);
  else if (a.suite == "spine-matching")
    rep = sweep_spine_matching(a.samples, a.seed);
  else
    throw PreconditionError("unknown suite: " + a.suite);
  write_json(a.out, rep.to_json());
  return rep.ok() ? kExitOk : kExitPrecondition;
}

struct BenchArgs {
  std::string out;
  int reps = 3;
  std::uint64_t seed = 20240601;
  bool quick = false;
};

int run_bench_cmd(const BenchArgs& a) {
  const std::vector<int> ns = a.quick
                                  ? std::vector<int>{10000, 20000}
                                  : std::vector<int>{10000, 20000, 40000, 80000};
  const BenchReport rep = run_bench(ns, {0.2, 0.5, 0.8}, a.reps, a.seed);
  write_json(a.out, rep.to_json());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"straight-line embeddings of 2-colored graphs on double chains"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* cgen = app.add_subcommand("gen", "generate an instance");
  cgen->add_option("--n1", gen.n1, "size of the convex chain")->required();
  cgen->add_option("--n2", gen.n2, "size of the concave chain")->required();
  cgen->add_option("--coloring", gen.coloring,
                   "random-equitable | periodic16 | explicit | "
                   "monochromatic-chains");
  cgen->add_option("--seed", gen.seed, "seed for random colorings");
  cgen->add_option("--c1", gen.c1, "explicit c1 colors (B/W string)");
  cgen->add_option("--c2", gen.c2, "explicit c2 colors (B/W string)");
  cgen->add_option("--c1-color", gen.c1_color,
                   "chain 1 color for monochromatic-chains");
  cgen->add_option("--out", gen.out, "output file (default stdout)");

  EmbedArgs ep, ec, es;
  auto* cpath = app.add_subcommand("embed-path", "construct an NHAP");
  cpath->add_option("--in", ep.in, "instance JSON (default stdin)");
  cpath->add_option("--out", ep.out, "output file (default stdout)");
  cpath->add_option("--svg", ep.svg, "also write an SVG rendering");
  cpath->add_flag("--certify", ep.certify, "run the O(n^2) validator");

  auto* ccat = app.add_subcommand("embed-caterpillar", "embed a caterpillar");
  ccat->add_option("--in", ec.in, "instance JSON (default stdin)");
  ccat->add_option("--graph", ec.graph, "graph JSON file")->required();
  ccat->add_option("--out", ec.out, "output file (default stdout)");
  ccat->add_option("--svg", ec.svg, "also write an SVG rendering");
  ccat->add_flag("--certify", ec.certify, "run the full validator");

  auto* cstars = app.add_subcommand("embed-stars", "embed a star forest");
  cstars->add_option("--in", es.in, "instance JSON (default stdin)");
  cstars->add_option("--graph", es.graph, "graph JSON file")->required();
  cstars->add_option("--out", es.out, "output file (default stdout)");
  cstars->add_option("--svg", es.svg, "also write an SVG rendering");
  cstars->add_flag("--certify", es.certify, "run the full validator");

  OracleArgs orc;
  auto* corc = app.add_subcommand("oracle", "exhaustive backtracking search");
  corc->add_option("--in", orc.in, "instance JSON (default stdin)");
  corc->add_option("--mode", orc.mode, "nhap | embed");
  corc->add_option("--graph", orc.graph, "graph JSON (embed mode)");
  corc->add_option("--node-limit", orc.node_limit, "search node budget");
  corc->add_option("--time-limit", orc.time_limit, "seconds budget");
  corc->add_option("--out", orc.out, "output file (default stdout)");

  VerifyArgs ver;
  auto* cver = app.add_subcommand("verify", "validate documents");
  cver->add_option("--in", ver.in, "instance JSON (default stdin)");
  cver->add_option("--path", ver.path, "path embedding JSON to check");
  cver->add_option("--embedding", ver.embedding, "embedding JSON to check");
  cver->add_option("--graph", ver.graph, "graph JSON for --embedding");
  cver->add_option("--dump-cover", ver.dump_cover_chain,
                   "dump a k-hedgehog cover of view chain 1 or 2");
  cver->add_option("--k", ver.dump_k, "number of hedgehogs for --dump-cover");
  cver->add_option("--out", ver.out, "output file (default stdout)");

  RenderArgs ren;
  auto* cren = app.add_subcommand("render", "render an instance as SVG");
  cren->add_option("--in", ren.in, "instance JSON (default stdin)");
  cren->add_option("--path", ren.path, "path embedding JSON");
  cren->add_option("--embedding", ren.embedding, "embedding JSON");
  cren->add_option("--graph", ren.graph, "graph JSON for --embedding");
  cren->add_option("--out", ren.out, "output file (default stdout)");

  SweepArgs sw;
  auto* csw = app.add_subcommand("sweep", "run an exhaustive suite");
  csw->add_option("--suite", sw.suite,
                  "nhap | caterpillar | stars | k-cover | spine-matching");
  csw->add_option("--max-n", sw.max_n, "vertex bound for tree suites");
  csw->add_option("--min-chain", sw.min_chain, "minimum chain size (nhap)");
  csw->add_option("--max-chain", sw.max_chain, "maximum chain size");
  csw->add_option("--samples", sw.samples, "random samples (spine-matching)");
  csw->add_option("--seed", sw.seed, "random seed (spine-matching)");
  csw->add_flag("--inject-fault", sw.inject_fault,
                "corrupt outputs to self-test the harness");
  csw->add_option("--out", sw.out, "output file (default stdout)");

  BenchArgs ba;
  auto* cb = app.add_subcommand("bench", "linear-time scaling ladder");
  cb->add_option("--reps", ba.reps, "repetitions per point (best kept)");
  cb->add_option("--seed", ba.seed, "coloring seed");
  cb->add_flag("--quick", ba.quick, "shorter ladder");
  cb->add_option("--out", ba.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitPrecondition;
  }

  try {
    if (*cgen) return run_gen(gen);
    if (*cpath) return run_embed_path(ep);
    if (*ccat) return run_embed_caterpillar(ec);
    if (*cstars) return run_embed_stars(es);
    if (*corc) return run_oracle(orc);
    if (*cver) return run_verify(ver);
    if (*cren) return run_render(ren);
    if (*csw) return run_sweep(sw);
    if (*cb) return run_bench_cmd(ba);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
