// augsparse command-line front end.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "augsparse/cooc.hpp"
#include "augsparse/dsfm.hpp"
#include "augsparse/error.hpp"
#include "augsparse/flownet.hpp"
#include "augsparse/grid_benchmark.hpp"
#include "augsparse/io.hpp"
#include "augsparse/oracle.hpp"
#include "augsparse/plcover.hpp"
#include "augsparse/reduce.hpp"
#include "augsparse/splitting.hpp"

namespace {

using namespace augsparse;
using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Bad input of any kind (unparsable file, invalid penalties, bad flags).
constexpr int kInputError = 2;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void emit(const json& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << '\n';
    return;
  }
  auto out = open_output(out_path);
  out << report.dump(2) << '\n';
}

Hypergraph load_hypergraph(const std::string& path) {
  auto in = open_input(path);
  return read_hypergraph(in);
}

std::vector<NodeId> load_nodes(const std::string& path) {
  if (path.empty()) return {};
  auto in = open_input(path);
  return read_node_list(in);
}

void write_nodes(const std::string& path, const std::vector<NodeId>& nodes) {
  auto out = open_output(path);
  for (NodeId v : nodes) out << v << '\n';
}

json pieces_summary(const std::vector<std::size_t>& pieces) {
  json j;
  j["total"] = std::accumulate(pieces.begin(), pieces.end(), std::size_t{0});
  if (pieces.empty()) {
    j["min"] = 0;
    j["max"] = 0;
    j["mean"] = 0.0;
  } else {
    j["min"] = *std::min_element(pieces.begin(), pieces.end());
    j["max"] = *std::max_element(pieces.begin(), pieces.end());
    j["mean"] = static_cast<double>(j["total"].get<std::size_t>()) / pieces.size();
  }
  return j;
}

json graph_summary(const AugmentedGraph& g) {
  const BuildStats& s = g.stats();
  return {{"nodes", g.net().node_count()},
          {"arcs", g.net().arcs().size()},
          {"aux_nodes", s.aux_nodes},
          {"pieces", pieces_summary(s.pieces)}};
}

json hypergraph_summary(const Hypergraph& h) {
  std::size_t total = 0;
  for (const Hyperedge& e : h.edges) total += e.members.size();
  return {{"n", h.n}, {"hyperedges", h.edges.size()}, {"total_size", total}};
}

// Role map side-file: auxiliaries as [node, hyperedge, local] triples.
void write_roles(const std::string& path, const AugmentedGraph& g) {
  json aux = json::array();
  const auto roles = g.roles();
  for (std::size_t v = 0; v < roles.size(); ++v) {
    if (roles[v].kind == NodeKind::kAuxiliary) {
      aux.push_back({v, roles[v].hyperedge, roles[v].local});
    }
  }
  json j = {{"node_count", g.net().node_count()},
            {"original_count", g.original_count()},
            {"source", g.net().source()},
            {"sink", g.net().sink()},
            {"auxiliary", std::move(aux)}};
  auto out = open_output(path);
  out << j.dump() << '\n';
}

json lines_json(const PlCover& cover, double weight) {
  json out = json::array();
  for (const Line& l : cover.lines()) out.push_back({weight * l.slope, weight * l.intercept});
  return out;
}

struct CoverArgs {
  std::string family;
  double param = 0.0;
  int k = 0;
  double eps = 0.1;
  double weight = 1.0;
  std::vector<double> values;
  std::vector<double> gscb;
  std::string method = "auto";
  std::string out;
};

int run_cover(const CoverArgs& a) {
  json report = {{"command", "cover"}, {"eps", a.eps}};
  if (!a.gscb.empty()) {
    const GscbFunction w = materialize_gscb(a.gscb);
    const PlCover cover = gscb_cover(w, a.eps);
    const KcgParams p = cover_to_kcg(cover, w.k()).scaled(a.weight);
    report["family"] = "gscb";
    report["k"] = w.k();
    report["method"] = "greedy";
    report["pieces"] = cover.size();
    report["lines"] = lines_json(cover, a.weight);
    report["z0"] = p.z0;
    report["zk"] = p.zk;
    report["a"] = p.a;
    report["b"] = p.b;
    emit(report, a.out);
    return 0;
  }

  if (a.family.empty()) throw DomainError("cover needs --family or --gscb");
  if (a.k < 1) throw DomainError("cover needs --k >= 1");
  std::vector<std::string> tokens{a.family};
  if (a.family == "dlinear" || a.family == "power") {
    std::ostringstream param;
    param.precision(17);
    param << a.param;
    tokens.push_back(param.str());
  }
  if (a.family == "custom") {
    for (double v : a.values) {
      std::ostringstream value;
      value.precision(17);
      value << v;
      tokens.push_back(value.str());
    }
  }
  const SplittingSpec spec = parse_splitting_spec(tokens);

  std::string method = a.method;
  if (method == "auto") method = spec.family == Family::kClique ? "clique" : "greedy";
  if (method == "clique" && spec.family != Family::kClique) {
    throw DomainError("--method clique applies only to --family clique");
  }
  if (method != "clique" && method != "greedy") {
    throw DomainError("--method must be auto, greedy or clique");
  }

  PlCover cover;
  if (method == "clique") {
    if (a.k < 2) throw DomainError("clique covers need --k >= 2");
    cover = clique_cover(a.k, a.eps);
  } else {
    cover = find_best_cover(materialize_scb(spec, a.k), a.eps);
  }
  const CcbParams p = cover_to_ccb(cover).scaled(a.weight);
  report["family"] = to_string(spec.family);
  report["k"] = a.k;
  report["r"] = a.k / 2;
  report["method"] = method;
  report["weight"] = a.weight;
  report["pieces"] = cover.positive_slope_count();
  report["lines"] = lines_json(cover, a.weight);
  report["a"] = p.a;
  report["b"] = p.b;
  emit(report, a.out);
  return 0;
}

struct ReduceArgs {
  std::string input;
  double eps = 0.1;
  std::string mode = "auto";
  std::string network;
  std::string roles;
  std::string source_nodes;
  std::string sink_nodes;
  bool solve = false;
  unsigned threads = 1;
  std::string out;
};

int run_reduce(const ReduceArgs& a) {
  const Hypergraph h = load_hypergraph(a.input);
  BuildOptions options;
  options.threads = a.threads;
  options.source_nodes = load_nodes(a.source_nodes);
  options.sink_nodes = load_nodes(a.sink_nodes);

  std::string mode = a.mode;
  if (mode == "auto") mode = h.is_symmetric() ? "sparsifier" : "st";
  if (mode != "sparsifier" && mode != "st") {
    throw DomainError("--mode must be auto, sparsifier or st");
  }
  const AugmentedGraph g =
      mode == "sparsifier" ? build_sparsifier(h, a.eps, options) : build_st_network(h, a.eps, options);

  if (!a.network.empty()) {
    auto out = open_output(a.network);
    write_flow_network(out, g.net());
    write_roles(a.roles.empty() ? a.network + ".roles.json" : a.roles, g);
  }

  json report = {{"command", "reduce"},
                 {"parameters", {{"input", a.input}, {"eps", a.eps}, {"mode", mode},
                                 {"threads", a.threads}}},
                 {"instance", hypergraph_summary(h)},
                 {"output", graph_summary(g)},
                 {"timings", {{"cover_ms", g.stats().cover_ms}, {"build_ms", g.stats().build_ms}}}};
  if (a.solve) {
    const auto start = Clock::now();
    const MinCutResult cut = max_flow_min_cut(g.net());
    report["timings"]["solve_ms"] = ms_since(start);
    report["result"] = {{"flow_value", cut.flow_value}};
  }
  emit(report, a.out);
  return 0;
}

struct MincutArgs {
  std::string input;
  std::string side_out;
  std::string rewrite;
  std::string out;
};

int run_mincut(const MincutArgs& a) {
  FlowNetwork net;
  {
    auto in = open_input(a.input);
    net = read_flow_network(in);
  }
  if (!a.rewrite.empty()) {
    auto out = open_output(a.rewrite);
    write_flow_network(out, net);
  }
  const auto start = Clock::now();
  const MinCutResult cut = max_flow_min_cut(net);
  const double solve_ms = ms_since(start);
  if (!a.side_out.empty()) write_nodes(a.side_out, cut.source_side);
  json report = {{"command", "mincut"},
                 {"parameters", {{"input", a.input}}},
                 {"output", {{"nodes", net.node_count()}, {"arcs", net.arcs().size()}}},
                 {"timings", {{"solve_ms", solve_ms}}},
                 {"result",
                  {{"flow_value", cut.flow_value}, {"source_side_size", cut.source_side.size()}}}};
  emit(report, a.out);
  return 0;
}

struct DsfmArgs {
  std::string input;
  double eps = 0.1;
  std::string seed_in;
  std::string seed_out;
  std::string set_out;
  bool ratio = false;
  unsigned threads = 1;
  std::string out;
};

int run_dsfm(const DsfmArgs& a) {
  const DsfmInstance inst = to_dsfm(load_hypergraph(a.input));
  const Seeds seeds{load_nodes(a.seed_in), load_nodes(a.seed_out)};
  const Solution sol = sparse_card(inst, a.eps, seeds, a.threads);
  if (!a.set_out.empty()) write_nodes(a.set_out, sol.set);

  json report = {{"value", sol.value},
                 {"bound", sol.a_priori_bound},
                 {"eps", sol.epsilon},
                 {"nodes", sol.nodes},
                 {"arcs", sol.arcs},
                 {"pieces", sol.pieces},
                 {"cut_value", sol.cut_value},
                 {"cover_ms", sol.cover_ms},
                 {"build_ms", sol.build_ms},
                 {"solve_ms", sol.solve_ms},
                 {"set", sol.set}};
  if (a.ratio) {
    const Solution exact = sparse_card(inst, 0.0, seeds, a.threads);
    const Ratio r = a_posteriori_ratio(sol, exact.value);
    report["optimum"] = exact.value;
    report["ratio"] = r.value;
    report["exact"] = r.exact;
  }
  emit(report, a.out);
  return 0;
}

struct CoocArgs {
  std::string input;
  double eps = 0.1;
  std::string network;
  std::string roles;
  unsigned threads = 1;
  std::string out;
};

int run_cooc_sparsify(const CoocArgs& a) {
  CoocInstance inst;
  {
    auto in = open_input(a.input);
    inst = read_cooc(in);
  }
  const AugmentedGraph g = sparsify_cooc(inst, a.eps, a.threads);
  if (!a.network.empty()) {
    auto out = open_output(a.network);
    write_flow_network(out, g.net());
    write_roles(a.roles.empty() ? a.network + ".roles.json" : a.roles, g);
  }
  std::size_t total = 0;
  for (const CoocSet& c : inst.sets) total += c.members.size();
  json report = {{"command", "cooc-sparsify"},
                 {"parameters", {{"input", a.input}, {"eps", a.eps}, {"threads", a.threads}}},
                 {"instance",
                  {{"n", inst.n},
                   {"sets", inst.sets.size()},
                   {"total_size", total},
                   {"clique_expansion_size", inst.clique_expansion_size()}}},
                 {"output", graph_summary(g)},
                 {"timings", {{"cover_ms", g.stats().cover_ms}, {"build_ms", g.stats().build_ms}}}};
  emit(report, a.out);
  return 0;
}

struct GenCoocArgs {
  std::size_t n = 2000;
  std::size_t m = 2000;
  double gamma = 2.5;
  std::uint64_t seed = 42;
  std::string out;
};

int run_gen_cooc(const GenCoocArgs& a) {
  const CoocInstance inst = gen_powerlaw(a.n, a.m, a.gamma, a.seed);
  if (a.out.empty()) {
    write_cooc(std::cout, inst);
  } else {
    auto out = open_output(a.out);
    write_cooc(out, inst);
  }
  return 0;
}

struct BenchArgs {
  int grid = 50;
  int block = 10;
  std::vector<double> eps_sweep{1.0, 0.5, 0.1, 0.01};
  std::uint64_t seed = 42;
  unsigned threads = 1;
  std::string out;
};

void write_csv(std::ostream& out, const Sweep& sweep) {
  out << "eps,pieces,arcs,value,ratio,ms\n";
  char row[256];
  auto put = [&](double eps, std::size_t pieces, std::size_t arcs, double value, double ratio,
                 double ms) {
    std::snprintf(row, sizeof row, "%g,%zu,%zu,%.17g,%.17g,%.3f\n", eps, pieces, arcs, value,
                  ratio, ms);
    out << row;
  };
  for (const SweepRow& r : sweep.rows) put(r.eps, r.pieces, r.arcs, r.value, r.ratio, r.ms);
  const Solution& e = sweep.exact;
  put(0.0, e.pieces, e.arcs, e.value, 1.0, e.cover_ms + e.build_ms + e.solve_ms);
}

int run_bench(const BenchArgs& a) {
  GridOptions options;
  options.width = a.grid;
  options.block = a.block;
  options.seed = a.seed;
  const DsfmInstance inst = make_grid_instance(options);
  const Sweep sweep = run_grid_sweep(inst, a.eps_sweep, a.threads);
  if (a.out.empty()) {
    write_csv(std::cout, sweep);
  } else {
    auto out = open_output(a.out);
    write_csv(out, sweep);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Augmented cut sparsifiers for hypergraphs and cardinality-based DSFM"};
  app.require_subcommand(1);

  CoverArgs cover;
  auto* cover_cmd = app.add_subcommand("cover", "Cover one splitting function with CB/ACB gadgets");
  cover_cmd->add_option("--family", cover.family, "clique|linear|dlinear|sqrt|power|aon|custom");
  cover_cmd->add_option("--param", cover.param, "delta for dlinear, exponent for power");
  cover_cmd->add_option("--k", cover.k, "hyperedge size");
  cover_cmd->add_option("--eps", cover.eps, "approximation tolerance")->check(CLI::NonNegativeNumber);
  cover_cmd->add_option("--weight", cover.weight, "weight multiplier")->check(CLI::NonNegativeNumber);
  cover_cmd->add_option("--values", cover.values, "custom penalties w(0..k/2)")->delimiter(',');
  cover_cmd->add_option("--gscb", cover.gscb, "generalized penalties w(0..k)")->delimiter(',');
  cover_cmd->add_option("--method", cover.method, "auto|greedy|clique");
  cover_cmd->add_option("--out", cover.out, "write the JSON report here");

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Hypergraph to augmented flow network");
  reduce_cmd->add_option("--input", reduce.input, "hypergraph file")->required();
  reduce_cmd->add_option("--eps", reduce.eps)->check(CLI::NonNegativeNumber);
  reduce_cmd->add_option("--mode", reduce.mode, "auto|sparsifier|st");
  reduce_cmd->add_option("--network", reduce.network, "write the flow network here");
  reduce_cmd->add_option("--roles", reduce.roles, "role map JSON (default <network>.roles.json)");
  reduce_cmd->add_option("--source-nodes", reduce.source_nodes, "node ids tied to the source");
  reduce_cmd->add_option("--sink-nodes", reduce.sink_nodes, "node ids tied to the sink");
  reduce_cmd->add_flag("--solve", reduce.solve, "also compute the max flow in-process");
  reduce_cmd->add_option("--threads", reduce.threads)->check(CLI::PositiveNumber);
  reduce_cmd->add_option("--out", reduce.out, "write the JSON report here");

  MincutArgs mincut;
  auto* mincut_cmd = app.add_subcommand("mincut", "Max flow / min cut of a flow network file");
  mincut_cmd->add_option("--input", mincut.input, "flow network file")->required();
  mincut_cmd->add_option("--side-out", mincut.side_out, "write source-side node ids here");
  mincut_cmd->add_option("--rewrite", mincut.rewrite, "re-serialize the parsed network here");
  mincut_cmd->add_option("--out", mincut.out, "write the JSON report here");

  DsfmArgs dsfm;
  auto* dsfm_cmd = app.add_subcommand("dsfm", "Approximate cardinality-based DSFM");
  dsfm_cmd->add_option("--input", dsfm.input, "hypergraph file")->required();
  dsfm_cmd->add_option("--eps", dsfm.eps)->check(CLI::NonNegativeNumber);
  dsfm_cmd->add_option("--seed-in", dsfm.seed_in, "node ids forced into the solution");
  dsfm_cmd->add_option("--seed-out", dsfm.seed_out, "node ids forced out of the solution");
  dsfm_cmd->add_option("--set-out", dsfm.set_out, "write the solution ids here, one per line");
  dsfm_cmd->add_flag("--ratio", dsfm.ratio, "also solve exactly and report the observed ratio");
  dsfm_cmd->add_option("--threads", dsfm.threads)->check(CLI::PositiveNumber);
  dsfm_cmd->add_option("--out", dsfm.out, "write the JSON report here");

  CoocArgs cooc;
  auto* cooc_cmd = app.add_subcommand("cooc-sparsify", "Sparsify a co-occurrence instance");
  cooc_cmd->add_option("--input", cooc.input, "co-occurrence file")->required();
  cooc_cmd->add_option("--eps", cooc.eps)->check(CLI::NonNegativeNumber);
  cooc_cmd->add_option("--network", cooc.network, "write the flow network here");
  cooc_cmd->add_option("--roles", cooc.roles, "role map JSON (default <network>.roles.json)");
  cooc_cmd->add_option("--threads", cooc.threads)->check(CLI::PositiveNumber);
  cooc_cmd->add_option("--out", cooc.out, "write the JSON report here");

  GenCoocArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-cooc", "Generate a power-law co-occurrence instance");
  gen_cmd->add_option("--n", gen.n)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--m", gen.m)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--gamma", gen.gamma);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--out", gen.out, "write the instance here (default stdout)");

  std::uint64_t verify_seed = 42;
  auto* verify_cmd = app.add_subcommand("verify", "Run the randomized self-check suite");
  verify_cmd->add_option("--seed", verify_seed);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Grid segmentation eps sweep (CSV)");
  bench_cmd->add_option("--grid", bench.grid, "grid width")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--block", bench.block, "region block width")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--eps-sweep", bench.eps_sweep)->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--threads", bench.threads)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", bench.out, "write the CSV here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*cover_cmd) return run_cover(cover);
    if (*reduce_cmd) return run_reduce(reduce);
    if (*mincut_cmd) return run_mincut(mincut);
    if (*dsfm_cmd) return run_dsfm(dsfm);
    if (*cooc_cmd) return run_cooc_sparsify(cooc);
    if (*gen_cmd) return run_gen_cooc(gen);
    if (*verify_cmd) return oracle::run_verify_suite(verify_seed, std::cout) ? 0 : 1;
    if (*bench_cmd) return run_bench(bench);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
