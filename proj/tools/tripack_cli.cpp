// Copyright 2026 The tripack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end. Files:
//   graph      "n m" then m lines "u v" (u < v)
//   packing    "k" then k lines "u v w"
//   partition  "k" then k lines, one A-vertex each; B is the rest
// Exit codes: 0 success / property holds, 1 property fails or error records,
// 2 usage or input errors.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tripack/experiments.hpp"
#include "tripack/generators.hpp"
#include "tripack/graph.hpp"
#include "tripack/oracle.hpp"
#include "tripack/packing.hpp"
#include "tripack/regularity.hpp"
#include "tripack/stability.hpp"

namespace tp = tripack;

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  return in;
}

tp::Graph load_graph(const std::string& path) {
  auto in = open_in(path);
  return tp::read_edge_list(in);
}

tp::VertexSet load_partition(const std::string& path, std::size_t n) {
  auto in = open_in(path);
  std::size_t k = 0;
  if (!(in >> k)) throw std::invalid_argument(path + ": missing vertex count");
  tp::VertexSet a(n);
  for (std::size_t i = 0; i < k; ++i) {
    long long v = -1;
    if (!(in >> v) || v < 0 || static_cast<std::size_t>(v) >= n) {
      throw std::invalid_argument(path + ": bad vertex on line " + std::to_string(i + 2));
    }
    if (a.contains(static_cast<tp::Vertex>(v))) throw std::invalid_argument(path + ": repeated vertex");
    a.insert(static_cast<tp::Vertex>(v));
  }
  return a;
}

void write_partition(const std::string& path, const tp::VertexSet& a) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << a.size() << '\n';
  a.for_each([&](tp::Vertex v) { out << v << '\n'; });
}

// "lo:hi" (half open) or a comma list.
tp::VertexSet parse_vertices(const std::string& text, std::size_t n) {
  tp::VertexSet s(n);
  auto check = [&](unsigned long v) {
    if (v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    return static_cast<tp::Vertex>(v);
  };
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    const unsigned long lo = std::stoul(text.substr(0, colon));
    const unsigned long hi = std::stoul(text.substr(colon + 1));
    if (lo > hi || hi > n) throw std::invalid_argument("bad range " + text);
    return tp::VertexSet::range(n, static_cast<tp::Vertex>(lo), static_cast<tp::Vertex>(hi));
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) s.insert(check(std::stoul(item)));
  }
  return s;
}

struct GenerateArgs {
  std::string model;
  std::size_t n = 0;
  std::string out;
  std::uint64_t seed = 1;
  double p = 0.5;
  std::size_t a = 0;
  std::vector<std::size_t> parts;
  std::size_t m = 0;
  double alpha = 1.0 / 3.0;
  double beta = 0.05;
  double defect = 0.0;
  std::string a_out;
};

int run_generate(const GenerateArgs& args) {
  tp::Graph g;
  std::optional<tp::VertexSet> a;
  if (args.model == "gnp") {
    g = tp::gnp(args.n, args.p, tp::Seed(args.seed));
  } else if (args.model == "bipartite") {
    if (args.a == 0 || args.a >= args.n) throw std::invalid_argument("bipartite: need 0 < --a < --n");
    g = tp::complete_bipartite(args.a, args.n);
    a = tp::VertexSet::range(args.n, 0, static_cast<tp::Vertex>(args.a));
  } else if (args.model == "multipartite") {
    if (args.parts.empty()) throw std::invalid_argument("multipartite: --parts is required");
    g = tp::complete_multipartite(args.parts);
  } else if (args.model == "k4cx") {
    tp::K4Counterexample cx = tp::k4_counterexample(args.n, args.m);
    g = std::move(cx.graph);
    a = cx.a;
  } else if (args.model == "stable") {
    tp::StableModel sm = tp::stable_model(args.n, args.alpha, args.beta, args.defect, tp::Seed(args.seed));
    g = std::move(sm.graph);
    a = sm.a;
  } else {
    throw std::invalid_argument("unknown model '" + args.model + "'");
  }
  std::ofstream out(args.out);
  if (!out) throw std::invalid_argument("cannot write " + args.out);
  tp::write_edge_list(out, g);
  if (!args.a_out.empty()) {
    if (!a) throw std::invalid_argument("--a-out: model " + args.model + " has no designated sides");
    write_partition(args.a_out, *a);
  }
  std::cout << "wrote " << args.out << ": n=" << g.n() << " m=" << g.edge_count() << '\n';
  return 0;
}

int run_verify_packing(const std::string& graph_path, const std::string& packing_path,
                       const std::string& overlay_path) {
  tp::Graph g = load_graph(graph_path);
  if (!overlay_path.empty()) g = tp::graph_union(g, load_graph(overlay_path));
  auto in = open_in(packing_path);
  const tp::TrianglePacking p = tp::read_packing(in);
  if (auto err = tp::packing_error(g, p)) {
    std::cout << "invalid: " << *err << '\n';
    return 1;
  }
  std::cout << "valid: " << p.size() << " disjoint triangles\n";
  return 0;
}

int run_verify_factor(const std::string& graph_path, std::optional<std::uint64_t> steps) {
  const tp::Graph g = load_graph(graph_path);
  tp::ExactPackingOptions options;
  options.step_limit = steps;
  const tp::ExactPackingResult r = tp::max_triangle_packing_exact(g, options);
  if (r.status == tp::SearchStatus::unknown) {
    std::cout << "unknown: step limit reached, best found " << r.packing.size() << '\n';
    return 1;
  }
  std::cout << r.packing.size() << '\n';
  std::cout << (3 * r.packing.size() == g.n() ? "triangle factor" : "no triangle factor") << '\n';
  return 0;
}

struct RegularArgs {
  std::string graph;
  std::string a;
  std::string b;
  double eps = 0.1;
  std::optional<double> d;
  bool exhaustive = false;
  std::size_t trials = 2000;
  std::uint64_t seed = 1;
};

int run_verify_regular(const RegularArgs& args) {
  const tp::Graph g = load_graph(args.graph);
  const tp::VertexSet a = parse_vertices(args.a, g.n());
  const tp::VertexSet b = parse_vertices(args.b, g.n());
  const tp::CheckMode mode = args.exhaustive ? tp::CheckMode{tp::Exhaustive{}}
                                             : tp::CheckMode{tp::Sampled{args.trials, tp::Seed(args.seed)}};
  std::cout << "density " << tp::density(g, a, b) << '\n';
  bool holds = true;
  if (const auto w = tp::regularity_refute(g, a, b, args.eps, mode)) {
    std::cout << "not eps-regular: |X|=" << w->x.size() << " |Y|=" << w->y.size() << " d(X,Y)=" << w->density_xy
              << " d(A,B)=" << w->density_ab << '\n';
    holds = false;
  } else {
    std::cout << (args.exhaustive ? "eps-regular\n" : "no irregular pair found in samples\n");
  }
  if (args.d) {
    const tp::SuperRegularity s = tp::is_super_regular(g, a, b, args.eps, *args.d, mode);
    std::cout << (s.holds ? "super-regular" : "not super-regular: " + s.reason) << '\n';
    holds = holds && s.holds;
  }
  return holds ? 0 : 1;
}

int run_verify_stable(const std::string& graph_path, double alpha, double beta, const std::string& a_file) {
  const tp::Graph g = load_graph(graph_path);
  tp::StabilityReport report;
  if (!a_file.empty()) {
    const tp::VertexSet a = load_partition(a_file, g.n());
    report = tp::verify_stability(g, a, a.complement(), alpha, beta);
  } else if (auto found = tp::find_stable_partition(g, alpha, beta)) {
    report = found->report;
    std::cout << "witness from " << found->seed_rule << '\n';
  } else {
    std::cout << "no witness found\n";
    return 1;
  }
  std::cout << "|A|=" << report.size_a << " |B|=" << report.size_b << " cut min-degree " << report.cut_min_degree
            << " exceptional " << report.exceptional_a << "/" << report.exceptional_b << '\n';
  for (const auto& f : report.failures) std::cout << "  " << f << '\n';
  std::cout << (report.holds ? "stable" : "not stable") << '\n';
  return report.holds ? 0 : 1;
}

struct PackArgs {
  std::string graph;
  double p = 0.0;
  std::uint64_t seed = 1;
  std::string algo = "auto";
  std::string out;
  std::string a_file;
  std::string revealed_out;
};

int run_pack(const PackArgs& args) {
  const tp::Graph g = load_graph(args.graph);
  std::optional<tp::Bipartition> sides;
  if (!args.a_file.empty()) {
    const tp::VertexSet a = load_partition(args.a_file, g.n());
    sides = tp::Bipartition{a, a.complement()};
  }
  const tp::PackResult r = tp::pack_with(g, tp::parse_algorithm(args.algo), args.p, tp::Seed(args.seed), sides);
  if (args.out.empty() || args.out == "-") {
    tp::write_packing(std::cout, r.packing);
  } else {
    std::ofstream out(args.out);
    if (!out) throw std::invalid_argument("cannot write " + args.out);
    tp::write_packing(out, r.packing);
  }
  if (!args.revealed_out.empty()) {
    std::ofstream out(args.revealed_out);
    if (!out) throw std::invalid_argument("cannot write " + args.revealed_out);
    tp::write_edge_list(out, r.revealed);
  }
  std::cerr << "packed " << r.packing.size() << " of target " << r.target << '\n';
  for (const auto& note : r.notes) std::cerr << "  " << note << '\n';
  return 0;
}

int run_experiment(const std::string& config, const std::string& out) {
  tp::ExperimentConfig cfg = tp::load_config(config);
  if (!out.empty()) cfg.output = out;
  const tp::SweepResult r = tp::run_experiment(cfg);
  std::cout << "wrote " << cfg.output << ": " << r.rows.size() << " points, " << r.errors << " error records\n";
  for (const auto& rec : r.records) {
    if (!rec.error.empty()) std::cerr << rec.point << " seed " << rec.seed << ": " << rec.error << '\n';
  }
  return r.errors == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triangle packings in randomly perturbed graphs"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "write a model graph in edge-list format");
  generate->add_option("--model", gen.model, "gnp|bipartite|multipartite|k4cx|stable")
      ->required()
      ->check(CLI::IsMember({"gnp", "bipartite", "multipartite", "k4cx", "stable"}));
  generate->add_option("--n", gen.n, "vertex count");
  generate->add_option("--out", gen.out, "output graph file")->required();
  generate->add_option("--seed", gen.seed, "seed");
  generate->add_option("--p", gen.p, "gnp: edge probability");
  generate->add_option("--a", gen.a, "bipartite: |A|");
  generate->add_option("--parts", gen.parts, "multipartite: part sizes")->delimiter(',');
  generate->add_option("--m", gen.m, "k4cx: block size m");
  generate->add_option("--alpha", gen.alpha, "stable: alpha");
  generate->add_option("--beta", gen.beta, "stable: beta");
  generate->add_option("--defect", gen.defect, "stable: fraction of degraded A-vertices");
  generate->add_option("--a-out", gen.a_out, "write the A side as a partition file");

  auto* verify = app.add_subcommand("verify", "check packings, factors, regularity, stability");
  verify->require_subcommand(1);
  std::string graph_path, packing_path;
  auto* vpacking = verify->add_subcommand("packing", "exit 0 iff the packing is valid");
  vpacking->add_option("graph", graph_path)->required();
  vpacking->add_option("packing", packing_path)->required();
  std::string overlay_path;
  vpacking->add_option("--overlay", overlay_path, "check against the graph plus these edges");
  std::optional<std::uint64_t> steps;
  auto* vfactor = verify->add_subcommand("factor", "exact maximum packing size (small n)");
  vfactor->add_option("graph", graph_path)->required();
  vfactor->add_option("--steps", steps, "give up after this many search states");
  RegularArgs reg;
  auto* vregular = verify->add_subcommand("regular", "epsilon-regularity / super-regularity of a pair");
  vregular->add_option("graph", reg.graph)->required();
  vregular->add_option("--a", reg.a, "side A as lo:hi or a comma list")->required();
  vregular->add_option("--b", reg.b, "side B as lo:hi or a comma list")->required();
  vregular->add_option("--eps", reg.eps, "epsilon")->required();
  vregular->add_option("--d", reg.d, "also test super-regularity with density d");
  vregular->add_flag("--exhaustive", reg.exhaustive, "exact check (at most 16 per side)");
  vregular->add_option("--trials", reg.trials, "sampled mode: subset pairs");
  vregular->add_option("--seed", reg.seed, "sampled mode: seed");
  double alpha = 1.0 / 3.0, beta = 0.05;
  std::string a_file;
  auto* vstable = verify->add_subcommand("stable", "(alpha, beta)-stability");
  vstable->add_option("graph", graph_path)->required();
  vstable->add_option("--alpha", alpha)->required();
  vstable->add_option("--beta", beta)->required();
  vstable->add_option("--a-file", a_file, "partition file; searched for when absent");

  PackArgs pk;
  auto* pack = app.add_subcommand("pack", "pack triangles in g plus a random overlay");
  pack->add_option("--graph", pk.graph)->required();
  pack->add_option("--p", pk.p, "overlay edge probability")->required();
  pack->add_option("--seed", pk.seed);
  pack->add_option("--algo", pk.algo)
      ->check(CLI::IsMember({"auto", "sublinear", "extremal", "roundgreedy", "cherry", "pair", "greedy"}));
  pack->add_option("--out", pk.out, "packing file (default stdout)");
  pack->add_option("--a-file", pk.a_file, "partition for extremal/cherry/pair");
  pack->add_option("--revealed-out", pk.revealed_out, "write the revealed random edges");

  std::string config, out;
  auto* experiment = app.add_subcommand("experiment", "Monte Carlo sweep from a JSON config");
  experiment->add_option("--config", config)->required();
  experiment->add_option("--out", out, "CSV path (overrides the config); JSON mirror beside it");

  std::size_t k4_n = 2080, k4_m = 40, k4_trials = 20;
  double k4_exp = -2.0 / 3.0 + 0.02;
  std::uint64_t k4_seed = 1;
  auto* k4 = app.add_subcommand("k4-deficit", "K4 counts inside B of the K4 counterexample plus G(n,p)");
  k4->add_option("--n", k4_n);
  k4->add_option("--m", k4_m);
  k4->add_option("--exponent", k4_exp, "p = n^exponent");
  k4->add_option("--trials", k4_trials);
  k4->add_option("--seed", k4_seed);

  std::size_t mt_n = 500, mt_trials = 20;
  double mt_delta = 0.75;
  std::vector<double> mt_c{3.0};
  std::uint64_t mt_seed = 1;
  std::string mt_out;
  auto* mt = app.add_subcommand("matching-threshold", "perfect matchings in random subgraphs of dense bipartite hosts");
  mt->add_option("--n", mt_n, "side size N");
  mt->add_option("--delta", mt_delta, "host degree fraction");
  mt->add_option("--C", mt_c, "p = C ln N / N")->delimiter(',');
  mt->add_option("--trials", mt_trials);
  mt->add_option("--seed", mt_seed);
  mt->add_option("--out", mt_out, "CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) return run_generate(gen);
    if (*vpacking) return run_verify_packing(graph_path, packing_path, overlay_path);
    if (*vfactor) return run_verify_factor(graph_path, steps);
    if (*vregular) return run_verify_regular(reg);
    if (*vstable) return run_verify_stable(graph_path, alpha, beta, a_file);
    if (*pack) return run_pack(pk);
    if (*experiment) return run_experiment(config, out);
    if (*k4) {
      const double p = std::pow(static_cast<double>(k4_n), k4_exp);
      const tp::K4DeficitSummary s = tp::k4_deficit_experiment(k4_n, k4_m, p, k4_trials, k4_seed);
      std::cout << "p=" << p << " below_m=" << s.below_m << "/" << s.trials << " fraction=" << s.fraction << '\n';
      std::cout << "counts";
      for (auto c : s.counts) std::cout << ' ' << c;
      std::cout << '\n';
      return 0;
    }
    if (*mt) {
      const auto rows = tp::matching_threshold_experiment(mt_n, mt_delta, mt_c, mt_trials, mt_seed);
      if (mt_out.empty()) {
        tp::write_matching_csv(std::cout, rows);
      } else {
        std::ofstream f(mt_out);
        if (!f) throw std::invalid_argument("cannot write " + mt_out);
        tp::write_matching_csv(f, rows);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
