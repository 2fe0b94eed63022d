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

#include "tripack/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "tripack/generators.hpp"
#include "tripack/oracle.hpp"
#include "tripack/stability.hpp"

namespace tripack {
namespace {

using nlohmann::json;

constexpr std::uint64_t kModelTag = 0x6d6f64;     // "mod"
constexpr std::uint64_t kWitnessTag = 0x777473;   // "wts"
constexpr std::uint64_t kAlgoTag = 0x616c67;      // "alg"

std::size_t default_target(const Graph& g) {
  return g.n() == 0 ? 0 : std::min(g.min_degree(), g.n() / 3);
}

std::string json_path_for(const std::string& csv_path) {
  const auto dot = csv_path.find_last_of('.');
  const auto slash = csv_path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return csv_path + ".json";
  }
  return csv_path.substr(0, dot) + ".json";
}

}  // namespace

const char* to_string(ProbabilityRule rule) {
  switch (rule) {
    case ProbabilityRule::logn_over_n: return "logn_over_n";
    case ProbabilityRule::one_over_n: return "one_over_n";
    case ProbabilityRule::fixed: return "fixed";
  }
  return "unknown";
}

const char* to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::automatic: return "auto";
    case Algorithm::sublinear: return "sublinear";
    case Algorithm::extremal: return "extremal";
    case Algorithm::roundgreedy: return "roundgreedy";
    case Algorithm::cherry: return "cherry";
    case Algorithm::pair: return "pair";
    case Algorithm::greedy: return "greedy";
  }
  return "unknown";
}

ProbabilityRule parse_rule(const std::string& name) {
  for (auto r : {ProbabilityRule::logn_over_n, ProbabilityRule::one_over_n, ProbabilityRule::fixed}) {
    if (name == to_string(r)) return r;
  }
  throw std::invalid_argument("unknown probability rule '" + name + "'");
}

Algorithm parse_algorithm(const std::string& name) {
  for (auto a : {Algorithm::automatic, Algorithm::sublinear, Algorithm::extremal,
                 Algorithm::roundgreedy, Algorithm::cherry, Algorithm::pair, Algorithm::greedy}) {
    if (name == to_string(a)) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

double edge_probability(ProbabilityRule rule, double c, std::size_t n) {
  if (!(c >= 0.0)) throw std::invalid_argument("edge_probability: C must be non-negative");
  double p = c;
  const auto nd = static_cast<double>(n);
  if (rule == ProbabilityRule::logn_over_n) p = n < 2 ? 1.0 : c * std::log(nd) / nd;
  if (rule == ProbabilityRule::one_over_n) p = n == 0 ? 1.0 : c / nd;
  return std::clamp(p, 0.0, 1.0);
}

ModelInstance make_model(const ModelSpec& spec, std::size_t n, Seed seed) {
  const Seed s = seed.derive(kModelTag);
  if (spec.name == "complete_bipartite") {
    const auto a = static_cast<std::size_t>(std::llround(spec.a_fraction * static_cast<double>(n)));
    if (a == 0 || a >= n - a) {
      throw std::invalid_argument("complete_bipartite model: need 0 < |A| < |B|");
    }
    ModelInstance out{complete_bipartite(a, n), {}};
    out.sides = Bipartition{VertexSet::range(n, 0, static_cast<Vertex>(a)),
                            VertexSet::range(n, static_cast<Vertex>(a), static_cast<Vertex>(n))};
    return out;
  }
  if (spec.name == "gnp") return {gnp(n, spec.edge_p, s), std::nullopt};
  if (spec.name == "complete") return {complete_graph(n), std::nullopt};
  if (spec.name == "multipartite") {
    if (spec.parts == 0) throw std::invalid_argument("multipartite model: parts must be positive");
    std::vector<std::size_t> sizes(spec.parts, n / spec.parts);
    for (std::size_t i = 0; i < n % spec.parts; ++i) ++sizes[i];
    return {complete_multipartite(sizes), std::nullopt};
  }
  if (spec.name == "k4cx") {
    K4Counterexample cx = k4_counterexample(n, spec.block);
    return {std::move(cx.graph), Bipartition{cx.a, cx.b}};
  }
  if (spec.name == "stable") {
    StableModel sm = stable_model(n, spec.alpha, spec.beta, spec.defect, s);
    return {std::move(sm.graph), Bipartition{sm.a, sm.b}};
  }
  if (spec.name == "bicliques") {
    if (spec.side == 0 || n % (2 * spec.side) != 0) {
      throw std::invalid_argument("bicliques model: n must be a multiple of 2*side");
    }
    return {disjoint_bicliques(n / (2 * spec.side), spec.side), std::nullopt};
  }
  throw std::invalid_argument("unknown model '" + spec.name + "'");
}

ExperimentConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
  ExperimentConfig cfg;
  try {
    if (j.contains("model")) {
      const json& m = j.at("model");
      cfg.model.name = m.value("name", cfg.model.name);
      cfg.model.a_fraction = m.value("a_fraction", cfg.model.a_fraction);
      cfg.model.edge_p = m.value("edge_p", cfg.model.edge_p);
      cfg.model.parts = m.value("parts", cfg.model.parts);
      cfg.model.block = m.value("m", cfg.model.block);
      cfg.model.alpha = m.value("alpha", cfg.model.alpha);
      cfg.model.beta = m.value("beta", cfg.model.beta);
      cfg.model.defect = m.value("defect", cfg.model.defect);
      cfg.model.side = m.value("side", cfg.model.side);
    }
    cfg.sizes = j.at("n").get<std::vector<std::size_t>>();
    cfg.rule = parse_rule(j.value("rule", std::string("logn_over_n")));
    cfg.c_values = j.at("C").get<std::vector<double>>();
    cfg.trials = j.value("trials", cfg.trials);
    cfg.base_seed = j.value("seed", cfg.base_seed);
    cfg.algorithm = parse_algorithm(j.value("algorithm", std::string("auto")));
    if (j.contains("target")) {
      const json& t = j.at("target");
      cfg.target = t.is_number_unsigned() ? std::to_string(t.get<std::size_t>()) : t.get<std::string>();
    }
    cfg.certificate = j.value("certificate", false);
    cfg.output = j.value("output", std::string());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (cfg.trials == 0) throw std::invalid_argument("config: trials must be >= 1");
  if (cfg.sizes.empty() || cfg.c_values.empty()) {
    throw std::invalid_argument("config: n and C must be nonempty");
  }
  for (double c : cfg.c_values) {
    if (!(c >= 0.0)) throw std::invalid_argument("config: every C must be >= 0");
  }
  if (cfg.target != "auto" && cfg.target != "factor" &&
      cfg.target.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("config: target must be auto, factor or a count");
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return config_from_json(text.str());
}

PackResult pack_with(const Graph& g, Algorithm algorithm, double p, Seed seed,
                     const std::optional<Bipartition>& sides) {
  const std::size_t n = g.n();
  const std::size_t m = default_target(g);
  auto cut = [&]() {
    if (sides) {
      Bipartition s = *sides;
      if (s.a.size() > s.b.size()) std::swap(s.a, s.b);
      return s;
    }
    return max_cut_bipartition(g);
  };
  switch (algorithm) {
    case Algorithm::automatic:
      return perturbed_pack(g, p, seed);
    case Algorithm::sublinear:
      return sublinear_pack(g, m, p, seed);
    case Algorithm::roundgreedy:
      return round_greedy_triangles(g, m, p, seed);
    case Algorithm::greedy: {
      PackResult r;
      r.target = m;
      r.revealed = gnp(n, p, seed.derive(kAlgoTag));
      r.packing = greedy_triangle_packing(graph_union(g, r.revealed));
      return r;
    }
    case Algorithm::extremal: {
      if (n == 0 || m == 0) {
        PackResult r;
        r.revealed = Graph(n);
        return r;
      }
      const double alpha = static_cast<double>(m) / static_cast<double>(n);
      const double beta = 0.05;
      if (sides) {
        Bipartition s = cut();
        return extremal_pack(g, s.a, s.b, alpha, beta, p, seed);
      }
      const auto part = find_stable_partition(g, alpha, beta);
      if (!part) throw std::invalid_argument("extremal: no stable partition found");
      return extremal_pack(g, part->a, part->b, alpha, beta, p, seed);
    }
    case Algorithm::cherry: {
      const Bipartition s = cut();
      if (s.b.size() != 2 * s.a.size()) {
        throw std::invalid_argument("cherry: need a bipartition with |B| = 2|A|");
      }
      std::vector<Vertex> rest = s.b.to_vector();
      Stream stream(seed.derive(kAlgoTag, 1));
      stream.shuffle(rest);
      const auto half = static_cast<std::ptrdiff_t>(rest.size() / 2);
      const Cherry cherry{VertexSet::of(n, std::vector<Vertex>(rest.begin(), rest.begin() + half)),
                          s.a,
                          VertexSet::of(n, std::vector<Vertex>(rest.begin() + half, rest.end()))};
      return cherry_factor(g, cherry, p, CherryMode::balanced, seed);
    }
    case Algorithm::pair: {
      const Bipartition s = cut();
      return pair_factor(g, s.a, s.b, p, seed);
    }
  }
  throw std::logic_error("pack_with: unhandled algorithm");
}

FailureWitness failure_certificate(const Graph& g, const Graph& overlay, const VertexSet& a,
                                   const VertexSet& b) {
  const std::size_t n = g.n();
  if (overlay.n() != n || a.universe() != n || b.universe() != n) {
    throw std::invalid_argument("failure_certificate: size mismatch");
  }
  if (a.intersects(b)) throw std::invalid_argument("failure_certificate: sides overlap");
  if (b.size() != 2 * a.size()) throw std::invalid_argument("failure_certificate: need |b| = 2|a|");
  if (edges_within(g, a) != 0 || edges_within(g, b) != 0) {
    throw std::invalid_argument("failure_certificate: a and b must be independent in g");
  }
  if (edges_between(g, a, b) != a.size() * b.size()) {
    throw std::invalid_argument("failure_certificate: every a-b pair must be an edge");
  }
  FailureWitness w;
  b.for_each([&](Vertex v) {
    if (!overlay.neighbors(v).intersects(b)) ++w.isolated_in_b;
  });
  w.triangles_in_b = count_triangles(overlay, b);
  w.certified = w.isolated_in_b > w.triangles_in_b;
  return w;
}

TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t n, double c, std::uint64_t seed) {
  TrialRecord rec;
  std::ostringstream point;
  point << "n=" << n << ",C=" << c;
  rec.point = point.str();
  rec.n = n;
  rec.c = c;
  rec.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    rec.p = edge_probability(cfg.rule, c, n);
    const Seed s(seed);
    const ModelInstance model = make_model(cfg.model, n, s);
    const Graph& g = model.graph;
    if (cfg.target == "auto") {
      rec.target = default_target(g);
    } else if (cfg.target == "factor") {
      rec.target = n / 3;
    } else {
      rec.target = static_cast<std::size_t>(std::stoull(cfg.target));
    }
    const PackResult result = pack_with(g, cfg.algorithm, rec.p, s, model.sides);
    if (auto err = packing_error(graph_union(g, result.revealed), result.packing)) {
      throw std::logic_error("packing failed validation: " + *err);
    }
    rec.size = result.packing.size();
    rec.success = rec.size >= rec.target;
    if (cfg.certificate) {
      if (!model.sides) throw std::invalid_argument("certificate needs a model with known sides");
      const Graph overlay = gnp(n, rec.p, s.derive(kWitnessTag));
      rec.witness = failure_certificate(g, overlay, model.sides->a, model.sides->b);
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
    rec.success = false;
  }
  rec.duration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::size_t worker_count() {
  if (const char* env = std::getenv("TRIPACK_WORKERS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1;
}

void write_csv_header(std::ostream& out, const ExperimentConfig& cfg) {
  out << "# rule=" << to_string(cfg.rule) << " model=" << cfg.model.name
      << " algorithm=" << to_string(cfg.algorithm) << '\n';
  out << "C,n,trials,successes,success_rate,mean_size\n";
}

void write_csv_row(std::ostream& out, const SweepRow& row) {
  out << row.c << ',' << row.n << ',' << row.trials << ',' << row.successes << ','
      << std::setprecision(6) << row.success_rate << ',' << row.mean_size << '\n';
  out.flush();
}

SweepResult sweep(const ExperimentConfig& cfg, std::ostream* csv) {
  std::vector<std::size_t> sizes = cfg.sizes;
  std::vector<double> cs = cfg.c_values;
  std::sort(sizes.begin(), sizes.end());
  std::sort(cs.begin(), cs.end());
  SweepResult out;
  if (csv != nullptr) write_csv_header(*csv, cfg);
  const std::size_t workers = std::max<std::size_t>(1, std::min(worker_count(), cfg.trials));
  for (std::size_t n : sizes) {
    for (double c : cs) {
      std::vector<TrialRecord> records(cfg.trials);
      std::atomic<std::size_t> next{0};
      auto work = [&]() {
        for (std::size_t t = next++; t < cfg.trials; t = next++) {
          records[t] = run_trial(cfg, n, c, cfg.base_seed + t);
        }
      };
      std::vector<std::thread> pool;
      for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(work);
      work();
      for (auto& th : pool) th.join();

      SweepRow row{c, n, cfg.trials, 0, 0.0, 0.0};
      for (const TrialRecord& r : records) {
        row.successes += r.success ? 1 : 0;
        row.mean_size += static_cast<double>(r.size);
        if (!r.error.empty()) ++out.errors;
      }
      row.success_rate = static_cast<double>(row.successes) / static_cast<double>(cfg.trials);
      row.mean_size /= static_cast<double>(cfg.trials);
      if (csv != nullptr) write_csv_row(*csv, row);
      out.rows.push_back(row);
      out.records.insert(out.records.end(), records.begin(), records.end());
    }
  }
  return out;
}

std::string records_to_json(const ExperimentConfig& cfg, const SweepResult& result) {
  json j;
  j["rule"] = to_string(cfg.rule);
  j["model"] = cfg.model.name;
  j["algorithm"] = to_string(cfg.algorithm);
  j["errors"] = result.errors;
  json records = json::array();
  for (const TrialRecord& r : result.records) {
    json t{{"point", r.point}, {"n", r.n},         {"C", r.c},
           {"p", r.p},         {"seed", r.seed},   {"size", r.size},
           {"target", r.target}, {"success", r.success}, {"duration_ms", r.duration_ms}};
    if (r.witness) {
      t["witness"] = {{"isolated_in_b", r.witness->isolated_in_b},
                      {"triangles_in_b", r.witness->triangles_in_b},
                      {"certified", r.witness->certified}};
    }
    if (!r.error.empty()) t["error"] = r.error;
    records.push_back(std::move(t));
  }
  j["records"] = std::move(records);
  return j.dump(2);
}

SweepResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.output.empty()) throw std::invalid_argument("experiment: no output path");
  std::ofstream csv(cfg.output);
  if (!csv) throw std::runtime_error("cannot write " + cfg.output);
  SweepResult result = sweep(cfg, &csv);
  const std::string json_path = json_path_for(cfg.output);
  std::ofstream mirror(json_path);
  if (!mirror) throw std::runtime_error("cannot write " + json_path);
  mirror << records_to_json(cfg, result) << '\n';
  return result;
}

K4DeficitSummary k4_deficit_experiment(std::size_t n, std::size_t m, double p, std::size_t trials,
                                       std::uint64_t seed) {
  const K4Counterexample cx = k4_counterexample(n, m);
  K4DeficitSummary out;
  out.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const Graph overlay = gnp_within(cx.b, p, Seed(seed + t));
    const std::uint64_t count = count_k4(graph_union(cx.graph, overlay), cx.b);
    out.counts.push_back(count);
    if (count < m) ++out.below_m;
  }
  out.fraction = trials == 0 ? 0.0 : static_cast<double>(out.below_m) / static_cast<double>(trials);
  return out;
}

std::vector<MatchingRow> matching_threshold_experiment(std::size_t n_side, double delta_frac,
                                                       const std::vector<double>& c_values,
                                                       std::size_t trials, std::uint64_t seed) {
  if (!(delta_frac > 0.5 && delta_frac <= 1.0)) {
    throw std::invalid_argument("matching_threshold_experiment: delta_frac must lie in (1/2, 1]");
  }
  const VertexSet left = VertexSet::range(2 * n_side, 0, static_cast<Vertex>(n_side));
  const VertexSet right = left.complement();
  std::vector<MatchingRow> rows;
  for (double c : c_values) {
    MatchingRow row{c, n_side, trials, 0, 0.0};
    const double p = edge_probability(ProbabilityRule::logn_over_n, c, n_side);
    for (std::size_t t = 0; t < trials; ++t) {
      const Seed s(seed + t);
      const Graph host = regular_bipartite(n_side, delta_frac, s);
      const Graph kept = random_subgraph(host, p, s.derive(kAlgoTag, 2));
      if (max_bipartite_matching(kept, left, right).size() == n_side) ++row.perfect;
    }
    row.rate = trials == 0 ? 0.0 : static_cast<double>(row.perfect) / static_cast<double>(trials);
    rows.push_back(row);
  }
  return rows;
}

void write_matching_csv(std::ostream& out, const std::vector<MatchingRow>& rows) {
  out << "C,N,trials,perfect,rate\n";
  for (const MatchingRow& r : rows) {
    out << r.c << ',' << r.n_side << ',' << r.trials << ',' << r.perfect << ',' << r.rate << '\n';
  }
}

}  // namespace tripack
