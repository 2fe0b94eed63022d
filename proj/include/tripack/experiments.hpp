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

// Monte Carlo harness.
//
// A sweep visits every (n, C) point of a config in (n, C) order and runs
// `trials` independent trials with seeds base_seed + t. Output CSV:
//
//   # rule=<rule> model=<model> algorithm=<algorithm>
//   C,n,trials,successes,success_rate,mean_size
//
// The JSON mirror holds every TrialRecord. Worker threads are taken from
// TRIPACK_WORKERS (default 1).

#ifndef TRIPACK_EXPERIMENTS_HPP_
#define TRIPACK_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tripack/graph.hpp"
#include "tripack/packing.hpp"
#include "tripack/rng.hpp"

namespace tripack {

enum class ProbabilityRule { logn_over_n, one_over_n, fixed };
enum class Algorithm { automatic, sublinear, extremal, roundgreedy, cherry, pair, greedy };

const char* to_string(ProbabilityRule rule);
const char* to_string(Algorithm algorithm);
ProbabilityRule parse_rule(const std::string& name);
Algorithm parse_algorithm(const std::string& name);

// p for a point; clamped to [0,1].
double edge_probability(ProbabilityRule rule, double c, std::size_t n);

struct ModelSpec {
  // complete_bipartite | gnp | complete | multipartite | k4cx | stable | bicliques
  std::string name = "complete_bipartite";
  double a_fraction = 1.0 / 3.0;  // complete_bipartite: |A| = round(a_fraction n)
  double edge_p = 0.5;            // gnp
  std::size_t parts = 3;          // multipartite: near-equal parts
  std::size_t block = 40;         // k4cx: m
  double alpha = 1.0 / 3.0;       // stable
  double beta = 0.05;             // stable
  double defect = 0.0;            // stable
  std::size_t side = 64;          // bicliques: n / (2 side) copies of K_{side,side}
};

struct ModelInstance {
  Graph graph;
  std::optional<Bipartition> sides;  // known (A, B) for bipartite-type models
};

ModelInstance make_model(const ModelSpec& spec, std::size_t n, Seed seed);

struct ExperimentConfig {
  ModelSpec model;
  std::vector<std::size_t> sizes;  // n values
  ProbabilityRule rule = ProbabilityRule::logn_over_n;
  std::vector<double> c_values;
  std::size_t trials = 10;
  std::uint64_t base_seed = 1;
  Algorithm algorithm = Algorithm::automatic;
  // "auto" (min(delta, floor(n/3))), "factor" (floor(n/3)) or a number.
  std::string target = "auto";
  bool certificate = false;  // record a FailureWitness per trial
  std::string output;        // CSV path; the JSON mirror replaces the extension
};

// Throws std::invalid_argument on schema violations.
ExperimentConfig config_from_json(const std::string& text);
ExperimentConfig load_config(const std::string& path);

// Runs the selected algorithm. `sides` supplies the partition for extremal,
// cherry and pair; without it, extremal searches for a stable partition and
// cherry/pair use the max-cut bipartition.
PackResult pack_with(const Graph& g, Algorithm algorithm, double p, Seed seed,
                     const std::optional<Bipartition>& sides = std::nullopt);

struct FailureWitness {
  std::size_t isolated_in_b = 0;        // B-vertices with no overlay neighbour in B
  std::uint64_t triangles_in_b = 0;     // overlay triangles inside B
  bool certified = false;               // isolated_in_b > triangles_in_b
};

// Requires a, b independent in g, every a-b pair an edge, |b| = 2|a|.
FailureWitness failure_certificate(const Graph& g, const Graph& overlay, const VertexSet& a,
                                   const VertexSet& b);

struct TrialRecord {
  std::string point;  // "n=<n>,C=<C>"
  std::size_t n = 0;
  double c = 0.0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::size_t size = 0;
  std::size_t target = 0;
  bool success = false;
  std::optional<FailureWitness> witness;
  double duration_ms = 0.0;
  std::string error;  // nonempty marks an error record
};

TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t n, double c, std::uint64_t seed);

struct SweepRow {
  double c = 0.0;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double success_rate = 0.0;
  double mean_size = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<TrialRecord> records;
  std::size_t errors = 0;
};

std::size_t worker_count();

// Streams CSV rows to `csv` as points finish (may be null).
SweepResult sweep(const ExperimentConfig& cfg, std::ostream* csv = nullptr);

void write_csv_header(std::ostream& out, const ExperimentConfig& cfg);
void write_csv_row(std::ostream& out, const SweepRow& row);
std::string records_to_json(const ExperimentConfig& cfg, const SweepResult& result);

// Sweeps cfg into cfg.output and its JSON mirror; returns the result.
SweepResult run_experiment(const ExperimentConfig& cfg);

struct K4DeficitSummary {
  std::size_t trials = 0;
  std::size_t below_m = 0;  // trials whose K4 count inside B is < m
  double fraction = 0.0;
  std::vector<std::uint64_t> counts;
};

K4DeficitSummary k4_deficit_experiment(std::size_t n, std::size_t m, double p, std::size_t trials,
                                       std::uint64_t seed);

struct MatchingRow {
  double c = 0.0;
  std::size_t n_side = 0;
  std::size_t trials = 0;
  std::size_t perfect = 0;
  double rate = 0.0;
};

std::vector<MatchingRow> matching_threshold_experiment(std::size_t n_side, double delta_frac,
                                                       const std::vector<double>& c_values,
                                                       std::size_t trials, std::uint64_t seed);

void write_matching_csv(std::ostream& out, const std::vector<MatchingRow>& rows);

}  // namespace tripack

#endif  // TRIPACK_EXPERIMENTS_HPP_
