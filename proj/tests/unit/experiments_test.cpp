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


#include <cstdlib>
#include <fstream>
#include <sstream>

#include "../support/fixtures.hpp"
#include "doctest.h"
#include "json.hpp"
#include "tripack/experiments.hpp"
#include "tripack/generators.hpp"
#include "tripack/oracle.hpp"

using namespace tripack;

namespace {

ExperimentConfig point(const std::string& model, std::size_t n, double c, std::size_t trials) {
  ExperimentConfig cfg;
  cfg.model.name = model;
  cfg.sizes = {n};
  cfg.rule = ProbabilityRule::fixed;
  cfg.c_values = {c};
  cfg.trials = trials;
  return cfg;
}

}  // namespace

TEST_CASE("probability rules") {
  CHECK(edge_probability(ProbabilityRule::fixed, 0.25, 100) == 0.25);
  CHECK(edge_probability(ProbabilityRule::one_over_n, 5, 100) == doctest::Approx(0.05));
  CHECK(edge_probability(ProbabilityRule::logn_over_n, 2, 100) == doctest::Approx(2 * std::log(100.0) / 100));
  CHECK(edge_probability(ProbabilityRule::fixed, 3, 100) == 1.0);
  CHECK_THROWS_AS(edge_probability(ProbabilityRule::fixed, -1, 100), std::invalid_argument);
  CHECK(parse_rule("one_over_n") == ProbabilityRule::one_over_n);
  CHECK(parse_algorithm("roundgreedy") == Algorithm::roundgreedy);
  CHECK_THROWS_AS(parse_algorithm("magic"), std::invalid_argument);
}

TEST_CASE("config parsing") {
  const ExperimentConfig cfg = config_from_json(R"({
    "model": {"name": "complete_bipartite", "a_fraction": 0.25},
    "n": [60, 120], "rule": "one_over_n", "C": [1, 2.5], "trials": 4,
    "seed": 9, "algorithm": "extremal", "target": 10, "certificate": true, "output": "x.csv"})");
  CHECK(cfg.model.a_fraction == 0.25);
  CHECK(cfg.sizes == std::vector<std::size_t>{60, 120});
  CHECK(cfg.rule == ProbabilityRule::one_over_n);
  CHECK(cfg.c_values == std::vector<double>{1.0, 2.5});
  CHECK(cfg.trials == 4);
  CHECK(cfg.base_seed == 9);
  CHECK(cfg.algorithm == Algorithm::extremal);
  CHECK(cfg.target == "10");
  CHECK(cfg.certificate);
  CHECK_THROWS_AS(config_from_json(R"({"C": [1]})"), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(R"({"n": [10], "C": [1], "rule": "sqrt"})"), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json("not json"), std::invalid_argument);
}

TEST_CASE("trial outcomes") {
  const TrialRecord full = run_trial(point("complete", 30, 1.0, 1), 30, 1.0, 3);
  CHECK(full.error.empty());
  CHECK(full.success);
  CHECK(full.size == 10);
  const TrialRecord none = run_trial(point("complete_bipartite", 30, 0.0, 1), 30, 0.0, 3);
  CHECK_FALSE(none.success);
  CHECK(none.size == 0);
  CHECK(none.target >= 1);
}

TEST_CASE("trials are deterministic") {
  ExperimentConfig cfg = point("complete_bipartite", 60, 0.2, 1);
  cfg.certificate = true;
  const TrialRecord a = run_trial(cfg, 60, 0.2, 17);
  const TrialRecord b = run_trial(cfg, 60, 0.2, 17);
  CHECK(a.point == b.point);
  CHECK(a.p == b.p);
  CHECK(a.size == b.size);
  CHECK(a.target == b.target);
  CHECK(a.success == b.success);
  REQUIRE(a.witness);
  REQUIRE(b.witness);
  CHECK(a.witness->isolated_in_b == b.witness->isolated_in_b);
  CHECK(a.witness->triangles_in_b == b.witness->triangles_in_b);
}

TEST_CASE("sweep rates and CSV layout") {
  const SweepResult ones = sweep(point("complete", 30, 1.0, 5));
  REQUIRE(ones.rows.size() == 1);
  CHECK(ones.rows[0].success_rate == 1.0);
  CHECK(sweep(point("complete_bipartite", 30, 0.0, 5)).rows[0].success_rate == 0.0);

  ExperimentConfig cfg = point("complete_bipartite", 60, 0.0, 3);
  cfg.c_values = {1.0, 0.0};
  cfg.sizes = {60, 30};
  std::ostringstream csv;
  const SweepResult r = sweep(cfg, &csv);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "# rule=fixed model=complete_bipartite algorithm=auto");
  std::getline(lines, line);
  CHECK(line == "C,n,trials,successes,success_rate,mean_size");
  std::size_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 4);
  CHECK(r.rows.size() == 4);
  CHECK(r.rows[0].n == 30);
  CHECK(r.rows[0].c == 0.0);

  const auto j = nlohmann::json::parse(records_to_json(cfg, r));
  CHECK(j.at("records").size() == 12);
}

TEST_CASE("worker count does not change results") {
  ExperimentConfig cfg = point("complete_bipartite", 90, 0.1, 6);
  ::setenv("TRIPACK_WORKERS", "1", 1);
  const SweepResult one = sweep(cfg);
  ::setenv("TRIPACK_WORKERS", "4", 1);
  const SweepResult four = sweep(cfg);
  ::unsetenv("TRIPACK_WORKERS");
  REQUIRE(one.records.size() == four.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    CHECK(one.records[i].size == four.records[i].size);
    CHECK(one.records[i].seed == four.records[i].seed);
  }
}

TEST_CASE("failure certificate") {
  const Graph g = complete_bipartite(3, 9);
  const VertexSet a = VertexSet::range(9, 0, 3);
  const VertexSet b = a.complement();
  const FailureWitness empty = failure_certificate(g, Graph(9), a, b);
  CHECK(empty.isolated_in_b == 6);
  CHECK(empty.triangles_in_b == 0);
  CHECK(empty.certified);
  const FailureWitness dense = failure_certificate(g, gnp_within(b, 1.0, Seed(1)), a, b);
  CHECK(dense.isolated_in_b == 0);
  CHECK_FALSE(dense.certified);
  CHECK_THROWS_AS(failure_certificate(g, Graph(9), a, VertexSet::range(9, 3, 8)), std::invalid_argument);

  // A fired certificate means no triangle factor exists.
  std::size_t fired = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Graph overlay = gnp(9, 0.25, Seed(s));
    const FailureWitness w = failure_certificate(g, overlay, a, b);
    if (!w.certified) continue;
    ++fired;
    CHECK(max_triangle_packing_exact(graph_union(g, overlay)).packing.size() < 3);
  }
  CHECK(fired > 0);
}

TEST_CASE("k4 deficit extremes") {
  const auto zero = k4_deficit_experiment(160, 8, 0.0, 3, 1);
  CHECK(zero.below_m == 3);
  for (auto c : zero.counts) CHECK(c == 0);
  const auto one = k4_deficit_experiment(160, 8, 1.0, 2, 1);
  CHECK(one.below_m == 0);
}

TEST_CASE("matching threshold extremes") {
  std::ostringstream header;
  write_csv_header(header, ExperimentConfig{});
  CHECK(header.str().rfind("# rule=logn_over_n", 0) == 0);
  const auto rows = matching_threshold_experiment(40, 0.75, {1e9, 0.0}, 3, 1);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].rate == 1.0);
  CHECK(rows[1].rate == 0.0);
  std::ostringstream out;
  write_matching_csv(out, rows);
  CHECK(out.str().rfind("C,N,trials,perfect,rate\n", 0) == 0);
}

TEST_CASE("models") {
  const ModelInstance kb = make_model(ModelSpec{}, 90, Seed(1));
  REQUIRE(kb.sides);
  CHECK(kb.sides->a.size() == 30);
  CHECK(kb.graph.edge_count() == 30 * 60);
  ModelSpec k4;
  k4.name = "k4cx";
  k4.block = 8;
  CHECK(make_model(k4, 160, Seed(1)).graph.min_degree() == 40);
  ModelSpec bad;
  bad.name = "nope";
  CHECK_THROWS_AS(make_model(bad, 10, Seed(1)), std::invalid_argument);
}
