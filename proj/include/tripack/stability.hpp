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

// (alpha, beta)-stability of a vertex partition (A, B):
//   |A| within (alpha +- beta) n and |B| within (1 - alpha +- beta) n,
//   every vertex has at least alpha n / 4 neighbours across the cut,
//   at most beta n vertices of A have fewer than |B| - beta n neighbours in B,
//   at most beta n vertices of B have fewer than |A| - beta n neighbours in A.
// For alpha > 0 both sides must also be nonempty.

#ifndef TRIPACK_STABILITY_HPP_
#define TRIPACK_STABILITY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tripack/graph.hpp"

namespace tripack {

struct StabilityReport {
  bool holds = false;
  VertexSet a;
  VertexSet b;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  double size_a_low = 0, size_a_high = 0;
  double size_b_low = 0, size_b_high = 0;
  std::size_t cut_min_degree = 0;
  double cut_degree_floor = 0;
  std::size_t exceptional_a = 0;
  std::size_t exceptional_b = 0;
  double exception_budget = 0;
  std::vector<std::string> failures;
};

StabilityReport verify_stability(const Graph& g, const VertexSet& a, const VertexSet& b,
                                 double alpha, double beta);

struct StablePartition {
  VertexSet a;
  VertexSet b;
  StabilityReport report;
  std::string seed_rule;  // which candidate produced the witness
};

// One-sided: returns a partition only when verify_stability accepts it.
std::optional<StablePartition> find_stable_partition(const Graph& g, double alpha, double beta);

}  // namespace tripack

#endif  // TRIPACK_STABILITY_HPP_
