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

// Deterministic graph families and random overlays.
//
// Random pairs are sampled row by row: row u owns the stream keyed by
// (seed, u) and walks its candidate partners in increasing order with
// geometric skips. Output is bit-exact for a given seed and independent of
// the order in which rows are processed.

#ifndef TRIPACK_GENERATORS_HPP_
#define TRIPACK_GENERATORS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "tripack/graph.hpp"
#include "tripack/rng.hpp"

namespace tripack {

Graph gnp(std::size_t n, double p, Seed seed);

// The pairs of `members` kept by G(n,p): row members[i] decides its pairs
// with members[i+1..] from its own stream, so the result depends only on the
// seed and each row's later members.
std::vector<Edge> sample_edges_within(std::span<const Vertex> members, double p, Seed seed);

// G(n,p) restricted to pairs inside s; universe is s.universe().
Graph gnp_within(const VertexSet& s, double p, Seed seed);

// Keeps each edge of base independently with probability p; row u decides
// its edges to higher-indexed neighbours.
Graph random_subgraph(const Graph& base, double p, Seed seed);

// Each a-b pair independently with probability p. a and b must be disjoint.
Graph random_bipartite(const VertexSet& a, const VertexSet& b, double p, Seed seed);

// Sides {0..m-1} and {m..n-1}; requires m < n.
Graph complete_bipartite(std::size_t m, std::size_t n);

// Consecutive parts of the given sizes.
Graph complete_multipartite(const std::vector<std::size_t>& sizes);

Graph complete_graph(std::size_t n);

// `count` vertex-disjoint copies of K_{side,side}.
Graph disjoint_bicliques(std::size_t count, std::size_t side);

// A = {0..n/4-m-1} independent, B = the rest split into disjoint K_{m,m}
// blocks, every A-B pair adjacent. Requires 4 | n and 2m | |B|.
struct K4Counterexample {
  Graph graph;
  VertexSet a;
  VertexSet b;
};
K4Counterexample k4_counterexample(std::size_t n, std::size_t m);

// K_{|A|,n-|A|} with |A| = ceil(alpha n), then floor(defect_fraction |A|)
// randomly chosen A-vertices keep only ceil(alpha n / 4) cut-neighbours.
struct StableModel {
  Graph graph;
  VertexSet a;
  VertexSet b;
  std::vector<Vertex> degraded;
};
StableModel stable_model(std::size_t n, double alpha, double beta, double defect_fraction,
                         Seed seed);

// Bipartite graph on sides {0..n_side-1}, {n_side..2n_side-1} in which every
// vertex has exactly ceil(delta_fraction n_side) neighbours: a circulant band
// whose right side is relabelled by a seeded permutation.
Graph regular_bipartite(std::size_t n_side, double delta_fraction, Seed seed);

}  // namespace tripack

#endif  // TRIPACK_GENERATORS_HPP_
