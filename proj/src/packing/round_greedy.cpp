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

#include <algorithm>
#include <stdexcept>

#include "internal.hpp"
#include "tripack/generators.hpp"

namespace tripack {

PackResult round_greedy_triangles(const Graph& g, std::size_t m, double p, Seed seed,
                                  const RoundGreedyOptions& options, RoundGreedyTrace* trace) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("round_greedy_triangles: p outside [0,1]");
  const std::size_t n = g.n();
  if (m == 0 || n < 3) return detail::empty_result(n, m, "nothing to pack");

  const std::size_t s = detail::ceil_div(2 * n, m);
  const std::size_t t = detail::ceil_div(m * m, 2 * n);
  // A block needs two vertices to hold an edge, so ceil(m/16) is raised to 2.
  const std::size_t block = std::max<std::size_t>(
      2, options.block_size != 0 ? options.block_size : detail::ceil_div(m, 16));
  const double q = p / static_cast<double>(t);

  const Bipartition cut = max_cut_bipartition(g);
  PackResult result;
  result.target = m;
  result.notes.push_back("s " + std::to_string(s) + ", t " + std::to_string(t) + ", block " +
                         std::to_string(block) + ", q " + detail::fmt(q) + ", |A| " +
                         std::to_string(cut.a.size()) + ", |B| " + std::to_string(cut.b.size()));
  if (trace != nullptr) {
    *trace = RoundGreedyTrace{};
    trace->per_round = s;
    trace->block_size = block;
  }

  GraphBuilder revealed(n);
  VertexSet selected(n);  // A'
  VertexSet b0(n);        // B-vertices used by triangles
  for (std::size_t round = 0; round < t; ++round) {
    VertexSet b_free = cut.b - b0;
    std::vector<std::pair<Vertex, std::vector<Vertex>>> picks;
    for (auto v = cut.a.first(); v && picks.size() < s; v = cut.a.next_after(*v)) {
      if (selected.contains(*v)) continue;
      const VertexSet options_b = g.neighbors(*v) & b_free;
      if (options_b.size() < block) continue;
      const VertexSet chosen = options_b.lowest(block);
      b_free -= chosen;
      picks.emplace_back(*v, chosen.to_vector());
    }
    if (picks.size() < s) {
      result.notes.push_back("round " + std::to_string(round + 1) + " found only " +
                             std::to_string(picks.size()) + " of " + std::to_string(s) +
                             " qualifying vertices");
    }

    const Seed round_seed = seed.derive(detail::kTagRoundGreedy, round);
    for (const auto& [v, members] : picks) {
      selected.insert(v);
      const std::vector<Edge> edges = sample_edges_within(members, q, round_seed);
      for (const Edge& e : edges) revealed.add_edge(e.u, e.v);
      if (edges.empty()) continue;
      const Edge e = edges.front();
      result.packing.triangles.push_back(make_triangle(v, e.u, e.v));
      b0.insert(e.u);
      b0.insert(e.v);
    }
    if (trace != nullptr) {
      ++trace->rounds;
      trace->selected_after_round.push_back(selected.size());
      trace->b0_after_round.push_back(b0.size());
    }
    if (picks.size() < s) break;
  }
  result.revealed = std::move(revealed).build();
  return detail::finish(g, std::move(result), "round_greedy_triangles");
}

}  // namespace tripack
