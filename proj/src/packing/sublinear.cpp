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

#include <cmath>
#include <stdexcept>

#include "internal.hpp"
#include "tripack/generators.hpp"

namespace tripack {

const char* to_string(SublinearRoute route) {
  switch (route) {
    case SublinearRoute::high_degree: return "high_degree";
    case SublinearRoute::harvest: return "harvest";
    case SublinearRoute::stars: return "stars";
    case SublinearRoute::round_greedy: return "round_greedy";
    case SublinearRoute::none: return "none";
  }
  return "unknown";
}

namespace {

// Covers vertices of `hubs` in increasing order, each with the first overlay
// edge inside its unused host neighbourhood, until `limit` triangles exist.
void cover_hubs(const Graph& g, const VertexSet& hubs, const Graph& overlay, std::size_t limit,
                VertexSet& used, TrianglePacking& out) {
  hubs.for_each([&](Vertex v) {
    if (out.size() >= limit || used.contains(v)) return;
    const VertexSet room = g.neighbors(v) - used;
    for (auto x = room.first(); x; x = room.next_after(*x)) {
      const auto y = (overlay.neighbors(*x) & room).first();
      if (!y) continue;
      out.triangles.push_back(make_triangle(v, *x, *y));
      used.insert(v);
      used.insert(*x);
      used.insert(*y);
      return;
    }
  });
}

SublinearRoute route_for(std::size_t m_rest, std::size_t n_rest, double n) {
  if (m_rest == 0) return SublinearRoute::none;
  const double log_cube = std::pow(std::log(n), 3.0);
  if (static_cast<double>(m_rest) < log_cube) return SublinearRoute::harvest;
  if (static_cast<double>(m_rest) <= std::sqrt(static_cast<double>(n_rest))) {
    return SublinearRoute::stars;
  }
  return SublinearRoute::round_greedy;
}

}  // namespace

PackResult sublinear_pack(const Graph& g, std::size_t m, double p, Seed seed,
                          const SublinearOptions& options) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sublinear_pack: p outside [0,1]");
  const std::size_t n = g.n();
  if (m == 0 || n < 3) return detail::empty_result(n, m, "nothing to pack");

  VertexSet hubs(n);
  const double hub_floor = static_cast<double>(n) / 64.0;
  for (Vertex v = 0; v < n; ++v) {
    if (static_cast<double>(g.degree(v)) >= hub_floor) hubs.insert(v);
  }
  const bool forced_cover = options.force_route == SublinearRoute::high_degree;
  const bool cover_only = forced_cover || (!options.force_route && hubs.size() >= m);
  const std::size_t m_rest = cover_only ? 0 : m - std::min(m, hubs.size());
  const VertexSet rest_vertices = hubs.complement();
  SublinearRoute route = SublinearRoute::high_degree;
  if (!cover_only) {
    route = options.force_route ? *options.force_route
                                : route_for(m_rest, rest_vertices.size(), static_cast<double>(n));
  }

  // Rounds actually revealed: the hub overlay when hubs exist, plus one for
  // the routed stage on G - V'.
  const bool need_hub_round = !hubs.empty();
  const bool need_route_round = !cover_only && route != SublinearRoute::none;
  const std::size_t rounds = (need_hub_round ? 1 : 0) + (need_route_round ? 1 : 0);
  const double share = rounds == 0 ? 0.0 : p / static_cast<double>(rounds);

  PackResult result;
  result.target = m;
  result.notes.push_back("|V'| " + std::to_string(hubs.size()) + ", m' " + std::to_string(m_rest) +
                         ", route " + to_string(route) + ", rounds " + std::to_string(rounds) +
                         " at p " + detail::fmt(share));
  GraphBuilder revealed(n);
  VertexSet used(n);

  if (need_route_round) {
    const InducedGraph sub = induced(g, rest_vertices);
    const Seed stage = seed.derive(detail::kTagSublinear, 2);
    PackResult local;
    switch (route) {
      case SublinearRoute::harvest: {
        const Graph overlay = gnp(sub.graph.n(), share, stage);
        local.packing = greedy_triangle_packing(overlay);
        if (local.packing.size() > m_rest) local.packing.triangles.resize(m_rest);
        local.revealed = overlay;
        break;
      }
      case SublinearRoute::stars: {
        const StarFamily family =
            find_star_family(sub.graph, m_rest, options.star_eps, options.star_s);
        for (const auto& note : family.notes) result.notes.push_back("stars: " + note);
        local = stars_to_triangles(sub.graph, family, share, stage);
        break;
      }
      case SublinearRoute::round_greedy:
        local = round_greedy_triangles(sub.graph, m_rest, share, stage);
        for (const auto& note : local.notes) result.notes.push_back("round greedy: " + note);
        break;
      case SublinearRoute::high_degree:
      case SublinearRoute::none:
        break;
    }
    result.packing = detail::lift_packing(sub, local.packing);
    revealed.add_graph(detail::lift_graph(sub, local.revealed, n));
    used = result.packing.covered(n);
    result.notes.push_back("routed stage packed " + std::to_string(result.packing.size()) +
                           " of " + std::to_string(m_rest));
  }

  if (need_hub_round) {
    const Graph overlay = gnp(n, share, seed.derive(detail::kTagSublinear, 1));
    cover_hubs(g, hubs, overlay, m, used, result.packing);
    revealed.add_graph(overlay);
  }
  result.revealed = std::move(revealed).build();
  return detail::finish(g, std::move(result), "sublinear_pack");
}

}  // namespace tripack
