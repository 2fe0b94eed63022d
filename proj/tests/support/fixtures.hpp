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

// Test-only fixtures and reference oracles. Nothing here calls the library
// routine it is used to check.

#ifndef TRIPACK_TESTS_SUPPORT_FIXTURES_HPP_
#define TRIPACK_TESTS_SUPPORT_FIXTURES_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "tripack/generators.hpp"
#include "tripack/graph.hpp"
#include "tripack/packing.hpp"
#include "tripack/rng.hpp"

namespace tripack::testing {

// Plain adjacency matrix copy so the oracles below never touch VertexSet.
inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  std::vector<std::vector<bool>> adj(g.n(), std::vector<bool>(g.n(), false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  return adj;
}

inline std::vector<std::array<Vertex, 3>> all_triangles(const Graph& g) {
  const auto adj = matrix(g);
  std::vector<std::array<Vertex, 3>> out;
  const auto n = static_cast<Vertex>(g.n());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (adj[a][b] && adj[a][c] && adj[b][c]) out.push_back({a, b, c});
  return out;
}

// Largest set of pairwise disjoint triangles by include/skip over the full
// triangle list.
inline std::size_t naive_max_packing(const Graph& g) {
  const auto tris = all_triangles(g);
  std::vector<bool> used(g.n(), false);
  std::size_t best = 0;
  auto go = [&](auto&& self, std::size_t i, std::size_t size) -> void {
    best = std::max(best, size);
    // Covering every free vertex still could not beat `best`.
    const auto free = static_cast<std::size_t>(std::count(used.begin(), used.end(), false));
    if (size + free / 3 <= best) return;
    for (std::size_t j = i; j < tris.size(); ++j) {
      const auto& t = tris[j];
      if (used[t[0]] || used[t[1]] || used[t[2]]) continue;
      used[t[0]] = used[t[1]] = used[t[2]] = true;
      self(self, j + 1, size + 1);
      used[t[0]] = used[t[1]] = used[t[2]] = false;
    }
  };
  go(go, 0, 0);
  return best;
}

// Size of a maximum matching by trying every injection of the smaller side;
// only for tiny sides.
inline std::size_t naive_matching_size(const Graph& g, const std::vector<Vertex>& a,
                                       const std::vector<Vertex>& b) {
  const auto adj = matrix(g);
  std::vector<bool> taken(b.size(), false);
  std::size_t best = 0;
  auto go = [&](auto&& self, std::size_t i, std::size_t size) -> void {
    if (i == a.size()) {
      best = std::max(best, size);
      return;
    }
    self(self, i + 1, size);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (taken[j] || !adj[a[i]][b[j]]) continue;
      taken[j] = true;
      self(self, i + 1, size + 1);
      taken[j] = false;
    }
  };
  go(go, 0, 0);
  return best;
}

// Random graph on n vertices raised to minimum degree >= min_degree by
// joining each deficient vertex to the lowest-index non-neighbours.
inline Graph min_degree_graph(std::size_t n, double p, std::size_t min_degree, Seed seed) {
  GraphBuilder b(gnp(n, p, seed));
  for (Vertex v = 0; v < n; ++v) {
    std::size_t deg = 0;
    for (Vertex u = 0; u < n; ++u) deg += (u != v && b.has_edge(u, v)) ? 1 : 0;
    for (Vertex u = 0; u < n && deg < min_degree; ++u) {
      if (u != v && b.add_edge(u, v)) ++deg;
    }
  }
  return std::move(b).build();
}

// True when no new-star, extension or leaf move applies, by a direct scan
// of uncovered neighbourhoods.
inline bool star_family_locally_optimal(const Graph& g, const StarFamily& f) {
  // An empty leaf range admits no star at all.
  if (f.max_leaves < f.min_leaves) return f.stars.empty();
  const auto adj = matrix(g);
  const std::size_t n = g.n();
  std::vector<bool> covered(n, false);
  for (const auto& s : f.stars) {
    covered[s.centre] = true;
    for (auto l : s.leaves) covered[l] = true;
  }
  auto free_neighbours = [&](Vertex v) {
    std::size_t c = 0;
    for (Vertex u = 0; u < n; ++u) c += (adj[v][u] && !covered[u]) ? 1 : 0;
    return c;
  };
  for (Vertex v = 0; v < n; ++v) {
    if (!covered[v] && free_neighbours(v) >= f.min_leaves) return false;
  }
  for (const auto& s : f.stars) {
    const std::size_t k = s.leaves.size();
    if (k < f.max_leaves && free_neighbours(s.centre) > 0) return false;
    for (auto l : s.leaves) {
      const std::size_t free = free_neighbours(l);
      if (k < f.max_leaves && free >= k + 1) return false;
      if (k == f.max_leaves && f.max_leaves >= f.min_leaves + 1 && free >= f.max_leaves) return false;
    }
  }
  return true;
}

struct CherryFixture {
  Graph graph;
  Cherry cherry;
};

// Centre V = [0, nv), leaves U and W of size nu after it; V-U and V-W pairs
// present independently with probability `density`, nothing else.
inline CherryFixture cherry_fixture(std::size_t nv, std::size_t nu, double density, Seed seed) {
  const std::size_t n = nv + 2 * nu;
  const auto v_end = static_cast<Vertex>(nv);
  const auto u_end = static_cast<Vertex>(nv + nu);
  Cherry c{VertexSet::range(n, v_end, u_end), VertexSet::range(n, 0, v_end),
           VertexSet::range(n, u_end, static_cast<Vertex>(n))};
  GraphBuilder b(n);
  b.add_graph(random_bipartite(c.v, c.u, density, seed.derive(1)));
  b.add_graph(random_bipartite(c.v, c.w, density, seed.derive(2)));
  return {std::move(b).build(), c};
}

}  // namespace tripack::testing

#endif  // TRIPACK_TESTS_SUPPORT_FIXTURES_HPP_
