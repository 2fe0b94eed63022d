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

#include <stdexcept>

#include "internal.hpp"

namespace tripack {
namespace {

void check_universe(const Graph& g, const VertexSet& s, const char* who) {
  if (s.universe() != g.n()) {
    throw std::invalid_argument(std::string(who) + ": vertex set universe differs from n");
  }
}

}  // namespace

CoverResult greedy_cover(const Graph& g, const VertexSet& targets, const VertexSet& pool,
                         const Graph& edges) {
  return greedy_cover_split(g, targets, pool, pool, edges);
}

CoverResult greedy_cover_split(const Graph& g, const VertexSet& targets, const VertexSet& pool_x,
                               const VertexSet& pool_y, const Graph& edges) {
  check_universe(g, targets, "greedy_cover");
  check_universe(g, pool_x, "greedy_cover");
  check_universe(g, pool_y, "greedy_cover");
  if (edges.n() != g.n()) throw std::invalid_argument("greedy_cover: overlay size differs from n");
  if (targets.intersects(pool_x) || targets.intersects(pool_y)) {
    throw std::invalid_argument("greedy_cover: targets and pool overlap");
  }
  CoverResult out{{}, VertexSet(g.n())};
  VertexSet used(g.n());
  targets.for_each([&](Vertex v) {
    const VertexSet near = g.neighbors(v) - used;
    const VertexSet xs = near & pool_x;
    const VertexSet ys = near & pool_y;
    for (auto x = xs.first(); x; x = xs.next_after(*x)) {
      const auto y = (edges.neighbors(*x) & ys).first();
      if (!y) continue;
      out.packing.triangles.push_back(make_triangle(v, *x, *y));
      used.insert(*x);
      used.insert(*y);
      return;
    }
    out.uncovered.insert(v);
  });
  return out;
}

Bipartition max_cut_bipartition(const Graph& g, const std::optional<VertexSet>& initial_a) {
  const std::size_t n = g.n();
  VertexSet a(n);
  VertexSet b(n);
  if (initial_a) {
    if (initial_a->universe() != n) throw std::invalid_argument("max_cut_bipartition: universe");
    a = *initial_a;
    b = a.complement();
  } else {
    for (Vertex v = 0; v < n; ++v) {
      if (degree_into(g, v, a) <= degree_into(g, v, b)) {
        a.insert(v);
      } else {
        b.insert(v);
      }
    }
  }
  // Each flip raises the cut by at least one edge.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      const bool in_a = a.contains(v);
      const std::size_t same = degree_into(g, v, in_a ? a : b);
      const std::size_t cross = g.degree(v) - same;
      if (same <= cross) continue;
      if (in_a) {
        a.erase(v);
        b.insert(v);
      } else {
        b.erase(v);
        a.insert(v);
      }
      changed = true;
    }
  }
  if (a.size() > b.size()) std::swap(a, b);
  return {a, b};
}

}  // namespace tripack
