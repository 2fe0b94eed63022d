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
#include "tripack/generators.hpp"

namespace tripack {
namespace {

// 2 * common >= d^2 * side, compared without rounding the right-hand side.
bool enough_common(std::size_t common, double d, std::size_t side) {
  return 2.0 * static_cast<double>(common) >= d * d * static_cast<double>(side) - 1e-9;
}

}  // namespace

Graph build_F(const Graph& g, const VertexSet& u_side, const VertexSet& w_side,
              const VertexSet& v, double d) {
  if (u_side.universe() != g.n() || w_side.universe() != g.n() || v.universe() != g.n()) {
    throw std::invalid_argument("build_F: vertex set universe differs from n");
  }
  if (u_side.intersects(w_side) || u_side.intersects(v) || w_side.intersects(v)) {
    throw std::invalid_argument("build_F: sides must be pairwise disjoint");
  }
  GraphBuilder f(g.n());
  u_side.for_each([&](Vertex u) {
    const VertexSet near = g.neighbors(u) & v;
    w_side.for_each([&](Vertex w) {
      if (enough_common(near.count_common(g.neighbors(w)), d, v.size())) f.add_edge(u, w);
    });
  });
  return std::move(f).build();
}

Graph good_for_X(const Graph& g, const Graph& f, const VertexSet& x, double d) {
  if (f.n() != g.n() || x.universe() != g.n()) {
    throw std::invalid_argument("good_for_X: size mismatch");
  }
  GraphBuilder out(g.n());
  for (const Edge& e : f.edges()) {
    if (enough_common(x.count_common(g.neighbors(e.u), g.neighbors(e.v)), d, x.size())) {
      out.add_edge(e.u, e.v);
    }
  }
  return std::move(out).build();
}

std::vector<Edge> random_greedy_matching(const Graph& f, double reveal_p, std::size_t target,
                                         Seed seed, Graph* revealed) {
  if (!(reveal_p >= 0.0 && reveal_p <= 1.0)) {
    throw std::invalid_argument("random_greedy_matching: reveal_p outside [0,1]");
  }
  const Graph tilde = random_subgraph(f, reveal_p, seed.derive(detail::kTagGreedyMatch, 0));
  // Scanning a uniformly shuffled edge list and keeping every edge disjoint
  // from those kept so far picks each next edge uniformly among the
  // still-available ones.
  std::vector<Edge> order = tilde.edges();
  Stream stream(seed.derive(detail::kTagGreedyMatch, 1));
  stream.shuffle(order);
  std::vector<Edge> chosen;
  VertexSet used(f.n());
  for (const Edge& e : order) {
    if (chosen.size() >= target) break;
    if (used.contains(e.u) || used.contains(e.v)) continue;
    used.insert(e.u);
    used.insert(e.v);
    chosen.push_back(e);
  }
  if (revealed != nullptr) *revealed = tilde;
  return chosen;
}

AuxH build_H(const Graph& g, const std::vector<Edge>& matching, const VertexSet& v) {
  if (v.universe() != g.n()) throw std::invalid_argument("build_H: vertex set universe differs from n");
  AuxH h{matching, {}};
  h.rows.reserve(matching.size());
  VertexSet seen(g.n());
  for (const Edge& e : matching) {
    if (v.contains(e.u) || v.contains(e.v)) throw std::invalid_argument("build_H: endpoint inside v");
    if (seen.contains(e.u) || seen.contains(e.v)) {
      throw std::invalid_argument("build_H: matching edges share a vertex");
    }
    seen.insert(e.u);
    seen.insert(e.v);
    h.rows.push_back(g.neighbors(e.u) & g.neighbors(e.v) & v);
  }
  return h;
}

TrianglePacking triangles_from_H(const AuxH& h, const IndexMatching& matching) {
  if (matching.left_to_right.size() != h.matching.size()) {
    throw std::invalid_argument("triangles_from_H: matching has the wrong number of rows");
  }
  TrianglePacking out;
  for (std::size_t i = 0; i < h.matching.size(); ++i) {
    const auto& right = matching.left_to_right[i];
    if (!right) continue;
    if (!h.rows[i].contains(*right)) throw std::invalid_argument("triangles_from_H: non-edge of H");
    out.triangles.push_back(make_triangle(h.matching[i].u, h.matching[i].v, *right));
  }
  return out;
}

}  // namespace tripack
