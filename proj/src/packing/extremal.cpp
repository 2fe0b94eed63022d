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

// Three stages on a stable partition (A, B):
//   1. triangles and a parked set so that |B_1| = 2|A_1| + w,
//   2. (1A,2B) triangles over the vertices with a low degree across,
//   3. a balanced cherry (B_2', A_2, B_2'') after parking w more B-vertices.
// All counts are kept as integers: three times the slack n/3 - ceil(alpha n)
// is n - 3 ceil(alpha n).

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "internal.hpp"
#include "tripack/generators.hpp"

namespace tripack {
namespace {

constexpr double kTol = 1e-9;

// The k members of `from` with the fewest neighbours in `towards`, ties by index.
VertexSet lowest_degree(const Graph& g, const VertexSet& from, const VertexSet& towards,
                        std::size_t k) {
  std::vector<std::pair<std::size_t, Vertex>> ranked;
  from.for_each([&](Vertex v) { ranked.emplace_back(degree_into(g, v, towards), v); });
  std::sort(ranked.begin(), ranked.end());
  VertexSet out(g.n());
  for (std::size_t i = 0; i < k && i < ranked.size(); ++i) out.insert(ranked[i].second);
  return out;
}

struct LowDegree {
  VertexSet a;  // Ã
  VertexSet b;  // B̃
};

LowDegree low_degree_sets(const Graph& g, const VertexSet& a1, const VertexSet& b1, double beta,
                          const ExtremalOptions& options) {
  const double slack = options.low_degree_factor * beta * static_cast<double>(g.n());
  const double a_floor = static_cast<double>(b1.size()) -
                         std::min(slack, static_cast<double>(b1.size()) / 4.0);
  const double b_floor = static_cast<double>(a1.size()) -
                         std::min(slack, static_cast<double>(a1.size()) / 2.0);
  LowDegree out{VertexSet(g.n()), VertexSet(g.n())};
  a1.for_each([&](Vertex v) {
    if (static_cast<double>(degree_into(g, v, b1)) <= a_floor + kTol) out.a.insert(v);
  });
  b1.for_each([&](Vertex v) {
    if (static_cast<double>(degree_into(g, v, a1)) <= b_floor + kTol) out.b.insert(v);
  });
  return out;
}

struct Stage1Plan {
  bool excess_in_b = false;
  std::size_t excess = 0;      // m in the balancing claim
  bool needs_sublinear = false;
  std::size_t inside_b = 0;    // triangles to find inside B
};

}  // namespace

PackResult extremal_pack(const Graph& g, const VertexSet& a, const VertexSet& b, double alpha,
                         double beta, double p, Seed seed, const ExtremalOptions& options) {
  const std::size_t n = g.n();
  if (a.universe() != n || b.universe() != n) throw std::invalid_argument("extremal_pack: universe");
  if (a.intersects(b) || (a | b).size() != n) {
    throw std::invalid_argument("extremal_pack: a and b must partition the vertices");
  }
  if (!(alpha > 0.0 && alpha <= 1.0 / 3.0 + kTol)) {
    throw std::invalid_argument("extremal_pack: alpha must lie in (0, 1/3]");
  }
  if (!(beta >= 0.0)) throw std::invalid_argument("extremal_pack: beta must be non-negative");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("extremal_pack: p outside [0,1]");

  const auto alpha_n = alpha * static_cast<double>(n);
  const auto ceil_an = static_cast<long long>(std::ceil(alpha_n - kTol));
  const auto floor_an = static_cast<long long>(std::floor(alpha_n + kTol));
  const auto nn = static_cast<long long>(n);
  const auto min_deg = static_cast<long long>(g.min_degree());
  const long long k3 = nn - 3 * ceil_an;                                // 3 kappa
  const long long m3 = std::max(nn - 3 * min_deg, nn - 3 * floor_an);  // 3 m_0
  const long long w = std::max(k3, 0LL);

  PackResult result;
  result.target = static_cast<std::size_t>(std::max(0LL, std::min(min_deg, floor_an)));
  if (n < 3 || a.empty()) {
    result.revealed = Graph(n);
    result.notes.push_back("degenerate partition");
    return result;
  }

  Stage1Plan plan;
  const auto size_a = static_cast<long long>(a.size());
  if (size_a < ceil_an) {
    plan.excess_in_b = true;
    plan.excess = static_cast<std::size_t>(ceil_an - size_a);
    const long long room = (m3 - k3) / 3;
    if (static_cast<long long>(plan.excess) > room) {
      plan.needs_sublinear = true;
      plan.inside_b = static_cast<std::size_t>(static_cast<long long>(plan.excess) - room);
    }
  } else {
    plan.excess = static_cast<std::size_t>(size_a - ceil_an);
  }

  // Stage 1 without random edges can be run up front, which tells whether
  // the covering round is needed at all.
  const bool stage1_random = plan.needs_sublinear || (!plan.excess_in_b && plan.excess > 0);

  VertexSet used(n);
  VertexSet a1 = a;
  VertexSet b1 = b;
  auto park = [&](const VertexSet& s) {
    used |= s;
    a1 -= s;
    b1 -= s;
  };
  auto take = [&](const TrianglePacking& t) {
    result.packing.append(t);
    park(t.covered(n));
  };
  std::size_t parked = 0;
  auto park_counted = [&](const VertexSet& s) {
    parked += s.size();
    park(s);
  };

  auto run_stage1_parking = [&]() {
    if (plan.excess_in_b && !plan.needs_sublinear) {
      const long long count = std::min(3 * static_cast<long long>(plan.excess),
                                       3 * static_cast<long long>(plan.excess) + k3);
      park_counted(lowest_degree(g, b1, a1, static_cast<std::size_t>(std::max(count, 0LL))));
    } else if (!plan.excess_in_b && plan.excess == 0) {
      if (k3 == -2 || k3 == -1) park_counted(lowest_degree(g, a1, b1, 1));
      if (k3 == -1) park_counted(lowest_degree(g, b1, a1, 1));
    }
  };

  std::size_t rounds = 1;  // the cherry
  bool need_cover_round = true;
  if (plan.needs_sublinear) ++rounds;
  if (!stage1_random) {
    run_stage1_parking();
    const LowDegree low = low_degree_sets(g, a1, b1, beta, options);
    need_cover_round = !low.a.empty() || !low.b.empty();
  }
  if (need_cover_round) ++rounds;
  const double share = p / static_cast<double>(rounds);
  result.notes.push_back("kappa*3 " + std::to_string(k3) + ", m0*3 " + std::to_string(m3) + ", w " +
                         std::to_string(w) + ", rounds " + std::to_string(rounds) + " at p " +
                         detail::fmt(share));

  GraphBuilder revealed(n);
  Graph cover_edges = g;
  if (need_cover_round) {
    const Graph g2 = gnp(n, share, seed.derive(detail::kTagExtremal, 2));
    revealed.add_graph(g2);
    cover_edges = graph_union(g, g2);
  }

  if (stage1_random) {
    if (plan.needs_sublinear) {
      const InducedGraph sub = induced(g, b);
      PackResult inner =
          sublinear_pack(sub.graph, plan.inside_b, share, seed.derive(detail::kTagExtremal, 1));
      if (inner.packing.size() > plan.inside_b) inner.packing.triangles.resize(plan.inside_b);
      revealed.add_graph(detail::lift_graph(sub, inner.revealed, n));
      take(detail::lift_packing(sub, inner.packing));
      const std::size_t missing = plan.inside_b - inner.packing.size();
      // Each missing triangle is replaced by three parked B-vertices.
      const auto count = static_cast<std::size_t>(m3 - w) + 3 * missing;
      park_counted(lowest_degree(g, b1, a1, count));
      result.notes.push_back("stage 1: " + std::to_string(inner.packing.size()) + " of " +
                             std::to_string(plan.inside_b) + " triangles inside B");
    } else {
      CoverResult cover = greedy_cover(g, b1, a1, cover_edges);
      if (cover.packing.size() > plan.excess) cover.packing.triangles.resize(plan.excess);
      const std::size_t missing = plan.excess - cover.packing.size();
      take(cover.packing);
      // A missing (2A,1B) triangle is replaced by parking its shape.
      for (std::size_t i = 0; i < missing; ++i) {
        park_counted(lowest_degree(g, a1, b1, 2));
        park_counted(lowest_degree(g, b1, a1, 1));
      }
      if (k3 == -2 || k3 == -1) park_counted(lowest_degree(g, a1, b1, 1));
      if (k3 == -1) park_counted(lowest_degree(g, b1, a1, 1));
      result.notes.push_back("stage 1: " + std::to_string(cover.packing.size()) + " of " +
                             std::to_string(plan.excess) + " (2A,1B) triangles");
    }
  }
  auto balanced = [&]() {
    return static_cast<long long>(b1.size()) == 2 * static_cast<long long>(a1.size()) + w;
  };
  // Parking draws from the sides, so an input far from stable can run out.
  auto stop = [&](const char* stage) {
    result.notes.push_back(std::string(stage) + " could not restore |B| = 2|A| + w; stopping");
    result.revealed = std::move(revealed).build();
    return detail::finish(g, std::move(result), "extremal_pack");
  };
  if (!balanced()) return stop("stage 1");

  // Stage 2.
  const LowDegree low = low_degree_sets(g, a1, b1, beta, options);
  if (!low.a.empty() || !low.b.empty()) {
    const CoverResult ca = greedy_cover(g, low.a, b1 - low.b, cover_edges);
    take(ca.packing);
    ca.uncovered.for_each([&](Vertex v) {
      park_counted(VertexSet::of(n, std::vector<Vertex>{v}));
      park_counted(lowest_degree(g, b1 - low.b, a1, 2));
    });
    const CoverResult cb =
        greedy_cover_split(g, low.b & b1, a1 - low.a, b1 - low.b, cover_edges);
    take(cb.packing);
    cb.uncovered.for_each([&](Vertex v) {
      park_counted(VertexSet::of(n, std::vector<Vertex>{v}));
      park_counted(lowest_degree(g, a1, b1, 1));
      park_counted(lowest_degree(g, b1 - low.b, a1, 1));
    });
    result.notes.push_back("stage 2: low-degree " + std::to_string(low.a.size()) + " in A, " +
                           std::to_string(low.b.size()) + " in B; uncovered " +
                           std::to_string(ca.uncovered.size() + cb.uncovered.size()));
  }
  if (!balanced()) return stop("stage 2");

  // Stage 3.
  park_counted(lowest_degree(g, b1, a1, static_cast<std::size_t>(w)));
  std::vector<Vertex> rest = b1.to_vector();
  Stream stream(seed.derive(detail::kTagExtremal, 3));
  stream.shuffle(rest);
  const std::size_t half = rest.size() / 2;
  std::vector<Vertex> first(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<Vertex> second(rest.begin() + static_cast<std::ptrdiff_t>(half), rest.end());
  const Cherry cherry{VertexSet::of(n, first), a1, VertexSet::of(n, second)};
  if (!a1.empty()) {
    PackResult part = cherry_factor(g, cherry, share, CherryMode::balanced,
                                    seed.derive(detail::kTagExtremal, 4), options.cherry);
    result.packing.append(part.packing);
    revealed.add_graph(part.revealed);
    for (const auto& note : part.notes) result.notes.push_back("stage 3: " + note);
  }
  result.notes.push_back("parked " + std::to_string(parked) + " vertices");
  result.revealed = std::move(revealed).build();
  return detail::finish(g, std::move(result), "extremal_pack");
}

}  // namespace tripack
