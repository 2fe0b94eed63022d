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

#include "../support/fixtures.hpp"
#include "doctest.h"
#include "tripack/generators.hpp"
#include "tripack/oracle.hpp"
#include "tripack/packing.hpp"

using namespace tripack;
namespace tt = tripack::testing;

namespace {

// Disjoint stars K_{1,k}: centre first, then its leaves.
Graph star_forest(const std::vector<std::size_t>& leaf_counts) {
  std::size_t n = 0;
  for (auto k : leaf_counts) n += k + 1;
  GraphBuilder b(n);
  Vertex next = 0;
  for (auto k : leaf_counts) {
    const Vertex centre = next++;
    for (std::size_t i = 0; i < k; ++i) b.add_edge(centre, next++);
  }
  return std::move(b).build();
}

}  // namespace

TEST_CASE("greedy cover examples") {
  GraphBuilder star(3);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  GraphBuilder over(3);
  over.add_edge(1, 2);
  const Graph g = std::move(star).build();
  const VertexSet target = VertexSet::of(3, std::vector<Vertex>{0});
  const VertexSet pool = VertexSet::of(3, std::vector<Vertex>{1, 2});
  const CoverResult c = greedy_cover(g, target, pool, std::move(over).build());
  REQUIRE(c.packing.size() == 1);
  CHECK(c.packing.triangles[0] == Triangle{0, 1, 2});
  CHECK(greedy_cover(g, target, pool, g).uncovered == target);

  const Graph k39 = complete_bipartite(3, 12);
  const VertexSet a = VertexSet::range(12, 0, 3);
  GraphBuilder clique(12);
  clique.add_clique(a.complement());
  const Graph overlay = std::move(clique).build();
  const CoverResult all = greedy_cover(k39, a, a.complement(), overlay);
  CHECK(all.packing.size() == 3);
  CHECK(all.uncovered.empty());
  CHECK_FALSE(packing_error(graph_union(k39, overlay), all.packing));
}

TEST_CASE("star family on a star forest is the forest") {
  // eps*m = 3, eps*sqrt(n) = 0.5*sqrt(n) >= 6 for n >= 144.
  const Graph g = star_forest({3, 4, 5, 6, 6, 5, 4, 3, 6, 6, 5, 4, 3, 6, 5, 4, 3, 6, 5, 4, 6, 6, 6, 6, 6});
  REQUIRE(g.n() >= 144);
  const StarFamily f = find_star_family(g, 6, 0.5, 1);
  CHECK_FALSE(star_family_error(g, f));
  std::size_t leaves = 0;
  for (const Star& s : f.stars) leaves += s.leaves.size();
  CHECK(f.stars.size() == 25);
  CHECK(leaves == g.edge_count());
  CHECK(tt::star_family_locally_optimal(g, f));

  const StarFamily none = find_star_family(Graph(100), 6, 0.5, 1);
  CHECK(none.stars.empty());
}

TEST_CASE("star family on disjoint bicliques") {
  const Graph g = disjoint_bicliques(32, 64);
  const StarFamily f = find_star_family(g, 64, 1.0 / 48.0, 8);
  CHECK_FALSE(star_family_error(g, f));
  CHECK(tt::star_family_locally_optimal(g, f));
}

TEST_CASE("star family objective is reported and local optimality holds on random graphs") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Stream pick{Seed(s)};
    const std::size_t n = 50 + pick.below(150);
    const Graph g = gnp(n, 0.03 + 0.1 * pick.uniform(), Seed(800 + s));
    const StarFamily f = find_star_family(g, 2 + pick.below(6), 0.5, 1);
    CHECK_FALSE(star_family_error(g, f));
    CHECK(tt::star_family_locally_optimal(g, f));
    std::uint64_t sum = 0;
    for (const Star& st : f.stars) sum += st.leaves.size() * st.leaves.size();
    CHECK(f.objective() == sum);
    CHECK(f.moves >= f.stars.size());
  }
}

TEST_CASE("star buckets") {
  CHECK(star_bucket(3, 3.0) == 1);
  CHECK(star_bucket(5, 3.0) == 1);
  CHECK(star_bucket(6, 3.0) == 2);
  CHECK(star_bucket(12, 3.0) == 3);
  CHECK_THROWS_AS(star_bucket(2, 3.0), std::invalid_argument);
}

TEST_CASE("stars to triangles extremes") {
  const Graph g = star_forest({4, 4, 4, 4});
  StarFamily f = find_star_family(g, 4, 0.5, 1);
  REQUIRE(f.stars.size() == 4);
  CHECK(stars_to_triangles(g, f, 1.0, Seed(1)).packing.size() == 4);
  CHECK(stars_to_triangles(g, f, 0.0, Seed(1)).packing.size() == 0);
  f.stars[0].leaves.push_back(f.stars[1].centre);
  CHECK_THROWS_AS(stars_to_triangles(g, f, 1.0, Seed(1)), std::invalid_argument);
}

TEST_CASE("stars to triangles mean against the closed form") {
  const Graph g = star_forest(std::vector<std::size_t>(500, 20));
  StarFamily f;
  f.min_leaves = 20;
  f.max_leaves = 20;
  f.scale = 20.0;
  Vertex next = 0;
  for (int i = 0; i < 500; ++i) {
    Star s{next++, {}};
    for (int j = 0; j < 20; ++j) s.leaves.push_back(next++);
    f.stars.push_back(s);
  }
  const double p = 0.02;
  const double each = 1.0 - std::pow(1.0 - p, 190.0);
  double mean = 0;
  for (int t = 0; t < 500; ++t) {
    mean += static_cast<double>(stars_to_triangles(g, f, p, Seed(t)).packing.size());
  }
  mean /= 500.0;
  const double sd = std::sqrt(500.0 * each * (1.0 - each) / 500.0);
  CHECK(std::abs(mean - 500.0 * each) <= 4 * sd);
}

TEST_CASE("max cut leaves every vertex with half its degree across") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Stream pick{Seed(s)};
    const std::size_t n = 2 + pick.below(49);
    const Graph g = gnp(n, pick.uniform(), Seed(1000 + s));
    const Bipartition cut = max_cut_bipartition(g);
    CHECK(cut.a.size() <= cut.b.size());
    CHECK((cut.a | cut.b).size() == n);
    for (Vertex v = 0; v < n; ++v) {
      const VertexSet& other = cut.a.contains(v) ? cut.b : cut.a;
      CHECK(2 * degree_into(g, v, other) >= g.degree(v));
    }
  }
  const Bipartition k4 = max_cut_bipartition(complete_graph(4));
  CHECK(k4.a.size() == 2);
  const Graph kb = complete_bipartite(4, 10);
  const Bipartition same = max_cut_bipartition(kb, VertexSet::range(10, 0, 4));
  CHECK(same.a == VertexSet::range(10, 0, 4));
}

TEST_CASE("round greedy with every block completed") {
  const Graph g = disjoint_bicliques(8, 32);  // n = 512
  RoundGreedyTrace trace;
  const PackResult r = round_greedy_triangles(g, 32, 1.0, Seed(1), {}, &trace);
  CHECK(trace.per_round == 32);        // ceil(2n/m)
  CHECK(trace.rounds == 1);            // ceil(m^2/(2n))
  CHECK(trace.block_size == 2);
  CHECK(r.packing.size() >= 32);
  for (std::size_t i = 0; i < trace.selected_after_round.size(); ++i) {
    CHECK(trace.selected_after_round[i] == (i + 1) * trace.per_round);
    CHECK(trace.b0_after_round[i] == 2 * (i + 1) * trace.per_round);
  }
  CHECK_FALSE(packing_error(graph_union(g, r.revealed), r.packing));
  CHECK(round_greedy_triangles(g, 32, 0.0, Seed(1)).packing.size() == 0);
}

TEST_CASE("round greedy trace stays within its budgets") {
  const Graph g = disjoint_bicliques(16, 64);  // n = 2048, m = 64
  for (std::uint64_t s = 0; s < 5; ++s) {
    RoundGreedyTrace trace;
    const PackResult r = round_greedy_triangles(g, 64, 0.05, Seed(s), {}, &trace);
    CHECK(trace.rounds == 1);
    for (std::size_t i = 0; i < trace.selected_after_round.size(); ++i) {
      CHECK(trace.selected_after_round[i] <= (i + 1) * trace.per_round);
      CHECK(trace.b0_after_round[i] <= 2 * trace.selected_after_round[i]);
    }
    CHECK_FALSE(packing_error(graph_union(g, r.revealed), r.packing));
  }
}

TEST_CASE("sublinear examples") {
  // Vertex 0 sees half the graph.
  GraphBuilder b(40);
  for (Vertex v = 1; v <= 20; ++v) b.add_edge(0, v);
  const Graph g = std::move(b).build();
  CHECK(sublinear_pack(g, 1, 1.0, Seed(1)).packing.size() == 1);
  CHECK(sublinear_pack(complete_bipartite(5, 40), 3, 0.0, Seed(1)).packing.size() == 0);

  const double n = 4096.0;
  const Graph k = complete_bipartite(16, 4096);
  std::size_t hits = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const PackResult r = sublinear_pack(k, 16, 6.0 * std::log(n) / n, Seed(s));
    CHECK_FALSE(packing_error(graph_union(k, r.revealed), r.packing));
    hits += r.packing.size() >= 16 ? 1 : 0;
  }
  CHECK(hits >= 18);
}

TEST_CASE("auxiliary graph F") {
  const Graph tri = complete_multipartite({5, 5, 5});
  const VertexSet v = VertexSet::range(15, 0, 5), u = VertexSet::range(15, 5, 10),
                  w = VertexSet::range(15, 10, 15);
  const Graph f = build_F(tri, u, w, v, 0.5);
  CHECK(f.edge_count() == 25);
  CHECK(edges_between(f, u, w) == 25);
  GraphBuilder hb(15);  // v-w edges only
  hb.add_complete_bipartite(v, w);
  CHECK(build_F(std::move(hb).build(), u, w, v, 0.5).edge_count() == 0);

  CHECK(good_for_X(tri, f, v, 0.5) == f);
  CHECK(good_for_X(tri, f, VertexSet(15), 0.5) == f);
  CHECK(good_for_X(tri, f, VertexSet::range(15, 0, 2), 0.5) == f);

  for (std::uint64_t s = 0; s < 20; ++s) {
    const tt::CherryFixture fx = tt::cherry_fixture(100, 100, 0.5, Seed(s));
    const Graph fs = build_F(fx.graph, fx.cherry.u, fx.cherry.w, fx.cherry.v, 0.3);
    std::size_t low = 100;
    (fx.cherry.u | fx.cherry.w).for_each([&](Vertex x) { low = std::min(low, fs.degree(x)); });
    CHECK(low >= 90);
  }
}

TEST_CASE("random greedy matching") {
  const Graph k = complete_bipartite(6, 12);
  const auto full = random_greedy_matching(k, 1.0, 6, Seed(2));
  CHECK(full.size() == 6);
  VertexSet seen(12);
  for (const Edge& e : full) {
    CHECK(k.has_edge(e.u, e.v));
    CHECK_FALSE(seen.contains(e.u));
    CHECK_FALSE(seen.contains(e.v));
    seen.insert(e.u);
    seen.insert(e.v);
  }
  CHECK(random_greedy_matching(k, 0.0, 6, Seed(2)).empty());
  Graph revealed;
  random_greedy_matching(k, 0.5, 6, Seed(3), &revealed);
  for (const Edge& e : revealed.edges()) CHECK(k.has_edge(e.u, e.v));
}

TEST_CASE("first greedy matching edge is uniform on K33") {
  const Graph k = complete_bipartite(3, 6);
  const auto edges = k.edges();
  std::vector<double> counts(9, 0.0);
  for (std::uint64_t t = 0; t < 9000; ++t) {
    const auto m = random_greedy_matching(k, 1.0, 1, Seed(t));
    REQUIRE(m.size() == 1);
    const Edge e{std::min(m[0].u, m[0].v), std::max(m[0].u, m[0].v)};
    counts[static_cast<std::size_t>(std::find(edges.begin(), edges.end(), e) - edges.begin())] += 1;
  }
  double chi = 0;
  for (double c : counts) chi += (c - 1000.0) * (c - 1000.0) / 1000.0;
  CHECK(chi < 26.12);  // chi-square, 8 degrees of freedom, significance 0.001
}

TEST_CASE("auxiliary graph H") {
  const Graph tri = complete_multipartite({4, 4, 4});
  const VertexSet v = VertexSet::range(12, 0, 4);
  const std::vector<Edge> m{{4, 8}, {5, 9}, {6, 10}, {7, 11}};
  const AuxH h = build_H(tri, m, v);
  REQUIRE(h.rows.size() == 4);
  for (const auto& row : h.rows) CHECK(row == v);
  const IndexMatching im = maximum_matching(h.rows);
  const TrianglePacking p = triangles_from_H(h, im);
  CHECK(p.size() == 4);
  CHECK_FALSE(packing_error(tri, p));

  GraphBuilder no_v(12);
  no_v.add_complete_bipartite(VertexSet::range(12, 4, 8), VertexSet::range(12, 8, 12));
  const AuxH empty = build_H(std::move(no_v).build(), m, v);
  for (const auto& row : empty.rows) CHECK(row.empty());

  CHECK_THROWS_AS(build_H(tri, {{4, 8}, {4, 9}}, v), std::invalid_argument);
  CHECK_THROWS_AS(build_H(tri, {{0, 8}}, v), std::invalid_argument);

  for (std::uint64_t s = 0; s < 20; ++s) {
    const tt::CherryFixture fx = tt::cherry_fixture(20, 20, 0.6, Seed(s));
    std::vector<Edge> mm;
    const auto us = fx.cherry.u.to_vector(), ws = fx.cherry.w.to_vector();
    for (std::size_t i = 0; i < us.size(); ++i) mm.push_back({us[i], ws[i]});
    const AuxH hh = build_H(fx.graph, mm, fx.cherry.v);
    for (std::size_t i = 0; i < mm.size(); ++i) {
      fx.cherry.v.for_each([&](Vertex x) {
        CHECK(hh.rows[i].contains(x) == (fx.graph.has_edge(x, mm[i].u) && fx.graph.has_edge(x, mm[i].v)));
      });
    }
    GraphBuilder host(fx.graph);
    for (const Edge& e : mm) host.add_edge(e.u, e.v);
    CHECK_FALSE(packing_error(std::move(host).build(), triangles_from_H(hh, maximum_matching(hh.rows))));
  }
}

TEST_CASE("cherry factor extremes") {
  const Graph tri = complete_multipartite({30, 30, 30});
  const Cherry c{VertexSet::range(90, 30, 60), VertexSet::range(90, 0, 30), VertexSet::range(90, 60, 90)};
  const PackResult full = cherry_factor(tri, c, 1.0, CherryMode::balanced, Seed(1));
  CHECK(full.packing.size() == 30);
  CHECK_FALSE(packing_error(graph_union(tri, full.revealed), full.packing));

  const tt::CherryFixture fx = tt::cherry_fixture(60, 60, 0.5, Seed(2));
  CHECK(cherry_factor(fx.graph, fx.cherry, 0.0, CherryMode::balanced, Seed(3)).packing.size() == 0);
}

TEST_CASE("split probabilities") {
  const SplitProbabilities sym = solve_split(200, 200, 0.02, 0.15);
  CHECK(sym.q1 == doctest::Approx(sym.q2));
  const double r = 1.0 - (0.02 + 0.15) / 2.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t v = 400;
    const std::size_t u = 300 + static_cast<std::size_t>(i);
    const SplitProbabilities q = solve_split(u, v, 0.02, 0.15);
    CHECK(q.q1 > 1.0 / 7.0);
    CHECK(q.q1 < 3.0 / 7.0);
    CHECK(q.q2 > 1.0 / 7.0);
    CHECK(q.q2 < 3.0 / 7.0);
    // Expected leaf sizes equal r times the expected centre sizes.
    const double du = static_cast<double>(u), dv = static_cast<double>(v);
    CHECK(std::abs(q.q2 * du - r * (1.0 - 2.0 * q.q1) * dv) < 1e-9 * dv);
    CHECK(std::abs(q.q1 * dv - r * (1.0 - 2.0 * q.q2) * du) < 1e-9 * dv);
  }
}

TEST_CASE("dense pair factor") {
  const VertexSet v = VertexSet::range(450, 0, 240);
  const VertexSet u = v.complement();
  std::size_t hits = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = random_bipartite(u, v, 0.6, Seed(40 + s));
    const PackResult r = pair_factor(g, u, v, 60.0 / 240.0, Seed(s));
    CHECK_FALSE(packing_error(graph_union(g, r.revealed), r.packing));
    hits += r.packing.size() == 150 ? 1 : 0;
  }
  CHECK(hits >= 18);
}

TEST_CASE("balancing amount") {
  CHECK(balance_amount(99, 100, 0.1) == 0);
  CHECK(balance_amount(92, 100, 0.05) == 2);
  CHECK(92.0 - 2.0 >= 0.95 * (100.0 - 8.0));
  for (std::size_t u = 60; u <= 100; ++u) {
    const std::size_t m = balance_amount(u, 100, 0.05);
    CHECK(static_cast<double>(u) - static_cast<double>(m) >= 0.95 * (100.0 - 4.0 * static_cast<double>(m)) - 1e-9);
    if (m > 0) {
      const double prev = static_cast<double>(m - 1);
      CHECK(static_cast<double>(u) - prev < 0.95 * (100.0 - 4.0 * prev));
    }
  }
  const tt::CherryFixture fx = tt::cherry_fixture(30, 30, 0.8, Seed(5));
  const BalanceResult bal = balance_cherry(fx.graph, fx.cherry, 0.1, Graph(fx.graph.n()));
  CHECK(bal.m == 0);
  CHECK(bal.packing.size() == 0);
}

TEST_CASE("balancing cherry moves m leaves from each side") {
  const std::size_t nv = 100, nu = 92;
  const tt::CherryFixture fx = tt::cherry_fixture(nv, nu, 0.9, Seed(6));
  const Graph overlay = gnp_within(fx.cherry.v, 0.5, Seed(7));
  const BalanceResult bal = balance_cherry(fx.graph, fx.cherry, 0.05, overlay);
  CHECK(bal.m == 2);
  CHECK(bal.packing.size() == 4);
  CHECK(bal.cherry.v.size() == nv - 8);
  CHECK(bal.cherry.u.size() == nu - 2);
  CHECK_FALSE(packing_error(graph_union(fx.graph, overlay), bal.packing));
}

TEST_CASE("extremal pack at p = 1") {
  const Graph g = complete_bipartite(30, 90);
  const VertexSet a = VertexSet::range(90, 0, 30);
  const PackResult r = extremal_pack(g, a, a.complement(), 1.0 / 3.0, 0.05, 1.0, Seed(1));
  CHECK(r.packing.size() == 30);
  CHECK_THROWS_AS(extremal_pack(g, a, a, 1.0 / 3.0, 0.05, 1.0, Seed(1)), std::invalid_argument);
}

TEST_CASE("perturbed pack extremes") {
  CHECK(perturbed_pack(complete_graph(30), 0.0, Seed(1)).packing.size() == 10);
  CHECK(perturbed_pack(Graph(30), 0.0, Seed(1)).packing.size() == 0);
}

// Every pipeline output is a packing of g and its revealed edges, and never
// beats the exact optimum of that union.
TEST_CASE("pipeline soundness against the exact oracle") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    Stream pick{Seed(s)};
    const std::size_t n = 3 + pick.below(10);
    const Graph g = gnp(n, 0.2 + 0.7 * pick.uniform(), Seed(2000 + s));
    const double p = pick.uniform();
    const PackResult r = perturbed_pack(g, p, Seed(s));
    const Graph host = graph_union(g, r.revealed);
    CHECK_FALSE(packing_error(host, r.packing));
    CHECK(r.packing.size() <= max_triangle_packing_exact(host).packing.size());
    const PackResult rg = round_greedy_triangles(g, std::max<std::size_t>(1, g.min_degree()), p, Seed(s));
    CHECK_FALSE(packing_error(graph_union(g, rg.revealed), rg.packing));
  }
}
