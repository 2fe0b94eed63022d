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
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "internal.hpp"
#include "tripack/generators.hpp"
#include "tripack/regularity.hpp"

namespace tripack {
namespace {

constexpr double kTol = 1e-9;

void check_cherry(const Graph& g, const Cherry& c, const char* who) {
  const std::size_t n = g.n();
  if (c.u.universe() != n || c.v.universe() != n || c.w.universe() != n) {
    throw std::invalid_argument(std::string(who) + ": vertex set universe differs from n");
  }
  if (c.u.intersects(c.v) || c.u.intersects(c.w) || c.v.intersects(c.w)) {
    throw std::invalid_argument(std::string(who) + ": cherry sides overlap");
  }
  if (c.u.size() != c.w.size()) throw std::invalid_argument(std::string(who) + ": need |U| = |W|");
}

bool leaf_ratio_ok(std::size_t leaves, std::size_t centre, double delta, double delta0) {
  const auto l = static_cast<double>(leaves);
  const auto c = static_cast<double>(centre);
  return (1.0 - delta0) * c <= l + kTol && l <= (1.0 - delta) * c + kTol;
}

// Left items are the u-vertices of `f` in increasing order.
std::vector<VertexSet> left_rows(const Graph& f, const std::vector<Vertex>& left,
                                 const VertexSet& right) {
  std::vector<VertexSet> rows;
  rows.reserve(left.size());
  for (Vertex x : left) rows.push_back(f.neighbors(x) & right);
  return rows;
}

// Maximum U-W matching in `f` that starts from (and so never shrinks) `seed`.
std::vector<Edge> augment(const Graph& f, const VertexSet& u, const VertexSet& w,
                          const std::vector<Edge>& seed) {
  const std::vector<Vertex> left = u.to_vector();
  std::vector<std::optional<Vertex>> initial(left.size());
  for (const Edge& e : seed) {
    const Vertex a = u.contains(e.u) ? e.u : e.v;
    const Vertex b = a == e.u ? e.v : e.u;
    const auto it = std::lower_bound(left.begin(), left.end(), a);
    initial[static_cast<std::size_t>(it - left.begin())] = b;
  }
  const IndexMatching m = maximum_matching(left_rows(f, left, w), initial);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (m.left_to_right[i]) out.push_back({left[i], *m.left_to_right[i]});
  }
  return out;
}

VertexSet endpoints(const std::vector<Edge>& edges, std::size_t n) {
  VertexSet out(n);
  for (const Edge& e : edges) {
    out.insert(e.u);
    out.insert(e.v);
  }
  return out;
}

void precondition_report(const Graph& g, const Cherry& c, const CherryOptions& options, Seed seed,
                         std::vector<std::string>& notes) {
  if (options.precondition_trials == 0 || c.v.empty() || c.u.empty()) return;
  const std::array<std::pair<const char*, const VertexSet*>, 2> legs{{{"(V,U)", &c.u},
                                                                     {"(V,W)", &c.w}}};
  std::uint64_t index = 0;
  for (const auto& [name, leaf] : legs) {
    const SuperRegularity r =
        is_super_regular(g, c.v, *leaf, options.eps, options.d,
                         Sampled{options.precondition_trials, seed.derive(detail::kTagCherry, 90 + index++)});
    notes.push_back(std::string("precondition ") + name + (r.holds ? " passed" : " failed: " + r.reason) +
                    " (sampled)");
  }
}

}  // namespace

PackResult cherry_factor(const Graph& g, const Cherry& cherry, double p, CherryMode mode, Seed seed,
                         const CherryOptions& options) {
  check_cherry(g, cherry, "cherry_factor");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("cherry_factor: p outside [0,1]");
  const std::size_t n = g.n();
  const std::size_t nu = cherry.u.size();
  const std::size_t nv = cherry.v.size();
  if (mode == CherryMode::balanced) {
    if (nu != nv) throw std::invalid_argument("cherry_factor: balanced mode needs |U| = |V| = |W|");
  } else {
    if ((nv + 2 * nu) % 3 != 0) {
      throw std::invalid_argument("cherry_factor: |U| + |V| + |W| must be divisible by 3");
    }
    if (!leaf_ratio_ok(nu, nv, options.delta, options.delta0)) {
      throw std::invalid_argument("cherry_factor: need (1 - delta0)|V| <= |U| <= (1 - delta)|V|");
    }
  }
  if (nv == 0) return detail::empty_result(n, 0, "empty cherry");

  PackResult result;
  result.target = (nv + 2 * nu) / 3;
  precondition_report(g, cherry, options, seed, result.notes);
  const Graph f = build_F(g, cherry.u, cherry.w, cherry.v, options.d);
  result.notes.push_back("F has " + std::to_string(f.edge_count()) + " edges, min degree " +
                         std::to_string(f.min_degree()));
  GraphBuilder revealed(n);
  std::vector<Edge> matching;

  VertexSet centre_free = cherry.v;
  if (mode == CherryMode::balanced) {
    // Two U-W rounds at p/2: greedy matching, then the leftovers.
    const double half = p / 2.0;
    const auto goal = static_cast<std::size_t>(std::ceil((1.0 - options.delta) * static_cast<double>(nv) - kTol));
    Graph first;
    matching = random_greedy_matching(f, half, goal, seed.derive(detail::kTagCherry, 1), &first);
    revealed.add_graph(first);
    const VertexSet covered = endpoints(matching, n);
    const VertexSet u_left = cherry.u - covered;
    const VertexSet w_left = cherry.w - covered;
    GraphBuilder leftover_f(n);
    u_left.for_each([&](Vertex x) {
      (f.neighbors(x) & w_left).for_each([&](Vertex y) { leftover_f.add_edge(x, y); });
    });
    const Graph second =
        random_subgraph(std::move(leftover_f).build(), half, seed.derive(detail::kTagCherry, 2));
    revealed.add_graph(second);
    const BipartiteMatching rest = max_bipartite_matching(second, u_left, w_left);
    result.notes.push_back("p/2 per round; greedy matching " + std::to_string(matching.size()) +
                           ", leftover matching " + std::to_string(rest.size()) + " of " +
                           std::to_string(u_left.size()));
    matching.insert(matching.end(), rest.pairs.begin(), rest.pairs.end());
    if (matching.size() < nu) {
      const Graph both = graph_union(first, second);
      matching = augment(both, cherry.u, cherry.w, matching);
      result.notes.push_back("augmented U-W matching to " + std::to_string(matching.size()));
    }
  } else {
    // One U-W round and one round inside V, each at p on its own pairs.
    const std::size_t per_side = (nv - nu) / 3;
    const std::size_t keep = nu - per_side;
    const auto goal = static_cast<std::size_t>(std::ceil((1.0 - options.delta) * static_cast<double>(nu) - kTol));
    Graph first;
    matching = random_greedy_matching(f, p, std::max(goal, keep), seed.derive(detail::kTagCherry, 1), &first);
    revealed.add_graph(first);
    if (matching.size() < keep) {
      matching = augment(first, cherry.u, cherry.w, matching);
      result.notes.push_back("augmented U-W matching to " + std::to_string(matching.size()));
    }
    if (matching.size() > keep) matching.resize(keep);
    const VertexSet leftovers = (cherry.u | cherry.w) - endpoints(matching, n);
    const Graph inside = gnp_within(cherry.v, p, seed.derive(detail::kTagCherry, 3));
    revealed.add_graph(inside);
    const CoverResult cover = greedy_cover(g, leftovers, cherry.v, inside);
    result.packing = cover.packing;
    centre_free -= cover.packing.covered(n);
    result.notes.push_back("p per round; matching kept " + std::to_string(matching.size()) +
                           ", leftovers " + std::to_string(leftovers.size()) + ", uncovered " +
                           std::to_string(cover.uncovered.size()));
  }

  AuxH h = build_H(g, matching, centre_free);
  const IndexMatching hm = maximum_matching(h.rows);
  result.packing.append(triangles_from_H(h, hm));
  result.notes.push_back("H matching " + std::to_string(hm.size) + " of " +
                         std::to_string(matching.size()));
  result.revealed = std::move(revealed).build();
  return detail::finish(g, std::move(result), "cherry_factor");
}

SplitProbabilities solve_split(std::size_t u_size, std::size_t v_size, double delta, double delta0) {
  if (v_size == 0 || u_size == 0) throw std::invalid_argument("solve_split: empty side");
  const double r = 1.0 - (delta0 + delta) / 2.0;
  const double x = static_cast<double>(u_size) / static_cast<double>(v_size);
  const double denom = x * (1.0 - 4.0 * r * r);
  if (std::abs(denom) < kTol) throw std::invalid_argument("solve_split: singular system");
  SplitProbabilities q;
  q.q2 = r * (1.0 - 2.0 * r * x) / denom;
  q.q1 = r * x * (1.0 - 2.0 * q.q2);
  if (!(q.q1 > 0.0 && q.q1 < 0.5 && q.q2 > 0.0 && q.q2 < 0.5)) {
    throw std::invalid_argument("solve_split: split probabilities outside (0, 1/2)");
  }
  return q;
}

namespace {

// Moves the fewest vertices between parts so that part i has targets[i]
// members; surplus leaves from the top of each part.
void rebalance(std::array<std::vector<Vertex>, 3>& parts, const std::array<std::size_t, 3>& targets) {
  std::vector<Vertex> pool;
  for (std::size_t i = 0; i < 3; ++i) {
    while (parts[i].size() > targets[i]) {
      pool.push_back(parts[i].back());
      parts[i].pop_back();
    }
  }
  std::sort(pool.begin(), pool.end());
  std::size_t next = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    while (parts[i].size() < targets[i]) parts[i].push_back(pool[next++]);
    std::sort(parts[i].begin(), parts[i].end());
  }
}

struct Sizes {
  std::size_t leaves1;  // |U_1| = |W_1|
  std::size_t leaves2;  // |U_2| = |W_2|
};

// Feasible leaf sizes nearest the realised split. Centre sizes follow:
// |V_1| = |v| - 2 leaves2 and |V_2| = |u| - 2 leaves1.
std::optional<Sizes> nearest_sizes(std::size_t nu, std::size_t nv, double realised1, double realised2,
                                   double delta, double delta0) {
  std::optional<Sizes> best;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t l1 = 1; 2 * l1 < nu; ++l1) {
    const std::size_t c2 = nu - 2 * l1;
    for (std::size_t l2 = 1; 2 * l2 < nv; ++l2) {
      const std::size_t c1 = nv - 2 * l2;
      if ((c1 + 2 * l1) % 3 != 0) continue;
      if (!leaf_ratio_ok(l1, c1, delta, delta0) || !leaf_ratio_ok(l2, c2, delta, delta0)) continue;
      const double cost = std::abs(static_cast<double>(l1) - realised1) +
                          std::abs(static_cast<double>(l2) - realised2);
      if (cost < best_cost - kTol) {
        best_cost = cost;
        best = Sizes{l1, l2};
      }
    }
  }
  return best;
}

}  // namespace

PackResult pair_factor(const Graph& g, const VertexSet& u, const VertexSet& v, double p, Seed seed,
                       const CherryOptions& options) {
  const std::size_t n = g.n();
  if (u.universe() != n || v.universe() != n) throw std::invalid_argument("pair_factor: universe");
  if (u.intersects(v)) throw std::invalid_argument("pair_factor: sides overlap");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("pair_factor: p outside [0,1]");
  const std::size_t nu = u.size();
  const std::size_t nv = v.size();
  if (nu > nv || 4 * nu < 3 * nv) throw std::invalid_argument("pair_factor: need 3|v|/4 <= |u| <= |v|");
  if ((nu + nv) % 3 != 0) throw std::invalid_argument("pair_factor: |u| + |v| must be divisible by 3");
  if (nv == 0) return detail::empty_result(n, 0, "empty pair");

  const SplitProbabilities q = solve_split(nu, nv, options.delta, options.delta0);
  Stream stream(seed.derive(detail::kTagPair, 0));
  // Part order: leaf, leaf, centre. Cherry 1 has centre in v and leaves in u;
  // cherry 2 the reverse.
  std::array<std::vector<Vertex>, 3> in_u;
  std::array<std::vector<Vertex>, 3> in_v;
  auto split = [&](const VertexSet& side, double qq, std::array<std::vector<Vertex>, 3>& parts) {
    side.for_each([&](Vertex x) {
      const double r = stream.uniform();
      parts[r < qq ? 0 : (r < 2 * qq ? 1 : 2)].push_back(x);
    });
  };
  split(v, q.q1, in_v);
  split(u, q.q2, in_u);

  PackResult result;
  result.target = (nu + nv) / 3;
  result.notes.push_back("q1 " + detail::fmt(q.q1) + ", q2 " + detail::fmt(q.q2));
  const double realised1 = static_cast<double>(in_u[0].size() + in_u[1].size()) / 2.0;
  const double realised2 = static_cast<double>(in_v[0].size() + in_v[1].size()) / 2.0;
  const auto sizes = nearest_sizes(nu, nv, realised1, realised2, options.delta, options.delta0);
  if (!sizes) {
    result.revealed = Graph(n);
    result.notes.push_back("no admissible cherry sizes");
    return result;
  }
  rebalance(in_u, {sizes->leaves1, sizes->leaves1, nu - 2 * sizes->leaves1});
  rebalance(in_v, {sizes->leaves2, sizes->leaves2, nv - 2 * sizes->leaves2});

  const Cherry first{VertexSet::of(n, in_u[0]), VertexSet::of(n, in_v[2]), VertexSet::of(n, in_u[1])};
  const Cherry second{VertexSet::of(n, in_v[0]), VertexSet::of(n, in_u[2]), VertexSet::of(n, in_v[1])};
  // The two cherries reveal disjoint pair sets, so each gets the full p.
  GraphBuilder revealed(n);
  std::uint64_t index = 1;
  for (const Cherry* c : {&first, &second}) {
    PackResult part = cherry_factor(g, *c, p, CherryMode::unbalanced,
                                    seed.derive(detail::kTagPair, index++), options);
    result.packing.append(part.packing);
    revealed.add_graph(part.revealed);
    const std::string tag = "cherry " + std::to_string(index - 1) + ": ";
    for (const auto& note : part.notes) result.notes.push_back(tag + note);
  }
  result.revealed = std::move(revealed).build();
  return detail::finish(g, std::move(result), "pair_factor");
}

std::size_t balance_amount(std::size_t u_size, std::size_t v_size, double delta0) {
  if (!(delta0 >= 0.0 && delta0 < 1.0)) throw std::invalid_argument("balance_amount: delta0 outside [0,1)");
  for (std::size_t m = 0; 4 * m <= v_size && m <= u_size; ++m) {
    const double lhs = static_cast<double>(u_size - m);
    const double rhs = (1.0 - delta0) * static_cast<double>(v_size - 4 * m);
    if (lhs >= rhs - kTol) return m;
  }
  throw std::invalid_argument("balance_amount: no admissible m");
}

BalanceResult balance_cherry(const Graph& g, const Cherry& cherry, double delta0, const Graph& overlay) {
  check_cherry(g, cherry, "balance_cherry");
  if (overlay.n() != g.n()) throw std::invalid_argument("balance_cherry: overlay size differs from n");
  BalanceResult out;
  out.cherry = cherry;
  out.m = balance_amount(cherry.u.size(), cherry.v.size(), delta0);
  if (out.m == 0) return out;
  // m triangles from each leaf side, each with two centre vertices joined by
  // an overlay edge.
  VertexSet centre = cherry.v;
  for (VertexSet* leaf : {&out.cherry.u, &out.cherry.w}) {
    std::size_t made = 0;
    for (auto x = leaf->first(); x && made < out.m; x = leaf->next_after(*x)) {
      const VertexSet room = g.neighbors(*x) & centre;
      bool done = false;
      for (auto y = room.first(); y && !done; y = room.next_after(*y)) {
        if (const auto z = (overlay.neighbors(*y) & room).first()) {
          out.packing.triangles.push_back(make_triangle(*x, *y, *z));
          centre.erase(*y);
          centre.erase(*z);
          done = true;
        }
      }
      if (done) ++made;
    }
    if (made < out.m) {
      out.notes.push_back("covered only " + std::to_string(made) + " of " + std::to_string(out.m) +
                          " leaf vertices");
    }
  }
  const VertexSet used = out.packing.covered(g.n());
  out.cherry.u -= used;
  out.cherry.w -= used;
  out.cherry.v -= used;
  require_valid_packing(graph_union(g, overlay), out.packing, "balance_cherry");
  return out;
}

}  // namespace tripack
