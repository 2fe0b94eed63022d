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

// Constructive triangle packing in g ∪ G(n,p).
//
// Every randomised routine takes the total edge probability p and a Seed. It
// reveals independent rounds G(., p_i) on the pair sets it needs, with the
// p_i summing to at most p, and returns the union of everything it revealed
// so the packing can be checked against g ∪ revealed. Routines never reveal a
// round that the input makes unnecessary; the split actually used is listed
// in the notes.

#ifndef TRIPACK_PACKING_HPP_
#define TRIPACK_PACKING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tripack/graph.hpp"
#include "tripack/oracle.hpp"
#include "tripack/rng.hpp"

namespace tripack {

struct PackResult {
  TrianglePacking packing;
  Graph revealed;  // union of all revealed random edges, on g.n() vertices
  std::size_t target = 0;
  std::vector<std::string> notes;

  bool reached_target() const noexcept { return packing.size() >= target; }
};

// ---------------------------------------------------------------------------
// Greedy covering

struct CoverResult {
  TrianglePacking packing;
  VertexSet uncovered;
};

// Targets in increasing order; target v takes the lexicographically first
// edge xy of `edges` with x, y in N_g(v) ∩ pool, both still unused.
CoverResult greedy_cover(const Graph& g, const VertexSet& targets, const VertexSet& pool,
                         const Graph& edges);

// As greedy_cover with x drawn from pool_x and y from pool_y.
CoverResult greedy_cover_split(const Graph& g, const VertexSet& targets, const VertexSet& pool_x,
                               const VertexSet& pool_y, const Graph& edges);

// ---------------------------------------------------------------------------
// Stars

struct Star {
  Vertex centre = 0;
  std::vector<Vertex> leaves;  // increasing
};

struct StarFamily {
  std::vector<Star> stars;
  std::size_t min_leaves = 2;
  std::size_t max_leaves = 0;
  double scale = 0.0;  // eps * m, the base of the dyadic buckets
  std::size_t moves = 0;
  std::vector<std::string> notes;

  std::uint64_t objective() const;  // sum of squared leaf counts
};

// nullopt when the stars are vertex-disjoint host stars within the declared
// leaf bounds.
std::optional<std::string> star_family_error(const Graph& g, const StarFamily& family);

// Local search maximising the sum of squared leaf counts over stars with
// max(2, ceil(eps m)) .. floor(eps sqrt n) leaves. Moves: (i) new star at an
// uncovered vertex, (ii) extend a non-full star into the uncovered region,
// (iii) move a leaf with enough uncovered neighbours to centre its own star.
StarFamily find_star_family(const Graph& g, std::size_t m, double eps, std::size_t s);

// Dyadic bucket index i >= 1 with 2^(i-1) scale <= leaves < 2^i scale.
std::size_t star_bucket(std::size_t leaves, double scale);

PackResult stars_to_triangles(const Graph& g, const StarFamily& family, double p, Seed seed);

// ---------------------------------------------------------------------------
// Bipartitions and round greedy

struct Bipartition {
  VertexSet a;
  VertexSet b;  // |b| >= |a|
};

// Local-move maximum cut from `initial_a` (default: greedy placement in index
// order). At return 2 * cross-degree(v) >= deg(v) for every v.
Bipartition max_cut_bipartition(const Graph& g,
                                const std::optional<VertexSet>& initial_a = std::nullopt);

struct RoundGreedyOptions {
  std::size_t block_size = 0;  // 0 selects ceil(m / 16)
};

struct RoundGreedyTrace {
  std::size_t rounds = 0;
  std::size_t per_round = 0;     // s
  std::size_t block_size = 0;
  std::vector<std::size_t> selected_after_round;   // |A'|
  std::vector<std::size_t> b0_after_round;         // |B_0|
};

PackResult round_greedy_triangles(const Graph& g, std::size_t m, double p, Seed seed,
                                  const RoundGreedyOptions& options = {},
                                  RoundGreedyTrace* trace = nullptr);

// ---------------------------------------------------------------------------
// Sublinear dispatcher

enum class SublinearRoute { high_degree, harvest, stars, round_greedy, none };

const char* to_string(SublinearRoute route);

struct SublinearOptions {
  double star_eps = 1.0 / 48.0;
  std::size_t star_s = 8;
  std::optional<SublinearRoute> force_route;  // overrides the m' thresholds
};

PackResult sublinear_pack(const Graph& g, std::size_t m, double p, Seed seed,
                          const SublinearOptions& options = {});

// ---------------------------------------------------------------------------
// Auxiliary graphs

// H_G(M, V): left item i is matching edge i; its row holds the v-vertices
// adjacent to both endpoints.
struct AuxH {
  std::vector<Edge> matching;
  std::vector<VertexSet> rows;
};

struct AuxGraphs {
  Graph f;
  std::optional<Graph> f_x;
  AuxH h;
};

// Edge uw (u in u_side, w in w_side) iff |N(u) ∩ N(w) ∩ v| >= d^2 |v| / 2.
Graph build_F(const Graph& g, const VertexSet& u_side, const VertexSet& w_side,
              const VertexSet& v, double d);

// F-edges uw with |N(u) ∩ N(w) ∩ x| >= d^2 |x| / 2.
Graph good_for_X(const Graph& g, const Graph& f, const VertexSet& x, double d);

// Reveals each F-edge with probability reveal_p, then runs the uniform random
// greedy matching process on the revealed edges until `target` edges are
// chosen or none remain. Edges are returned in the order chosen; the revealed
// graph is stored in `revealed` when given.
std::vector<Edge> random_greedy_matching(const Graph& f, double reveal_p, std::size_t target,
                                         Seed seed, Graph* revealed = nullptr);

AuxH build_H(const Graph& g, const std::vector<Edge>& matching, const VertexSet& v);

// One triangle per matched H-row.
TrianglePacking triangles_from_H(const AuxH& h, const IndexMatching& matching);

// ---------------------------------------------------------------------------
// Cherries and pairs

// Centre V with leaves U and W; (V,U) and (V,W) are the dense pairs.
struct Cherry {
  VertexSet u;
  VertexSet v;
  VertexSet w;
};

enum class CherryMode { balanced, unbalanced };

struct CherryOptions {
  double d = 0.5;        // super-regularity density used by F and H
  double eps = 0.1;      // for the sampled precondition report
  double delta = 0.02;   // greedy matching stops (1 - delta) short of full
  double delta0 = 0.15;  // unbalanced lower bound (1 - delta0)|V| <= |U|
  std::size_t precondition_trials = 200;
};

PackResult cherry_factor(const Graph& g, const Cherry& cherry, double p, CherryMode mode,
                         Seed seed, const CherryOptions& options = {});

// Split fractions for pair_factor: each v-vertex joins U_2 and W_2 with
// probability q1 each, each u-vertex joins U_1 and W_1 with probability q2
// each, so that E|U_i| = E|W_i| = (1 - (delta0 + delta)/2) E|V_i|.
struct SplitProbabilities {
  double q1 = 0.0;
  double q2 = 0.0;
};

SplitProbabilities solve_split(std::size_t u_size, std::size_t v_size, double delta,
                               double delta0);

PackResult pair_factor(const Graph& g, const VertexSet& u, const VertexSet& v, double p,
                       Seed seed, const CherryOptions& options = {});

// Smallest m >= 0 with |U| - m >= (1 - delta0)(|V| - 4m).
std::size_t balance_amount(std::size_t u_size, std::size_t v_size, double delta0);

struct BalanceResult {
  TrianglePacking packing;
  Cherry cherry;
  std::size_t m = 0;
  std::vector<std::string> notes;
};

BalanceResult balance_cherry(const Graph& g, const Cherry& cherry, double delta0,
                             const Graph& overlay);

// ---------------------------------------------------------------------------
// Pipelines

struct ExtremalOptions {
  CherryOptions cherry;
  // Ã/B̃ threshold is |B_1| - min(low_degree_factor * beta n, |B_1| / 4)
  // (resp. |A_1| / 2 on the B side).
  double low_degree_factor = 7.0;
};

PackResult extremal_pack(const Graph& g, const VertexSet& a, const VertexSet& b, double alpha,
                         double beta, double p, Seed seed, const ExtremalOptions& options = {});

struct PerturbedOptions {
  double beta = 0.05;
  ExtremalOptions extremal;
  SublinearOptions sublinear;
};

PackResult perturbed_pack(const Graph& g, double p, Seed seed,
                          const PerturbedOptions& options = {});

}  // namespace tripack

#endif  // TRIPACK_PACKING_HPP_
