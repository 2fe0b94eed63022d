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
#include "tripack/regularity.hpp"
#include "tripack/stability.hpp"

namespace tripack {
namespace {

// Density a dense pair must reach before pair_factor is attempted.
constexpr double kDensePair = 0.5;

PackResult greedy_member(const Graph& g, std::size_t target, double p, Seed seed) {
  PackResult r;
  r.target = target;
  r.revealed = gnp(g.n(), p, seed.derive(detail::kTagPortfolio, 1));
  r.packing = greedy_triangle_packing(graph_union(g, r.revealed));
  r.notes.push_back("greedy on g and one overlay at p " + detail::fmt(p));
  return detail::finish(g, std::move(r), "perturbed_pack");
}

// The max-cut pair trimmed to |u| + |v| divisible by 3 by dropping the
// lowest cross-degree vertices of the larger side; nullopt when the pair is
// sparse or the size ratio leaves [3/4, 1].
std::optional<std::pair<VertexSet, VertexSet>> dense_pair(const Graph& g,
                                                          std::vector<std::string>& notes) {
  const Bipartition cut = max_cut_bipartition(g);
  if (cut.a.empty()) return std::nullopt;
  VertexSet u = cut.a;
  VertexSet v = cut.b;
  const std::size_t drop = (u.size() + v.size()) % 3;
  std::vector<std::pair<std::size_t, Vertex>> ranked;
  v.for_each([&](Vertex x) { ranked.emplace_back(degree_into(g, x, u), x); });
  std::sort(ranked.begin(), ranked.end());
  for (std::size_t i = 0; i < drop && i < ranked.size(); ++i) v.erase(ranked[i].second);
  if (u.size() > v.size()) std::swap(u, v);
  const double dens = u.empty() || v.empty() ? 0.0 : density(g, u, v);
  if (dens < kDensePair || 4 * u.size() < 3 * v.size()) {
    notes.push_back("max-cut pair not used: density " + detail::fmt(dens) + ", sizes " +
                    std::to_string(u.size()) + "/" + std::to_string(v.size()));
    return std::nullopt;
  }
  return std::make_pair(u, v);
}

}  // namespace

PackResult perturbed_pack(const Graph& g, double p, Seed seed, const PerturbedOptions& options) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("perturbed_pack: p outside [0,1]");
  const std::size_t n = g.n();
  const std::size_t m = n == 0 ? 0 : std::min(g.min_degree(), n / 3);
  if (m == 0) return detail::empty_result(n, 0, "m = min(min degree, floor(n/3)) is 0");

  if (n < 9) {
    PackResult r = greedy_member(g, m, p, seed);
    r.notes.insert(r.notes.begin(), "route greedy (n < 9)");
    return r;
  }
  if (256 * m <= n) {
    PackResult r = sublinear_pack(g, m, p, seed, options.sublinear);
    r.notes.insert(r.notes.begin(), "route sublinear, m " + std::to_string(m));
    return r;
  }
  const double alpha = static_cast<double>(m) / static_cast<double>(n);
  if (auto part = find_stable_partition(g, alpha, options.beta)) {
    PackResult r = extremal_pack(g, part->a, part->b, alpha, options.beta, p, seed, options.extremal);
    r.target = m;
    r.notes.insert(r.notes.begin(), "route extremal via " + part->seed_rule + " partition, alpha " +
                                        detail::fmt(alpha));
    return r;
  }

  // Portfolio: each member sees its own overlay at the full p, so the best
  // member is not a single G(n,p) draw.
  std::vector<std::string> notes{"route portfolio, m " + std::to_string(m)};
  std::vector<PackResult> members;
  members.push_back(greedy_member(g, m, p, seed));
  members.push_back(round_greedy_triangles(g, m, p, seed.derive(detail::kTagPortfolio, 2)));
  if (auto pair = dense_pair(g, notes)) {
    members.push_back(pair_factor(g, pair->first, pair->second, p,
                                  seed.derive(detail::kTagPortfolio, 3), options.extremal.cherry));
  }
  const char* names[] = {"greedy", "round greedy", "pair"};
  std::size_t best = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    notes.push_back(std::string(names[i]) + " packed " + std::to_string(members[i].packing.size()));
    if (members[i].packing.size() > members[best].packing.size()) best = i;
  }
  PackResult r = std::move(members[best]);
  r.target = m;
  notes.push_back(std::string("kept ") + names[best]);
  r.notes.insert(r.notes.begin(), notes.begin(), notes.end());
  return detail::finish(g, std::move(r), "perturbed_pack");
}

}  // namespace tripack
