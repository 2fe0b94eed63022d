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
#include <cmath>
#include <stdexcept>

#include "internal.hpp"
#include "tripack/generators.hpp"

namespace tripack {

std::uint64_t StarFamily::objective() const {
  std::uint64_t total = 0;
  for (const Star& s : stars) total += static_cast<std::uint64_t>(s.leaves.size()) * s.leaves.size();
  return total;
}

std::optional<std::string> star_family_error(const Graph& g, const StarFamily& family) {
  VertexSet seen(g.n());
  for (std::size_t i = 0; i < family.stars.size(); ++i) {
    const Star& s = family.stars[i];
    const std::string tag = "star " + std::to_string(i);
    if (s.leaves.size() < family.min_leaves || s.leaves.size() > family.max_leaves) {
      return tag + " has " + std::to_string(s.leaves.size()) + " leaves outside [" +
             std::to_string(family.min_leaves) + ", " + std::to_string(family.max_leaves) + "]";
    }
    if (s.centre >= g.n() || seen.contains(s.centre)) return tag + " reuses its centre";
    seen.insert(s.centre);
    for (Vertex leaf : s.leaves) {
      if (leaf >= g.n() || seen.contains(leaf)) return tag + " reuses leaf " + std::to_string(leaf);
      if (!g.has_edge(s.centre, leaf)) return tag + " has a non-adjacent leaf";
      seen.insert(leaf);
    }
  }
  return std::nullopt;
}

namespace {

class StarSearch {
 public:
  StarSearch(const Graph& g, std::size_t min_leaves, std::size_t max_leaves)
      : g_(g), min_(min_leaves), max_(max_leaves), free_(VertexSet::full(g.n())) {}

  // Returns the number of improving moves applied.
  std::size_t run() {
    std::size_t moves = 0;
    bool progress = true;
    while (progress) {
      progress = false;
      progress |= sweep_new_stars(moves);
      progress |= sweep_extensions(moves);
      progress |= sweep_leaf_moves(moves);
    }
    return moves;
  }

  std::vector<Star> take() {
    std::vector<Star> out;
    for (auto& s : stars_) {
      if (!s.dead) out.push_back(std::move(s.star));
    }
    return out;
  }

 private:
  struct Slot {
    Star star;
    bool dead = false;
  };

  std::vector<Vertex> take_leaves(const VertexSet& options, std::size_t k) {
    std::vector<Vertex> leaves = options.lowest(k).to_vector();
    for (Vertex v : leaves) free_.erase(v);
    return leaves;
  }

  void commit(std::uint64_t before, std::size_t& moves) {
    const std::uint64_t after = objective();
    if (after <= before) throw std::logic_error("find_star_family: move did not raise the objective");
    objective_ = after;
    ++moves;
  }

  std::uint64_t objective() const {
    std::uint64_t total = 0;
    for (const auto& s : stars_) {
      if (!s.dead) total += static_cast<std::uint64_t>(s.star.leaves.size()) * s.star.leaves.size();
    }
    return total;
  }

  // (i) an uncovered vertex with >= min_ uncovered neighbours centres a new star.
  bool sweep_new_stars(std::size_t& moves) {
    bool any = false;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (!free_.contains(v)) continue;
      const VertexSet options = g_.neighbors(v) & free_;
      const std::size_t available = options.size();
      if (available < min_) continue;
      const std::uint64_t before = objective_;
      free_.erase(v);
      stars_.push_back({Star{v, take_leaves(options, std::min(available, max_))}, false});
      commit(before, moves);
      any = true;
    }
    return any;
  }

  // (ii) a star below max_ leaves whose centre sees an uncovered vertex grows.
  bool sweep_extensions(std::size_t& moves) {
    bool any = false;
    for (auto& slot : stars_) {
      if (slot.dead || slot.star.leaves.size() >= max_) continue;
      const VertexSet options = g_.neighbors(slot.star.centre) & free_;
      if (options.empty()) continue;
      const std::uint64_t before = objective_;
      const std::size_t room = max_ - slot.star.leaves.size();
      for (Vertex v : take_leaves(options, std::min(room, options.size()))) {
        slot.star.leaves.push_back(v);
      }
      std::sort(slot.star.leaves.begin(), slot.star.leaves.end());
      commit(before, moves);
      any = true;
    }
    return any;
  }

  // (iii) a leaf with enough uncovered neighbours becomes a centre. A star
  // below max_ needs more uncovered neighbours than it has leaves; a full star
  // needs max_ of them and must keep min_ leaves after losing the leaf.
  bool sweep_leaf_moves(std::size_t& moves) {
    bool any = false;
    for (std::size_t i = 0; i < stars_.size(); ++i) {
      if (stars_[i].dead) continue;
      const std::size_t g = stars_[i].star.leaves.size();
      for (std::size_t li = 0; li < stars_[i].star.leaves.size(); ++li) {
        const Vertex leaf = stars_[i].star.leaves[li];
        const VertexSet options = g_.neighbors(leaf) & free_;
        const std::size_t available = options.size();
        const bool full = g >= max_;
        if (!full && available < g + 1) continue;
        if (full && (available < max_ || max_ - 1 < min_)) continue;

        const std::uint64_t before = objective_;
        Star& old = stars_[i].star;
        old.leaves.erase(old.leaves.begin() + static_cast<std::ptrdiff_t>(li));
        if (old.leaves.size() < min_) {
          free_.insert(old.centre);
          for (Vertex v : old.leaves) free_.insert(v);
          stars_[i].dead = true;
        }
        Star fresh{leaf, take_leaves(options, std::min(available, max_))};
        stars_.push_back({std::move(fresh), false});
        commit(before, moves);
        any = true;
        break;
      }
    }
    return any;
  }

  const Graph& g_;
  std::size_t min_;
  std::size_t max_;
  VertexSet free_;
  std::vector<Slot> stars_;
  std::uint64_t objective_ = 0;
};

}  // namespace

StarFamily find_star_family(const Graph& g, std::size_t m, double eps, std::size_t s) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("find_star_family: eps must lie in (0,1)");
  if (m == 0) throw std::invalid_argument("find_star_family: m must be positive");
  if (s == 0) throw std::invalid_argument("find_star_family: s must be positive");
  const double n = static_cast<double>(g.n());
  StarFamily family;
  family.scale = eps * static_cast<double>(m);
  family.min_leaves = std::max<std::size_t>(
      2, static_cast<std::size_t>(std::ceil(family.scale - 1e-9)));
  family.max_leaves = static_cast<std::size_t>(std::floor(eps * std::sqrt(n) + 1e-9));

  // Hypotheses of the existence argument; the search itself does not need
  // them, so violations are reported rather than thrown.
  if (family.scale < 2.0) family.notes.push_back("eps*m = " + detail::fmt(family.scale) + " < 2");
  if (eps > 1.0 / (6.0 * static_cast<double>(s))) family.notes.push_back("eps > 1/(6s)");
  if (g.min_degree() < m) family.notes.push_back("min degree below m");
  const double gamma_cap = (0.5 - eps) / (2.0 * static_cast<double>(s));
  if (static_cast<double>(g.max_degree()) >= gamma_cap * n) {
    family.notes.push_back("max degree " + std::to_string(g.max_degree()) +
                           " not below (1/2 - eps)/(2s) n");
  }
  if (family.max_leaves < family.min_leaves) {
    family.notes.push_back("empty leaf range [" + std::to_string(family.min_leaves) + ", " +
                           std::to_string(family.max_leaves) + "]; family is empty");
    return family;
  }

  StarSearch search(g, family.min_leaves, family.max_leaves);
  family.moves = search.run();
  family.stars = search.take();
  const double goal = static_cast<double>(s) * eps * eps * n * static_cast<double>(m);
  family.notes.push_back("objective " + std::to_string(family.objective()) + " vs s eps^2 n m = " +
                         detail::fmt(goal));
  return family;
}

std::size_t star_bucket(std::size_t leaves, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("star_bucket: scale must be positive");
  if (static_cast<double>(leaves) < scale - 1e-9) {
    throw std::invalid_argument("star_bucket: star smaller than the bucket base");
  }
  std::size_t i = 1;
  while (static_cast<double>(leaves) >= std::ldexp(scale, static_cast<int>(i)) - 1e-9) ++i;
  return i;
}

PackResult stars_to_triangles(const Graph& g, const StarFamily& family, double p, Seed seed) {
  if (auto err = star_family_error(g, family)) {
    throw std::invalid_argument("stars_to_triangles: " + *err);
  }
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("stars_to_triangles: p outside [0,1]");
  PackResult result;
  result.target = family.stars.size();
  GraphBuilder revealed(g.n());
  const Seed round = seed.derive(detail::kTagStars);
  std::size_t truncated = 0;
  for (const Star& star : family.stars) {
    const std::size_t bucket = star_bucket(star.leaves.size(), family.scale);
    const auto keep = std::clamp<std::size_t>(
        static_cast<std::size_t>(
            std::ceil(std::ldexp(family.scale, static_cast<int>(bucket) - 1) - 1e-9)),
        2, star.leaves.size());
    if (keep < star.leaves.size()) ++truncated;
    const std::span<const Vertex> kept(star.leaves.data(), keep);
    const std::vector<Edge> edges = sample_edges_within(kept, p, round);
    for (const Edge& e : edges) revealed.add_edge(e.u, e.v);
    if (!edges.empty()) {
      const Edge first = *std::min_element(edges.begin(), edges.end(), [](Edge l, Edge r) {
        return l.u != r.u ? l.u < r.u : l.v < r.v;
      });
      result.packing.triangles.push_back(make_triangle(star.centre, first.u, first.v));
    }
  }
  result.revealed = std::move(revealed).build();
  result.notes.push_back("stars " + std::to_string(family.stars.size()) + ", truncated " +
                         std::to_string(truncated) + ", p " + detail::fmt(p));
  return detail::finish(g, std::move(result), "stars_to_triangles");
}

}  // namespace tripack
