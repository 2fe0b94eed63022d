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

#include "tripack/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tripack/packing.hpp"

namespace tripack {
namespace {

constexpr double kSlack = 1e-9;

std::string fmt(double x) {
  std::string s = std::to_string(x);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

// Low-internal-degree core of `seed`, the near-complete side opposite it,
// then leftovers placed on whichever side gives them more cut-neighbours.
std::pair<VertexSet, VertexSet> refine(const Graph& g, const VertexSet& seed, double beta) {
  const double n = static_cast<double>(g.n());
  VertexSet b_core(g.n());
  seed.for_each([&](Vertex v) {
    if (static_cast<double>(degree_into(g, v, seed)) <= beta * n + kSlack) b_core.insert(v);
  });
  VertexSet a_core(g.n());
  const double need = (1.0 - beta / 4.0) * static_cast<double>(b_core.size());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (b_core.contains(v)) continue;
    if (static_cast<double>(degree_into(g, v, b_core)) >= need - kSlack) a_core.insert(v);
  }
  VertexSet a = a_core;
  VertexSet b = b_core;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (a_core.contains(v) || b_core.contains(v)) continue;
    if (degree_into(g, v, b_core) >= degree_into(g, v, a_core)) {
      a.insert(v);
    } else {
      b.insert(v);
    }
  }
  return {a, b};
}

// Moves vertices whose cut-degree is below the floor to the other side when
// that raises their cut-degree; one sweep in index order.
void repair(const Graph& g, VertexSet& a, VertexSet& b, double floor) {
  for (Vertex v = 0; v < g.n(); ++v) {
    const bool in_a = a.contains(v);
    const std::size_t cross = degree_into(g, v, in_a ? b : a);
    if (static_cast<double>(cross) >= floor - kSlack) continue;
    const std::size_t same = degree_into(g, v, in_a ? a : b);
    if (same <= cross) continue;
    if (in_a) {
      a.erase(v);
      b.insert(v);
    } else {
      b.erase(v);
      a.insert(v);
    }
  }
}

}  // namespace

StabilityReport verify_stability(const Graph& g, const VertexSet& a, const VertexSet& b,
                                 double alpha, double beta) {
  if (a.universe() != g.n() || b.universe() != g.n() || a.intersects(b) ||
      (a | b).size() != g.n()) {
    throw std::invalid_argument("verify_stability: (a, b) must partition the vertex set");
  }
  if (!(alpha >= 0.0 && beta >= 0.0)) {
    throw std::invalid_argument("verify_stability: alpha and beta must be nonnegative");
  }
  const double n = static_cast<double>(g.n());
  StabilityReport r;
  r.a = a;
  r.b = b;
  r.size_a = a.size();
  r.size_b = b.size();
  r.size_a_low = (alpha - beta) * n;
  r.size_a_high = (alpha + beta) * n;
  r.size_b_low = (1.0 - alpha - beta) * n;
  r.size_b_high = (1.0 - alpha + beta) * n;
  r.cut_degree_floor = alpha * n / 4.0;
  r.exception_budget = beta * n;

  r.cut_min_degree = g.n();
  const double a_need = static_cast<double>(r.size_b) - beta * n;
  const double b_need = static_cast<double>(r.size_a) - beta * n;
  for (Vertex v = 0; v < g.n(); ++v) {
    const bool in_a = a.contains(v);
    const std::size_t cross = degree_into(g, v, in_a ? b : a);
    r.cut_min_degree = std::min(r.cut_min_degree, cross);
    if (in_a && static_cast<double>(cross) < a_need - kSlack) ++r.exceptional_a;
    if (!in_a && static_cast<double>(cross) < b_need - kSlack) ++r.exceptional_b;
  }
  if (g.n() == 0) r.cut_min_degree = 0;

  auto outside = [](double x, double lo, double hi) { return x < lo - kSlack || x > hi + kSlack; };
  if (alpha > 0.0 && (r.size_a == 0 || r.size_b == 0)) {
    r.failures.push_back("a side is empty while alpha > 0");
  }
  if (outside(static_cast<double>(r.size_a), r.size_a_low, r.size_a_high)) {
    r.failures.push_back("|A|=" + std::to_string(r.size_a) + " outside [" + fmt(r.size_a_low) +
                         ", " + fmt(r.size_a_high) + "]");
  }
  if (outside(static_cast<double>(r.size_b), r.size_b_low, r.size_b_high)) {
    r.failures.push_back("|B|=" + std::to_string(r.size_b) + " outside [" + fmt(r.size_b_low) +
                         ", " + fmt(r.size_b_high) + "]");
  }
  if (static_cast<double>(r.cut_min_degree) < r.cut_degree_floor - kSlack) {
    r.failures.push_back("cut min-degree " + std::to_string(r.cut_min_degree) + " < " +
                         fmt(r.cut_degree_floor));
  }
  if (static_cast<double>(r.exceptional_a) > r.exception_budget + kSlack) {
    r.failures.push_back(std::to_string(r.exceptional_a) +
                         " A-vertices miss more than beta n of B (budget " +
                         fmt(r.exception_budget) + ")");
  }
  if (static_cast<double>(r.exceptional_b) > r.exception_budget + kSlack) {
    r.failures.push_back(std::to_string(r.exceptional_b) +
                         " B-vertices miss more than beta n of A (budget " +
                         fmt(r.exception_budget) + ")");
  }
  r.holds = r.failures.empty();
  return r;
}

std::optional<StablePartition> find_stable_partition(const Graph& g, double alpha, double beta) {
  const std::size_t n = g.n();
  if (n == 0) return std::nullopt;
  const double nd = static_cast<double>(n);

  std::vector<std::pair<std::string, VertexSet>> seeds;
  {
    // Lowest-degree vertices among those of degree <= (1 - alpha + beta) n,
    // as many as the expected size of B.
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex l, Vertex r) { return g.degree(l) < g.degree(r); });
    const auto want = static_cast<std::size_t>(std::ceil((1.0 - alpha) * nd - kSlack));
    VertexSet seed(n);
    for (Vertex v : order) {
      if (seed.size() >= want) break;
      if (static_cast<double>(g.degree(v)) <= (1.0 - alpha + beta) * nd + kSlack) seed.insert(v);
    }
    seeds.emplace_back("degree", seed);
  }
  {
    const Bipartition cut = max_cut_bipartition(g);
    seeds.emplace_back("max-cut", cut.b);
  }

  for (const auto& [rule, seed] : seeds) {
    auto [a, b] = refine(g, seed, beta);
    for (int attempt = 0; attempt < 2; ++attempt) {
      if (attempt == 1) repair(g, a, b, alpha * nd / 4.0);
      StabilityReport report = verify_stability(g, a, b, alpha, beta);
      if (report.holds) return StablePartition{a, b, std::move(report), rule};
    }
  }
  return std::nullopt;
}

}  // namespace tripack
