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

#include "tripack/regularity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tripack {
namespace {

constexpr double kSlack = 1e-12;
constexpr std::uint64_t kSampleTag = 0x736d70;  // "smp"

void check_pair(const Graph& g, const VertexSet& a, const VertexSet& b, const char* who) {
  if (a.universe() != g.n() || b.universe() != g.n()) {
    throw std::invalid_argument(std::string(who) + ": vertex sets must use the graph universe");
  }
  if (a.intersects(b)) throw std::invalid_argument(std::string(who) + ": sides overlap");
  if (a.empty() || b.empty()) throw std::invalid_argument(std::string(who) + ": empty side");
}

void check_eps(double eps, const char* who) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw std::invalid_argument(std::string(who) + ": eps must lie in (0,1]");
  }
}

// Bit i of row j is set when b-member j is adjacent to a-member i.
struct SmallPair {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  std::vector<std::uint32_t> b_rows;

  SmallPair(const Graph& g, const VertexSet& sa, const VertexSet& sb)
      : a(sa.to_vector()), b(sb.to_vector()), b_rows(b.size(), 0) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (g.has_edge(a[i], b[j])) b_rows[j] |= 1U << i;
      }
    }
  }
};

// Next integer with the same popcount (Gosper).
std::uint32_t next_combination(std::uint32_t x) {
  const std::uint32_t low = x & (~x + 1);
  const std::uint32_t ripple = x + low;
  return ripple | (((x ^ ripple) >> 2) / low);
}

VertexSet members_of(std::size_t universe, const std::vector<Vertex>& pool, std::uint32_t mask) {
  VertexSet s(universe);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if ((mask >> i) & 1U) s.insert(pool[i]);
  }
  return s;
}

VertexSet first_k(std::size_t universe, const std::vector<Vertex>& pool,
                  const std::vector<std::size_t>& order, std::size_t k) {
  VertexSet s(universe);
  for (std::size_t i = 0; i < k; ++i) s.insert(pool[order[i]]);
  return s;
}

// Enumerates X by decreasing size (Gosper order within a size) and, for each
// X, the extreme Y of every qualifying size: the k b-vertices with fewest or
// most neighbours in X. `check` sees (X mask, k, edges(X,Y), Y order, low?)
// and returns true to stop.
template <class F>
bool scan_exhaustive(const SmallPair& pair, std::size_t ka, std::size_t kb, F&& check) {
  const std::size_t na = pair.a.size();
  const std::size_t nb = pair.b.size();
  std::vector<std::size_t> ascending(nb);
  std::vector<std::size_t> descending(nb);
  std::vector<int> deg(nb);
  for (std::size_t s = na; s >= ka && s > 0; --s) {
    const std::uint32_t limit = na == 32 ? 0 : (1U << na);
    for (std::uint32_t x = (1U << s) - 1; x < limit && x != 0; x = next_combination(x)) {
      for (std::size_t j = 0; j < nb; ++j) deg[j] = std::popcount(pair.b_rows[j] & x);
      for (std::size_t j = 0; j < nb; ++j) ascending[j] = descending[j] = j;
      std::stable_sort(ascending.begin(), ascending.end(),
                       [&](std::size_t l, std::size_t r) { return deg[l] < deg[r]; });
      std::stable_sort(descending.begin(), descending.end(),
                       [&](std::size_t l, std::size_t r) { return deg[l] > deg[r]; });
      std::vector<long> low_prefix(nb + 1, 0);
      std::vector<long> high_prefix(nb + 1, 0);
      for (std::size_t j = 0; j < nb; ++j) {
        low_prefix[j + 1] = low_prefix[j] + deg[ascending[j]];
        high_prefix[j + 1] = high_prefix[j] + deg[descending[j]];
      }
      for (std::size_t k = nb; k >= kb && k > 0; --k) {
        if (check(x, s, k, low_prefix[k], ascending, true)) return true;
        if (check(x, s, k, high_prefix[k], descending, false)) return true;
      }
      if (s == na) break;
    }
  }
  return false;
}

void require_small(const VertexSet& a, const VertexSet& b, const char* who) {
  if (a.size() > kExhaustiveSideLimit || b.size() > kExhaustiveSideLimit) {
    throw std::invalid_argument(std::string(who) + ": exhaustive mode needs at most " +
                                std::to_string(kExhaustiveSideLimit) + " vertices per side");
  }
}

std::vector<Vertex> sample_subset(Stream& stream, std::vector<Vertex> pool, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(stream.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

// Runs `trials` draws of uniform minimum-size (X, Y) and returns the first
// pair accepted by `bad`.
template <class F>
std::optional<RegularityWitness> scan_sampled(const Graph& g, const VertexSet& a,
                                              const VertexSet& b, double eps,
                                              const Sampled& mode, F&& bad) {
  const std::size_t ka = min_qualifying_size(eps, a.size());
  const std::size_t kb = min_qualifying_size(eps, b.size());
  const std::vector<Vertex> pool_a = a.to_vector();
  const std::vector<Vertex> pool_b = b.to_vector();
  Stream stream(mode.seed.derive(kSampleTag));
  for (std::size_t t = 0; t < mode.trials; ++t) {
    const VertexSet x = VertexSet::of(g.n(), sample_subset(stream, pool_a, ka));
    const VertexSet y = VertexSet::of(g.n(), sample_subset(stream, pool_b, kb));
    const double dxy = static_cast<double>(edges_between(g, x, y)) /
                       (static_cast<double>(ka) * static_cast<double>(kb));
    if (bad(dxy)) return RegularityWitness{x, y, dxy, 0.0};
  }
  return std::nullopt;
}

}  // namespace

double density(const Graph& g, const VertexSet& a, const VertexSet& b) {
  check_pair(g, a, b, "density");
  return static_cast<double>(edges_between(g, a, b)) /
         (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

std::size_t min_qualifying_size(double eps, std::size_t side) {
  const auto k = static_cast<std::size_t>(std::ceil(eps * static_cast<double>(side) - 1e-9));
  return std::max<std::size_t>(k, 1);
}

PairStats pair_stats(const Graph& g, const VertexSet& a, const VertexSet& b,
                     std::optional<std::pair<double, CheckMode>> refute) {
  PairStats stats;
  stats.density = density(g, a, b);
  stats.min_degree_a = b.size();
  stats.min_degree_b = a.size();
  a.for_each([&](Vertex v) { stats.min_degree_a = std::min(stats.min_degree_a, degree_into(g, v, b)); });
  b.for_each([&](Vertex v) { stats.min_degree_b = std::min(stats.min_degree_b, degree_into(g, v, a)); });
  if (refute) stats.witness = regularity_refute(g, a, b, refute->first, refute->second);
  return stats;
}

std::optional<RegularityWitness> regularity_refute(const Graph& g, const VertexSet& a,
                                                   const VertexSet& b, double eps,
                                                   const CheckMode& mode) {
  check_pair(g, a, b, "regularity_refute");
  check_eps(eps, "regularity_refute");
  const double dab = density(g, a, b);

  if (const auto* sampled = std::get_if<Sampled>(&mode)) {
    auto w = scan_sampled(g, a, b, eps, *sampled,
                          [&](double dxy) { return std::abs(dxy - dab) > eps + kSlack; });
    if (w) w->density_ab = dab;
    return w;
  }

  require_small(a, b, "regularity_refute");
  const SmallPair pair(g, a, b);
  const std::size_t ka = min_qualifying_size(eps, a.size());
  const std::size_t kb = min_qualifying_size(eps, b.size());
  std::optional<RegularityWitness> witness;
  scan_exhaustive(pair, ka, kb,
                  [&](std::uint32_t x, std::size_t s, std::size_t k, long edges,
                      const std::vector<std::size_t>& order, bool) {
                    const double dxy = static_cast<double>(edges) /
                                       (static_cast<double>(s) * static_cast<double>(k));
                    if (std::abs(dxy - dab) <= eps + kSlack) return false;
                    witness = RegularityWitness{members_of(g.n(), pair.a, x),
                                                first_k(g.n(), pair.b, order, k), dxy, dab};
                    return true;
                  });
  return witness;
}

SuperRegularity is_super_regular(const Graph& g, const VertexSet& a, const VertexSet& b,
                                 double eps, double d, const CheckMode& mode) {
  check_pair(g, a, b, "is_super_regular");
  check_eps(eps, "is_super_regular");
  SuperRegularity out;
  const double need_a = d * static_cast<double>(b.size());
  const double need_b = d * static_cast<double>(a.size());
  for (auto v = a.first(); v; v = a.next_after(*v)) {
    const std::size_t deg = degree_into(g, *v, b);
    if (static_cast<double>(deg) < need_a - kSlack) {
      out.holds = false;
      out.reason = "a-vertex " + std::to_string(*v) + " has cross-degree " + std::to_string(deg) +
                   " < d|b|";
      return out;
    }
  }
  for (auto v = b.first(); v; v = b.next_after(*v)) {
    const std::size_t deg = degree_into(g, *v, a);
    if (static_cast<double>(deg) < need_b - kSlack) {
      out.holds = false;
      out.reason = "b-vertex " + std::to_string(*v) + " has cross-degree " + std::to_string(deg) +
                   " < d|a|";
      return out;
    }
  }

  const double dab = density(g, a, b);
  if (const auto* sampled = std::get_if<Sampled>(&mode)) {
    out.witness = scan_sampled(g, a, b, eps, *sampled, [&](double dxy) { return dxy < d - kSlack; });
  } else {
    require_small(a, b, "is_super_regular");
    const SmallPair pair(g, a, b);
    scan_exhaustive(pair, min_qualifying_size(eps, a.size()), min_qualifying_size(eps, b.size()),
                    [&](std::uint32_t x, std::size_t s, std::size_t k, long edges,
                        const std::vector<std::size_t>& order, bool low) {
                      if (!low) return false;
                      const double dxy = static_cast<double>(edges) /
                                         (static_cast<double>(s) * static_cast<double>(k));
                      if (dxy >= d - kSlack) return false;
                      out.witness = RegularityWitness{members_of(g.n(), pair.a, x),
                                                      first_k(g.n(), pair.b, order, k), dxy, dab};
                      return true;
                    });
  }
  if (out.witness) {
    out.witness->density_ab = dab;
    out.holds = false;
    out.reason = "qualifying pair with density " + std::to_string(out.witness->density_xy) +
                 " < d";
  }
  return out;
}

std::size_t mdl_count(const Graph& g, const VertexSet& a, const VertexSet& b, double eps,
                      double d, const VertexSet& y) {
  check_pair(g, a, b, "mdl_count");
  if (!y.is_subset_of(b)) throw std::invalid_argument("mdl_count: y must be a subset of b");
  if (static_cast<double>(y.size()) < eps * static_cast<double>(b.size()) - 1e-9) {
    throw std::invalid_argument("mdl_count: |y| below eps |b|");
  }
  const double threshold = (d - eps) * static_cast<double>(y.size());
  std::size_t count = 0;
  a.for_each([&](Vertex v) {
    if (static_cast<double>(degree_into(g, v, y)) < threshold - kSlack) ++count;
  });
  return count;
}

TrimResult trim_super_regular(const Graph& g, const VertexSet& a, const VertexSet& b, double eps,
                              double d) {
  check_pair(g, a, b, "trim_super_regular");
  TrimResult out{a, b, false, {}};
  const double need_a = (d - eps) * static_cast<double>(b.size());
  const double need_b = (d - eps) * static_cast<double>(a.size());
  a.for_each([&](Vertex v) {
    if (static_cast<double>(degree_into(g, v, b)) < need_a - kSlack) out.a.erase(v);
  });
  b.for_each([&](Vertex v) {
    if (static_cast<double>(degree_into(g, v, a)) < need_b - kSlack) out.b.erase(v);
  });
  const double floor_a = (1.0 - eps) * static_cast<double>(a.size());
  const double floor_b = (1.0 - eps) * static_cast<double>(b.size());
  if (static_cast<double>(out.a.size()) < floor_a - kSlack ||
      static_cast<double>(out.b.size()) < floor_b - kSlack) {
    out.shortfall = true;
    out.report = "kept " + std::to_string(out.a.size()) + "/" + std::to_string(a.size()) +
                 " and " + std::to_string(out.b.size()) + "/" + std::to_string(b.size()) +
                 ", below (1-eps) of the original sides";
  }
  return out;
}

}  // namespace tripack
