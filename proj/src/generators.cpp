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

#include "tripack/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tripack {
namespace {

constexpr std::uint64_t kRowTag = 0x726f77;       // "row"
constexpr std::uint64_t kStableTag = 0x737462;    // "stb"
constexpr std::uint64_t kBandTag = 0x626e64;      // "bnd"

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": probability " + std::to_string(p) +
                                " outside [0,1]");
  }
}

// Calls keep(j) for each index j in [0, count) that survives Bernoulli(p)
// thinning, drawing from the stream of `row`.
template <class F>
void sample_row(std::size_t count, double p, Seed seed, std::uint64_t row, F&& keep) {
  if (count == 0 || p <= 0.0) return;
  if (p >= 1.0) {
    for (std::size_t j = 0; j < count; ++j) keep(j);
    return;
  }
  Stream stream(seed.derive(kRowTag, row));
  const double log_q = std::log1p(-p);
  std::size_t j = 0;
  while (true) {
    const std::uint64_t skip = stream.geometric_skip(log_q);
    if (skip >= count - j) return;
    j += static_cast<std::size_t>(skip);
    keep(j);
    if (++j >= count) return;
  }
}

}  // namespace

Graph gnp(std::size_t n, double p, Seed seed) {
  return gnp_within(VertexSet::full(n), p, seed);
}

std::vector<Edge> sample_edges_within(std::span<const Vertex> members, double p, Seed seed) {
  check_probability(p, "sample_edges_within");
  std::vector<Edge> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::size_t later = members.size() - i - 1;
    sample_row(later, p, seed, members[i],
               [&](std::size_t j) { out.push_back({members[i], members[i + 1 + j]}); });
  }
  return out;
}

Graph gnp_within(const VertexSet& s, double p, Seed seed) {
  check_probability(p, "gnp");
  const std::vector<Vertex> members = s.to_vector();
  GraphBuilder b(s.universe());
  for (const Edge& e : sample_edges_within(members, p, seed)) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

Graph random_subgraph(const Graph& base, double p, Seed seed) {
  check_probability(p, "random_subgraph");
  GraphBuilder builder(base.n());
  for (Vertex u = 0; u < base.n(); ++u) {
    std::vector<Vertex> later;
    base.neighbors(u).for_each([&](Vertex v) {
      if (v > u) later.push_back(v);
    });
    sample_row(later.size(), p, seed, u, [&](std::size_t j) { builder.add_edge(u, later[j]); });
  }
  return std::move(builder).build();
}

Graph random_bipartite(const VertexSet& a, const VertexSet& b, double p, Seed seed) {
  check_probability(p, "random_bipartite");
  if (a.universe() != b.universe()) throw std::invalid_argument("random_bipartite: universe mismatch");
  if (a.intersects(b)) throw std::invalid_argument("random_bipartite: sides overlap");
  const std::vector<Vertex> right = b.to_vector();
  GraphBuilder builder(a.universe());
  a.for_each([&](Vertex u) {
    sample_row(right.size(), p, seed, u, [&](std::size_t j) { builder.add_edge(u, right[j]); });
  });
  return std::move(builder).build();
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
  if (m >= n) {
    throw std::invalid_argument("complete_bipartite: need m < n (got m=" + std::to_string(m) +
                                ", n=" + std::to_string(n) + ")");
  }
  GraphBuilder b(n);
  b.add_complete_bipartite(VertexSet::range(n, 0, static_cast<Vertex>(m)),
                           VertexSet::range(n, static_cast<Vertex>(m), static_cast<Vertex>(n)));
  return std::move(b).build();
}

Graph complete_multipartite(const std::vector<std::size_t>& sizes) {
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  GraphBuilder b(n);
  Vertex start = 0;
  for (std::size_t size : sizes) {
    const auto end = static_cast<Vertex>(start + size);
    b.add_complete_bipartite(VertexSet::range(n, start, end),
                             VertexSet::range(n, end, static_cast<Vertex>(n)));
    start = end;
  }
  return std::move(b).build();
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  b.add_clique(VertexSet::full(n));
  return std::move(b).build();
}

Graph disjoint_bicliques(std::size_t count, std::size_t side) {
  const std::size_t n = count * side * 2;
  GraphBuilder b(n);
  for (std::size_t i = 0; i < count; ++i) {
    const auto base = static_cast<Vertex>(2 * side * i);
    b.add_complete_bipartite(VertexSet::range(n, base, static_cast<Vertex>(base + side)),
                             VertexSet::range(n, static_cast<Vertex>(base + side),
                                              static_cast<Vertex>(base + 2 * side)));
  }
  return std::move(b).build();
}

K4Counterexample k4_counterexample(std::size_t n, std::size_t m) {
  if (m == 0) throw std::invalid_argument("k4_counterexample: m must be positive");
  if (n % 4 != 0) throw std::invalid_argument("k4_counterexample: n must be divisible by 4");
  if (n / 4 <= m) throw std::invalid_argument("k4_counterexample: need m < n/4");
  const std::size_t a_size = n / 4 - m;
  const std::size_t b_size = n - a_size;
  if (b_size % (2 * m) != 0) {
    throw std::invalid_argument("k4_counterexample: |B| = " + std::to_string(b_size) +
                                " is not divisible by 2m = " + std::to_string(2 * m));
  }
  K4Counterexample out{Graph(), VertexSet::range(n, 0, static_cast<Vertex>(a_size)),
                       VertexSet::range(n, static_cast<Vertex>(a_size), static_cast<Vertex>(n))};
  GraphBuilder b(n);
  b.add_complete_bipartite(out.a, out.b);
  for (auto base = static_cast<Vertex>(a_size); base < n; base += static_cast<Vertex>(2 * m)) {
    b.add_complete_bipartite(VertexSet::range(n, base, static_cast<Vertex>(base + m)),
                             VertexSet::range(n, static_cast<Vertex>(base + m),
                                              static_cast<Vertex>(base + 2 * m)));
  }
  out.graph = std::move(b).build();
  return out;
}

StableModel stable_model(std::size_t n, double alpha, double beta, double defect_fraction,
                         Seed seed) {
  if (!(alpha > 0.0 && alpha <= 1.0 / 3.0)) {
    throw std::invalid_argument("stable_model: alpha must lie in (0, 1/3]");
  }
  if (!(beta >= 0.0 && beta < 1.0 / 12.0)) {
    throw std::invalid_argument("stable_model: beta must lie in [0, 1/12)");
  }
  if (!(defect_fraction >= 0.0 && defect_fraction <= 1.0)) {
    throw std::invalid_argument("stable_model: defect_fraction must lie in [0,1]");
  }
  const auto a_size = static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(n) - 1e-9));
  if (a_size == 0 || a_size >= n) throw std::invalid_argument("stable_model: n too small");
  const auto defects =
      static_cast<std::size_t>(std::floor(defect_fraction * static_cast<double>(a_size) + 1e-9));
  // Every B-vertex loses at most `defects` neighbours, which stays within
  // the beta n exception budget only if defects <= beta n.
  if (static_cast<double>(defects) > beta * static_cast<double>(n) + 1e-9) {
    throw std::invalid_argument("stable_model: floor(defect_fraction |A|) exceeds beta n");
  }
  const auto keep = static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(n) / 4.0 - 1e-9));

  StableModel out{Graph(), VertexSet::range(n, 0, static_cast<Vertex>(a_size)),
                  VertexSet::range(n, static_cast<Vertex>(a_size), static_cast<Vertex>(n)), {}};
  Stream stream(seed.derive(kStableTag));
  std::vector<Vertex> a_members = out.a.to_vector();
  stream.shuffle(a_members);
  out.degraded.assign(a_members.begin(), a_members.begin() + static_cast<std::ptrdiff_t>(defects));
  std::sort(out.degraded.begin(), out.degraded.end());

  GraphBuilder b(n);
  const std::vector<Vertex> b_members = out.b.to_vector();
  VertexSet degraded = VertexSet::of(n, out.degraded);
  out.a.for_each([&](Vertex u) {
    if (!degraded.contains(u)) {
      for (Vertex v : b_members) b.add_edge(u, v);
      return;
    }
    std::vector<Vertex> partners = b_members;
    Stream local(seed.derive(kStableTag, u + 1));
    local.shuffle(partners);
    for (std::size_t i = 0; i < keep && i < partners.size(); ++i) b.add_edge(u, partners[i]);
  });
  out.graph = std::move(b).build();
  return out;
}

Graph regular_bipartite(std::size_t n_side, double delta_fraction, Seed seed) {
  if (!(delta_fraction > 0.0 && delta_fraction <= 1.0)) {
    throw std::invalid_argument("regular_bipartite: delta_fraction must lie in (0,1]");
  }
  const auto d = static_cast<std::size_t>(
      std::ceil(delta_fraction * static_cast<double>(n_side) - 1e-9));
  std::vector<Vertex> relabel(n_side);
  std::iota(relabel.begin(), relabel.end(), Vertex{0});
  Stream stream(seed.derive(kBandTag));
  stream.shuffle(relabel);
  GraphBuilder b(2 * n_side);
  for (std::size_t u = 0; u < n_side; ++u) {
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t w = (u + k) % n_side;
      b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(n_side + relabel[w]));
    }
  }
  return std::move(b).build();
}

}  // namespace tripack
