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

// Pair densities, epsilon-regularity and super-regularity tests.
//
// "Qualifying" subsets are X of a with |X| >= ceil(eps |a|) and Y of b with
// |Y| >= ceil(eps |b|). Exhaustive checks are exact and capped at 16 vertices
// per side; sampled checks are one-sided.

#ifndef TRIPACK_REGULARITY_HPP_
#define TRIPACK_REGULARITY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "tripack/graph.hpp"
#include "tripack/rng.hpp"

namespace tripack {

struct Exhaustive {};
struct Sampled {
  std::size_t trials = 2000;
  Seed seed;
};
using CheckMode = std::variant<Exhaustive, Sampled>;

inline constexpr std::size_t kExhaustiveSideLimit = 16;

struct RegularityWitness {
  VertexSet x;
  VertexSet y;
  double density_xy = 0.0;
  double density_ab = 0.0;
};

struct PairStats {
  double density = 0.0;
  std::size_t min_degree_a = 0;  // min over a of cross-degree into b
  std::size_t min_degree_b = 0;
  std::optional<RegularityWitness> witness;
};

double density(const Graph& g, const VertexSet& a, const VertexSet& b);

// Density and minimum cross-degrees; the witness slot is filled when a
// refutation mode is supplied.
PairStats pair_stats(const Graph& g, const VertexSet& a, const VertexSet& b,
                     std::optional<std::pair<double, CheckMode>> refute = std::nullopt);

// Smallest qualifying subset size ceil(eps * side), at least 1.
std::size_t min_qualifying_size(double eps, std::size_t side);

std::optional<RegularityWitness> regularity_refute(const Graph& g, const VertexSet& a,
                                                   const VertexSet& b, double eps,
                                                   const CheckMode& mode);

struct SuperRegularity {
  bool holds = true;
  std::string reason;  // empty when holds
  std::optional<RegularityWitness> witness;
};

SuperRegularity is_super_regular(const Graph& g, const VertexSet& a, const VertexSet& b,
                                 double eps, double d, const CheckMode& mode);

std::size_t mdl_count(const Graph& g, const VertexSet& a, const VertexSet& b, double eps,
                      double d, const VertexSet& y);

struct TrimResult {
  VertexSet a;
  VertexSet b;
  // True when |a'| < (1-eps)|a| or |b'| < (1-eps)|b|.
  bool shortfall = false;
  std::string report;
};

// Drops every vertex whose cross-degree is below (d - eps) times the size of
// the opposite side, both sides judged against the untrimmed pair.
TrimResult trim_super_regular(const Graph& g, const VertexSet& a, const VertexSet& b, double eps,
                              double d);

}  // namespace tripack

#endif  // TRIPACK_REGULARITY_HPP_
