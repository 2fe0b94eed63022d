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

// Exact reference computations: triangle counts, maximum triangle packings on
// small graphs, maximum bipartite matchings and Hall violators.

#ifndef TRIPACK_ORACLE_HPP_
#define TRIPACK_ORACLE_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tripack/graph.hpp"

namespace tripack {

// Vertices in increasing order.
using Triangle = std::array<Vertex, 3>;

Triangle make_triangle(Vertex a, Vertex b, Vertex c);

struct TrianglePacking {
  std::vector<Triangle> triangles;

  std::size_t size() const noexcept { return triangles.size(); }
  VertexSet covered(std::size_t universe) const;
  void append(const TrianglePacking& other);
};

// nullopt when every triangle is a triangle of `host` and no vertex repeats;
// otherwise a description of the first violation.
std::optional<std::string> packing_error(const Graph& host, const TrianglePacking& packing);

// Throws std::logic_error with the violation; used on every algorithm exit.
void require_valid_packing(const Graph& host, const TrianglePacking& packing, const char* who);

// Packing file: a line "k", then k lines "u v w".
TrianglePacking read_packing(std::istream& in);
void write_packing(std::ostream& out, const TrianglePacking& packing);

std::uint64_t count_triangles(const Graph& g);
std::uint64_t count_triangles(const Graph& g, const VertexSet& within);
std::uint64_t count_k4(const Graph& g, const VertexSet& within);

// Lowest-index greedy: each vertex in order takes the first available edge of
// its remaining neighbourhood.
TrianglePacking greedy_triangle_packing(const Graph& g);

enum class SearchStatus { optimal, target_reached, unknown };

struct ExactPackingOptions {
  std::optional<std::size_t> target;      // stop once a packing this large is found
  std::optional<std::uint64_t> step_limit;  // expanded states before giving up
};

struct ExactPackingResult {
  SearchStatus status = SearchStatus::unknown;
  // Optimal when status is optimal; otherwise the best packing found, which is
  // only a lower bound.
  TrianglePacking packing;
  std::uint64_t steps = 0;
};

// Memoised branch and bound over vertex masks; requires g.n() <= 64.
ExactPackingResult max_triangle_packing_exact(const Graph& g, ExactPackingOptions options = {});

// Matching between a left index set and a vertex universe. left_adj[i] lists
// the admissible right vertices of left item i.
struct IndexMatching {
  std::vector<std::optional<Vertex>> left_to_right;
  std::size_t size = 0;
};

// Augmenting-path maximum matching. Left items are processed in index order
// and right candidates in increasing order, so ties go to lowest indices.
// `initial` pairs are kept as a starting matching when they are admissible.
IndexMatching maximum_matching(const std::vector<VertexSet>& left_adj,
                               const std::vector<std::optional<Vertex>>& initial = {});

struct BipartiteMatching {
  std::vector<Edge> pairs;  // (a-vertex, b-vertex)
  std::size_t size() const noexcept { return pairs.size(); }
};

BipartiteMatching max_bipartite_matching(const Graph& g, const VertexSet& a, const VertexSet& b);

// S subset of a with |N(S) cap b| < |S|, or nullopt when a perfect matching of a
// exists. Requires |a| <= |b| and disjoint sides.
std::optional<VertexSet> hall_violator(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace tripack

#endif  // TRIPACK_ORACLE_HPP_
