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

// Simple undirected graphs on vertices 0..n-1 stored as bitset adjacency rows.
// A Graph never changes after GraphBuilder::build(); algorithms that "remove"
// vertices track a separate VertexSet of used vertices instead.

#ifndef TRIPACK_GRAPH_HPP_
#define TRIPACK_GRAPH_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tripack {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Subset of the universe {0..universe-1}. Binary operators require equal
// universes.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);

  static VertexSet full(std::size_t universe);
  static VertexSet range(std::size_t universe, Vertex begin, Vertex end);
  static VertexSet of(std::size_t universe, std::span<const Vertex> members);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1ULL) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear() noexcept;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const;

  std::size_t count_common(const VertexSet& other) const;
  std::size_t count_common(const VertexSet& b, const VertexSet& c) const;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  std::optional<Vertex> first() const noexcept;
  // Smallest member strictly greater than v.
  std::optional<Vertex> next_after(Vertex v) const noexcept;

  template <class F>
  void for_each(F&& visit) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        visit(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const;
  // The first k members in increasing order.
  VertexSet lowest(std::size_t k) const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void require_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);  // edgeless

  std::size_t n() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  std::size_t min_degree() const;
  std::size_t max_degree() const;
  VertexSet vertices() const { return VertexSet::full(n()); }

  // Each edge once with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& base);

  std::size_t n() const noexcept { return rows_.size(); }

  // Returns false if the edge was already present. Loops and out-of-range
  // endpoints throw std::invalid_argument.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  void add_graph(const Graph& other);
  void add_complete_bipartite(const VertexSet& a, const VertexSet& b);
  void add_clique(const VertexSet& s);

  Graph build() &&;

 private:
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

std::size_t degree_into(const Graph& g, Vertex v, const VertexSet& s);

// Number of edges with one end in a and the other in b (a, b disjoint).
std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);
std::size_t edges_within(const Graph& g, const VertexSet& s);

Graph graph_union(const Graph& first, const Graph& second);

struct InducedGraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local index -> parent vertex
};

InducedGraph induced(const Graph& g, const VertexSet& s);

// Edge-list text format: a header line "n m", then m lines "u v" with u < v.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace tripack

#endif  // TRIPACK_GRAPH_HPP_
