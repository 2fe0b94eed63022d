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

#include "tripack/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tripack {
namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

void check_vertex(Vertex v, std::size_t n, const char* what) {
  if (v >= n) {
    throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                " out of range for n=" + std::to_string(n));
  }
}

}  // namespace

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet VertexSet::full(std::size_t universe) {
  return range(universe, 0, static_cast<Vertex>(universe));
}

VertexSet VertexSet::range(std::size_t universe, Vertex begin, Vertex end) {
  if (begin > end || end > universe) {
    throw std::invalid_argument("VertexSet::range: bad bounds");
  }
  VertexSet s(universe);
  for (Vertex v = begin; v < end; ++v) s.words_[v >> 6] |= 1ULL << (v & 63);
  return s;
}

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
  check_vertex(v, universe_, "VertexSet::insert");
  words_[v >> 6] |= 1ULL << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v >> 6] &= ~(1ULL << (v & 63));
}

void VertexSet::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw std::invalid_argument("VertexSet: universe mismatch (" + std::to_string(universe_) +
                                " vs " + std::to_string(other.universe_) + ")");
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

std::size_t VertexSet::count_common(const VertexSet& other) const {
  require_same_universe(other);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

std::size_t VertexSet::count_common(const VertexSet& b, const VertexSet& c) const {
  require_same_universe(b);
  require_same_universe(c);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & b.words_[i] & c.words_[i]));
  }
  return total;
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::optional<Vertex> VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    }
  }
  return std::nullopt;
}

std::optional<Vertex> VertexSet::next_after(Vertex v) const noexcept {
  std::size_t start = static_cast<std::size_t>(v) + 1;
  if (start >= universe_) return std::nullopt;
  std::size_t w = start >> 6;
  std::uint64_t bits = words_[w] & (~0ULL << (start & 63));
  while (true) {
    if (bits != 0) {
      return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
    if (++w >= words_.size()) return std::nullopt;
    bits = words_[w];
  }
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet VertexSet::lowest(std::size_t k) const {
  VertexSet out(universe_);
  for (std::size_t w = 0; w < words_.size() && k > 0; ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0 && k > 0) {
      const std::uint64_t low = bits & (~bits + 1);
      out.words_[w] |= low;
      bits ^= low;
      --k;
    }
  }
  return out;
}

Graph::Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

const VertexSet& Graph::neighbors(Vertex v) const {
  check_vertex(v, n(), "Graph::neighbors");
  return rows_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u, n(), "Graph::has_edge");
  check_vertex(v, n(), "Graph::has_edge");
  return rows_[u].contains(v);
}

std::size_t Graph::min_degree() const {
  if (rows_.empty()) return 0;
  std::size_t best = rows_[0].size();
  for (const auto& row : rows_) best = std::min(best, row.size());
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& row : rows_) best = std::max(best, row.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n(); ++u) {
    for (auto v = rows_[u].next_after(u); v; v = rows_[u].next_after(*v)) out.push_back({u, *v});
  }
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : rows_(n, VertexSet(n)) {}

GraphBuilder::GraphBuilder(const Graph& base) : rows_(base.rows_), edge_count_(base.edge_count_) {}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  check_vertex(u, n(), "GraphBuilder::add_edge");
  check_vertex(v, n(), "GraphBuilder::add_edge");
  if (u == v) throw std::invalid_argument("GraphBuilder::add_edge: loop at " + std::to_string(u));
  if (rows_[u].contains(v)) return false;
  rows_[u].insert(v);
  rows_[v].insert(u);
  ++edge_count_;
  return true;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  check_vertex(u, n(), "GraphBuilder::has_edge");
  check_vertex(v, n(), "GraphBuilder::has_edge");
  return rows_[u].contains(v);
}

void GraphBuilder::add_graph(const Graph& other) {
  if (other.n() != n()) throw std::invalid_argument("GraphBuilder::add_graph: n mismatch");
  for (std::size_t v = 0; v < n(); ++v) rows_[v] |= other.neighbors(static_cast<Vertex>(v));
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += row.size();
  edge_count_ = twice / 2;
}

void GraphBuilder::add_complete_bipartite(const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) throw std::invalid_argument("add_complete_bipartite: sides overlap");
  a.for_each([&](Vertex u) { b.for_each([&](Vertex v) { add_edge(u, v); }); });
}

void GraphBuilder::add_clique(const VertexSet& s) {
  s.for_each([&](Vertex u) {
    for (auto v = s.next_after(u); v; v = s.next_after(*v)) add_edge(u, *v);
  });
}

Graph GraphBuilder::build() && {
  Graph g;
  g.rows_ = std::move(rows_);
  g.edge_count_ = edge_count_;
  return g;
}

std::size_t degree_into(const Graph& g, Vertex v, const VertexSet& s) {
  return g.neighbors(v).count_common(s);
}

std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::size_t total = 0;
  a.for_each([&](Vertex v) { total += g.neighbors(v).count_common(b); });
  return total;
}

std::size_t edges_within(const Graph& g, const VertexSet& s) {
  std::size_t twice = 0;
  s.for_each([&](Vertex v) { twice += g.neighbors(v).count_common(s); });
  return twice / 2;
}

Graph graph_union(const Graph& first, const Graph& second) {
  if (first.n() != second.n()) {
    throw std::invalid_argument("graph_union: vertex counts differ (" +
                                std::to_string(first.n()) + " vs " +
                                std::to_string(second.n()) + ")");
  }
  GraphBuilder b(first);
  b.add_graph(second);
  return std::move(b).build();
}

InducedGraph induced(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.n()) throw std::invalid_argument("induced: universe mismatch");
  InducedGraph out;
  out.to_parent = s.to_vector();
  std::vector<Vertex> local(g.n(), 0);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    local[out.to_parent[i]] = static_cast<Vertex>(i);
  }
  GraphBuilder b(out.to_parent.size());
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    const Vertex u = out.to_parent[i];
    const VertexSet& row = g.neighbors(u);
    for (auto v = row.next_after(u); v; v = row.next_after(*v)) {
      if (s.contains(*v)) b.add_edge(static_cast<Vertex>(i), local[*v]);
    }
  }
  out.graph = std::move(b).build();
  return out;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos != std::string::npos && line[pos] != '#') return true;
    }
    return false;
  };
  if (!next_line()) throw std::invalid_argument("edge list: missing header line");
  std::istringstream header(line);
  long long n = -1;
  long long m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0) {
    throw std::invalid_argument("edge list: header must be 'n m'");
  }
  GraphBuilder b(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) {
      throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i));
    }
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    if (!(row >> u >> v)) throw std::invalid_argument("edge list: malformed line '" + line + "'");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge list: vertex out of range in '" + line + "'");
    }
    if (u == v) throw std::invalid_argument("edge list: loop in '" + line + "'");
    if (!b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw std::invalid_argument("edge list: duplicate edge '" + line + "'");
    }
  }
  if (next_line()) throw std::invalid_argument("edge list: trailing data after edges");
  return std::move(b).build();
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace tripack
