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

#ifndef TRIPACK_SRC_PACKING_INTERNAL_HPP_
#define TRIPACK_SRC_PACKING_INTERNAL_HPP_

#include <cmath>
#include <sstream>
#include <string>

#include "tripack/packing.hpp"

namespace tripack::detail {

// Seed tags; each randomised stage derives its rounds from one of these.
enum Tag : std::uint64_t {
  kTagStars = 0x10,
  kTagRoundGreedy = 0x20,
  kTagSublinear = 0x30,
  kTagGreedyMatch = 0x40,
  kTagCherry = 0x50,
  kTagPair = 0x60,
  kTagExtremal = 0x70,
  kTagPortfolio = 0x80,
};

inline std::string fmt(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

inline PackResult empty_result(std::size_t n, std::size_t target, std::string note) {
  PackResult r;
  r.revealed = Graph(n);
  r.target = target;
  r.notes.push_back(std::move(note));
  return r;
}

// Validates against g ∪ revealed; a failure is a bug, not an input error.
inline PackResult finish(const Graph& g, PackResult r, const char* who) {
  if (r.revealed.n() != g.n()) r.revealed = Graph(g.n());
  require_valid_packing(graph_union(g, r.revealed), r.packing, who);
  return r;
}

inline Graph lift_graph(const InducedGraph& sub, const Graph& local, std::size_t n) {
  GraphBuilder b(n);
  for (const Edge& e : local.edges()) b.add_edge(sub.to_parent[e.u], sub.to_parent[e.v]);
  return std::move(b).build();
}

inline TrianglePacking lift_packing(const InducedGraph& sub, const TrianglePacking& local) {
  TrianglePacking out;
  for (const Triangle& t : local.triangles) {
    out.triangles.push_back(
        make_triangle(sub.to_parent[t[0]], sub.to_parent[t[1]], sub.to_parent[t[2]]));
  }
  return out;
}

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace tripack::detail

#endif  // TRIPACK_SRC_PACKING_INTERNAL_HPP_
