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

#include "tripack/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace tripack {

Triangle make_triangle(Vertex a, Vertex b, Vertex c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

VertexSet TrianglePacking::covered(std::size_t universe) const {
  VertexSet s(universe);
  for (const Triangle& t : triangles) {
    for (Vertex v : t) s.insert(v);
  }
  return s;
}

void TrianglePacking::append(const TrianglePacking& other) {
  triangles.insert(triangles.end(), other.triangles.begin(), other.triangles.end());
}

std::optional<std::string> packing_error(const Graph& host, const TrianglePacking& packing) {
  VertexSet seen(host.n());
  for (std::size_t i = 0; i < packing.triangles.size(); ++i) {
    const Triangle& t = packing.triangles[i];
    for (Vertex v : t) {
      if (v >= host.n()) return "triangle " + std::to_string(i) + " has out-of-range vertex";
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      return "triangle " + std::to_string(i) + " repeats a vertex";
    }
    if (!host.has_edge(t[0], t[1]) || !host.has_edge(t[0], t[2]) || !host.has_edge(t[1], t[2])) {
      return "triangle " + std::to_string(i) + " {" + std::to_string(t[0]) + "," +
             std::to_string(t[1]) + "," + std::to_string(t[2]) + "} is not a triangle of the host";
    }
    for (Vertex v : t) {
      if (seen.contains(v)) return "vertex " + std::to_string(v) + " used twice";
      seen.insert(v);
    }
  }
  return std::nullopt;
}

void require_valid_packing(const Graph& host, const TrianglePacking& packing, const char* who) {
  if (auto err = packing_error(host, packing)) {
    throw std::logic_error(std::string(who) + " produced an invalid packing: " + *err);
  }
}

TrianglePacking read_packing(std::istream& in) {
  long long k = -1;
  if (!(in >> k) || k < 0) throw std::invalid_argument("packing file: missing count line");
  TrianglePacking out;
  out.triangles.reserve(static_cast<std::size_t>(k));
  for (long long i = 0; i < k; ++i) {
    long long a = -1;
    long long b = -1;
    long long c = -1;
    if (!(in >> a >> b >> c) || a < 0 || b < 0 || c < 0) {
      throw std::invalid_argument("packing file: malformed triangle " + std::to_string(i));
    }
    out.triangles.push_back(
        make_triangle(static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c)));
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("packing file: trailing data");
  return out;
}

void write_packing(std::ostream& out, const TrianglePacking& packing) {
  out << packing.size() << '\n';
  for (const Triangle& t : packing.triangles) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

std::uint64_t count_triangles(const Graph& g) { return count_triangles(g, g.vertices()); }

std::uint64_t count_triangles(const Graph& g, const VertexSet& within) {
  std::uint64_t total = 0;
  within.for_each([&](Vertex u) {
    const VertexSet& nu = g.neighbors(u);
    for (auto v = nu.next_after(u); v; v = nu.next_after(*v)) {
      if (within.contains(*v)) total += nu.count_common(g.neighbors(*v), within);
    }
  });
  return total / 3;
}

std::uint64_t count_k4(const Graph& g, const VertexSet& within) {
  // Each K4 is seen once from each of its six edges.
  std::uint64_t total = 0;
  within.for_each([&](Vertex u) {
    const VertexSet& nu = g.neighbors(u);
    for (auto v = nu.next_after(u); v; v = nu.next_after(*v)) {
      if (!within.contains(*v)) continue;
      const VertexSet common = nu & g.neighbors(*v) & within;
      if (common.size() >= 2) total += edges_within(g, common);
    }
  });
  return total / 6;
}

TrianglePacking greedy_triangle_packing(const Graph& g) {
  TrianglePacking out;
  VertexSet used(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (used.contains(v)) continue;
    const VertexSet candidates = g.neighbors(v) - used;
    bool done = false;
    candidates.for_each([&](Vertex x) {
      if (done) return;
      if (auto y = (g.neighbors(x) & candidates).first()) {
        out.triangles.push_back(make_triangle(v, x, *y));
        used.insert(v);
        used.insert(x);
        used.insert(*y);
        done = true;
      }
    });
  }
  return out;
}

namespace {

struct StepLimitReached {};

class ExactSearch {
 public:
  ExactSearch(const Graph& g, std::optional<std::uint64_t> limit)
      : limit_(limit.value_or(std::numeric_limits<std::uint64_t>::max())), by_vertex_(g.n()) {
    for (Vertex a = 0; a < g.n(); ++a) {
      const VertexSet& na = g.neighbors(a);
      for (auto b = na.next_after(a); b; b = na.next_after(*b)) {
        const VertexSet& nb = g.neighbors(*b);
        for (auto c = nb.next_after(*b); c; c = nb.next_after(*c)) {
          if (!na.contains(*c)) continue;
          const auto index = static_cast<std::uint32_t>(tris_.size());
          tris_.push_back({bit(a) | bit(*b) | bit(*c), {a, *b, *c}});
          by_vertex_[a].push_back(index);
          by_vertex_[*b].push_back(index);
          by_vertex_[*c].push_back(index);
        }
      }
    }
  }

  std::uint64_t all_mask(std::size_t n) const {
    return n == 64 ? ~0ULL : (1ULL << n) - 1;
  }

  // Upper bound floor(|vertices on live triangles| / 3).
  int upper_bound(std::uint64_t mask) const {
    std::uint64_t live = 0;
    for (const auto& t : tris_) {
      if ((t.mask & ~mask) == 0) live |= t.mask;
    }
    return std::popcount(live) / 3;
  }

  int solve(std::uint64_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    if (++steps_ > limit_) throw StepLimitReached{};
    const Branch br = branch(mask);
    int best = 0;
    if (br.upper > 0) {
      for (std::uint32_t ti : by_vertex_[br.vertex]) {
        const auto& t = tris_[ti];
        if ((t.mask & ~mask) != 0) continue;
        best = std::max(best, 1 + solve(mask & ~t.mask));
        if (best == br.upper) break;
      }
      if (best < br.upper) best = std::max(best, solve(mask & ~bit(br.vertex)));
    }
    memo_.emplace(mask, best);
    return best;
  }

  // Root search that may stop early once `target` is met.
  int solve_root(std::uint64_t mask, std::size_t target, bool& stopped_early) {
    stopped_early = false;
    const Branch br = branch(mask);
    if (br.upper == 0) return 0;
    int best = 0;
    for (std::uint32_t ti : by_vertex_[br.vertex]) {
      const auto& t = tris_[ti];
      if ((t.mask & ~mask) != 0) continue;
      best = std::max(best, 1 + solve(mask & ~t.mask));
      if (best == br.upper) return best;
      if (static_cast<std::size_t>(best) >= target) {
        stopped_early = true;
        return best;
      }
    }
    best = std::max(best, solve(mask & ~bit(br.vertex)));
    memo_.emplace(mask, best);
    return best;
  }

  // Follows memoised values; call after solve/solve_root on `mask`.
  void reconstruct(std::uint64_t mask, int value, TrianglePacking& out) {
    limit_ = std::numeric_limits<std::uint64_t>::max();
    while (value > 0) {
      const Branch br = branch(mask);
      bool taken = false;
      for (std::uint32_t ti : by_vertex_[br.vertex]) {
        const auto& t = tris_[ti];
        if ((t.mask & ~mask) != 0) continue;
        if (1 + solve(mask & ~t.mask) == value) {
          out.triangles.push_back(t.tri);
          mask &= ~t.mask;
          --value;
          taken = true;
          break;
        }
      }
      if (!taken) mask &= ~bit(br.vertex);
    }
  }

  std::uint64_t steps() const { return steps_; }

 private:
  struct Tri {
    std::uint64_t mask;
    Triangle tri;
  };
  struct Branch {
    Vertex vertex = 0;
    int upper = 0;
  };

  static std::uint64_t bit(Vertex v) { return 1ULL << v; }

  // Vertex with the fewest live triangles, lowest index on ties.
  Branch branch(std::uint64_t mask) const {
    std::array<int, 64> counts{};
    std::uint64_t live = 0;
    for (const auto& t : tris_) {
      if ((t.mask & ~mask) != 0) continue;
      live |= t.mask;
      for (Vertex v : t.tri) ++counts[v];
    }
    Branch br;
    br.upper = std::popcount(live) / 3;
    int fewest = std::numeric_limits<int>::max();
    for (std::uint64_t bits = live; bits != 0; bits &= bits - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(bits));
      if (counts[v] < fewest) {
        fewest = counts[v];
        br.vertex = v;
      }
    }
    return br;
  }

  std::uint64_t limit_;
  std::uint64_t steps_ = 0;
  std::vector<Tri> tris_;
  std::vector<std::vector<std::uint32_t>> by_vertex_;
  std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace

ExactPackingResult max_triangle_packing_exact(const Graph& g, ExactPackingOptions options) {
  if (g.n() > 64) {
    throw std::invalid_argument("max_triangle_packing_exact: n=" + std::to_string(g.n()) +
                                " exceeds 64");
  }
  ExactPackingResult result;
  result.packing = greedy_triangle_packing(g);
  const std::size_t target = options.target.value_or(std::numeric_limits<std::size_t>::max());
  ExactSearch search(g, options.step_limit);
  const std::uint64_t root = search.all_mask(g.n());
  if (static_cast<int>(result.packing.size()) == search.upper_bound(root)) {
    result.status = SearchStatus::optimal;
    return result;
  }
  if (result.packing.size() >= target) {
    result.status = SearchStatus::target_reached;
    return result;
  }
  try {
    bool stopped_early = false;
    const int value = search.solve_root(root, target, stopped_early);
    TrianglePacking best;
    search.reconstruct(root, value, best);
    result.packing = std::move(best);
    result.status = stopped_early ? SearchStatus::target_reached : SearchStatus::optimal;
  } catch (const StepLimitReached&) {
    result.status = SearchStatus::unknown;
  }
  result.steps = search.steps();
  return result;
}

IndexMatching maximum_matching(const std::vector<VertexSet>& left_adj,
                               const std::vector<std::optional<Vertex>>& initial) {
  constexpr int kInf = std::numeric_limits<int>::max();
  const std::size_t left = left_adj.size();
  const std::size_t universe = left == 0 ? 0 : left_adj.front().universe();
  std::vector<int> match_left(left, -1);
  std::vector<int> match_right(universe, -1);
  for (std::size_t i = 0; i < initial.size() && i < left; ++i) {
    if (!initial[i]) continue;
    const Vertex v = *initial[i];
    if (v < universe && left_adj[i].contains(v) && match_right[v] < 0) {
      match_left[i] = static_cast<int>(v);
      match_right[v] = static_cast<int>(i);
    }
  }

  std::vector<int> dist(left, kInf);
  auto bfs = [&]() {
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < left; ++i) {
      dist[i] = match_left[i] < 0 ? 0 : kInf;
      if (match_left[i] < 0) queue.push_back(i);
    }
    bool found = false;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      left_adj[u].for_each([&](Vertex v) {
        const int w = match_right[v];
        if (w < 0) {
          found = true;
        } else if (dist[static_cast<std::size_t>(w)] == kInf) {
          dist[static_cast<std::size_t>(w)] = dist[u] + 1;
          queue.push_back(static_cast<std::size_t>(w));
        }
      });
    }
    return found;
  };

  auto dfs = [&](auto&& self, std::size_t u) -> bool {
    const VertexSet& adj = left_adj[u];
    for (auto v = adj.first(); v; v = adj.next_after(*v)) {
      const int w = match_right[*v];
      if (w < 0 || (dist[static_cast<std::size_t>(w)] == dist[u] + 1 &&
                    self(self, static_cast<std::size_t>(w)))) {
        match_left[u] = static_cast<int>(*v);
        match_right[*v] = static_cast<int>(u);
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  while (bfs()) {
    for (std::size_t i = 0; i < left; ++i) {
      if (match_left[i] < 0) dfs(dfs, i);
    }
  }

  IndexMatching out;
  out.left_to_right.resize(left);
  for (std::size_t i = 0; i < left; ++i) {
    if (match_left[i] >= 0) {
      out.left_to_right[i] = static_cast<Vertex>(match_left[i]);
      ++out.size;
    }
  }
  return out;
}

namespace {

void check_sides(const Graph& g, const VertexSet& a, const VertexSet& b, const char* who) {
  if (a.universe() != g.n() || b.universe() != g.n()) {
    throw std::invalid_argument(std::string(who) + ": vertex sets must use the graph universe");
  }
  if (a.intersects(b)) throw std::invalid_argument(std::string(who) + ": sides overlap");
}

}  // namespace

BipartiteMatching max_bipartite_matching(const Graph& g, const VertexSet& a, const VertexSet& b) {
  check_sides(g, a, b, "max_bipartite_matching");
  const std::vector<Vertex> left = a.to_vector();
  std::vector<VertexSet> adj;
  adj.reserve(left.size());
  for (Vertex u : left) adj.push_back(g.neighbors(u) & b);
  const IndexMatching m = maximum_matching(adj);
  BipartiteMatching out;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (m.left_to_right[i]) out.pairs.push_back({left[i], *m.left_to_right[i]});
  }
  return out;
}

std::optional<VertexSet> hall_violator(const Graph& g, const VertexSet& a, const VertexSet& b) {
  check_sides(g, a, b, "hall_violator");
  if (a.size() > b.size()) throw std::invalid_argument("hall_violator: need |a| <= |b|");
  const BipartiteMatching m = max_bipartite_matching(g, a, b);
  if (m.size() == a.size()) return std::nullopt;

  std::vector<int> partner_of_b(g.n(), -1);
  VertexSet matched_a(g.n());
  for (const Edge& e : m.pairs) {
    partner_of_b[e.v] = static_cast<int>(e.u);
    matched_a.insert(e.u);
  }
  // Alternating reachability from the unmatched a-vertices.
  VertexSet reached_a = a - matched_a;
  VertexSet reached_b(g.n());
  std::vector<Vertex> frontier = reached_a.to_vector();
  while (!frontier.empty()) {
    std::vector<Vertex> next;
    for (Vertex x : frontier) {
      const VertexSet fresh = (g.neighbors(x) & b) - reached_b;
      fresh.for_each([&](Vertex y) {
        reached_b.insert(y);
        const int z = partner_of_b[y];
        if (z >= 0 && !reached_a.contains(static_cast<Vertex>(z))) {
          reached_a.insert(static_cast<Vertex>(z));
          next.push_back(static_cast<Vertex>(z));
        }
      });
    }
    frontier = std::move(next);
  }
  return reached_a;
}

}  // namespace tripack
