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


// Python bindings. Vertex sets cross the boundary as lists of ints and
// packings as lists of (u, v, w) tuples.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tripack/experiments.hpp"
#include "tripack/generators.hpp"
#include "tripack/graph.hpp"
#include "tripack/oracle.hpp"
#include "tripack/packing.hpp"
#include "tripack/regularity.hpp"
#include "tripack/stability.hpp"

namespace py = pybind11;
namespace tp = tripack;

namespace {

using Triple = std::tuple<tp::Vertex, tp::Vertex, tp::Vertex>;

tp::VertexSet to_set(const std::vector<tp::Vertex>& vs, std::size_t n) {
  for (tp::Vertex v : vs) {
    if (v >= n) throw py::index_error("vertex " + std::to_string(v) + " out of range");
  }
  return tp::VertexSet::of(n, vs);
}

std::vector<Triple> to_triples(const tp::TrianglePacking& p) {
  std::vector<Triple> out;
  for (const auto& t : p.triangles) out.emplace_back(t[0], t[1], t[2]);
  return out;
}

tp::TrianglePacking from_triples(const std::vector<Triple>& ts) {
  tp::TrianglePacking p;
  for (const auto& [a, b, c] : ts) p.triangles.push_back(tp::make_triangle(a, b, c));
  return p;
}

py::dict pack_dict(const tp::PackResult& r) {
  py::dict d;
  d["triangles"] = to_triples(r.packing);
  d["revealed"] = r.revealed;
  d["target"] = r.target;
  d["notes"] = r.notes;
  return d;
}

py::dict stability_dict(const tp::StabilityReport& r) {
  py::dict d;
  d["holds"] = r.holds;
  d["a"] = r.a.to_vector();
  d["b"] = r.b.to_vector();
  d["cut_min_degree"] = r.cut_min_degree;
  d["exceptional_a"] = r.exceptional_a;
  d["exceptional_b"] = r.exceptional_b;
  d["failures"] = r.failures;
  return d;
}

}  // namespace

PYBIND11_MODULE(_tripack, m) {
  m.doc() = "Triangle packings in randomly perturbed graphs";

  py::class_<tp::Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n") = 0)
      .def_static(
          "from_edges",
          [](std::size_t n, const std::vector<std::pair<tp::Vertex, tp::Vertex>>& edges) {
            tp::GraphBuilder b(n);
            for (const auto& [u, v] : edges) b.add_edge(u, v);
            return std::move(b).build();
          },
          py::arg("n"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) {
        std::istringstream in(text);
        return tp::read_edge_list(in);
      })
      .def("dumps", [](const tp::Graph& g) {
        std::ostringstream out;
        tp::write_edge_list(out, g);
        return out.str();
      })
      .def_property_readonly("n", &tp::Graph::n)
      .def_property_readonly("edge_count", &tp::Graph::edge_count)
      .def("edges", [](const tp::Graph& g) {
        std::vector<std::pair<tp::Vertex, tp::Vertex>> out;
        for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("has_edge", &tp::Graph::has_edge)
      .def("degree", &tp::Graph::degree)
      .def("neighbors", [](const tp::Graph& g, tp::Vertex v) { return g.neighbors(v).to_vector(); })
      .def("min_degree", &tp::Graph::min_degree)
      .def("max_degree", &tp::Graph::max_degree)
      .def("__or__", &tp::graph_union)
      .def("__eq__", [](const tp::Graph& a, const tp::Graph& b) { return a == b; })
      .def("__repr__", [](const tp::Graph& g) {
        return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  // Generators.
  m.def("gnp", [](std::size_t n, double p, std::uint64_t seed) { return tp::gnp(n, p, tp::Seed(seed)); },
        py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("complete_graph", &tp::complete_graph);
  m.def("complete_bipartite", &tp::complete_bipartite, py::arg("a_size"), py::arg("n"));
  m.def("complete_multipartite", &tp::complete_multipartite);
  m.def("disjoint_bicliques", &tp::disjoint_bicliques, py::arg("count"), py::arg("side"));
  m.def("k4_counterexample", [](std::size_t n, std::size_t mm) {
    tp::K4Counterexample cx = tp::k4_counterexample(n, mm);
    return py::make_tuple(cx.graph, cx.a.to_vector(), cx.b.to_vector());
  });
  m.def(
      "stable_model",
      [](std::size_t n, double alpha, double beta, double defect, std::uint64_t seed) {
        tp::StableModel sm = tp::stable_model(n, alpha, beta, defect, tp::Seed(seed));
        return py::make_tuple(sm.graph, sm.a.to_vector(), sm.b.to_vector());
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("defect") = 0.0, py::arg("seed") = 1);

  // Oracles.
  m.def("count_triangles", [](const tp::Graph& g) { return tp::count_triangles(g); });
  m.def("greedy_triangle_packing", [](const tp::Graph& g) { return to_triples(tp::greedy_triangle_packing(g)); });
  m.def(
      "max_triangle_packing_exact",
      [](const tp::Graph& g, std::optional<std::size_t> target, std::optional<std::uint64_t> step_limit) {
        const tp::ExactPackingResult r = tp::max_triangle_packing_exact(g, {target, step_limit});
        const char* status = r.status == tp::SearchStatus::optimal          ? "optimal"
                             : r.status == tp::SearchStatus::target_reached ? "target_reached"
                                                                            : "unknown";
        return py::make_tuple(status, to_triples(r.packing));
      },
      py::arg("g"), py::arg("target") = std::nullopt, py::arg("step_limit") = std::nullopt);
  m.def("packing_error", [](const tp::Graph& g, const std::vector<Triple>& ts) {
    return tp::packing_error(g, from_triples(ts));
  });
  m.def("max_bipartite_matching", [](const tp::Graph& g, const std::vector<tp::Vertex>& a,
                                     const std::vector<tp::Vertex>& b) {
    std::vector<std::pair<tp::Vertex, tp::Vertex>> out;
    for (const auto& e : tp::max_bipartite_matching(g, to_set(a, g.n()), to_set(b, g.n())).pairs) {
      out.emplace_back(e.u, e.v);
    }
    return out;
  });
  m.def("hall_violator", [](const tp::Graph& g, const std::vector<tp::Vertex>& a,
                            const std::vector<tp::Vertex>& b) -> std::optional<std::vector<tp::Vertex>> {
    const auto s = tp::hall_violator(g, to_set(a, g.n()), to_set(b, g.n()));
    if (!s) return std::nullopt;
    return s->to_vector();
  });

  // Structure.
  m.def("density", [](const tp::Graph& g, const std::vector<tp::Vertex>& a, const std::vector<tp::Vertex>& b) {
    return tp::density(g, to_set(a, g.n()), to_set(b, g.n()));
  });
  m.def(
      "is_super_regular",
      [](const tp::Graph& g, const std::vector<tp::Vertex>& a, const std::vector<tp::Vertex>& b, double eps,
         double d, bool exhaustive, std::size_t trials, std::uint64_t seed) {
        const tp::CheckMode mode = exhaustive ? tp::CheckMode{tp::Exhaustive{}}
                                              : tp::CheckMode{tp::Sampled{trials, tp::Seed(seed)}};
        const auto r = tp::is_super_regular(g, to_set(a, g.n()), to_set(b, g.n()), eps, d, mode);
        return py::make_tuple(r.holds, r.reason);
      },
      py::arg("g"), py::arg("a"), py::arg("b"), py::arg("eps"), py::arg("d"), py::arg("exhaustive") = false,
      py::arg("trials") = 2000, py::arg("seed") = 1);
  m.def("verify_stability", [](const tp::Graph& g, const std::vector<tp::Vertex>& a, double alpha, double beta) {
    const tp::VertexSet sa = to_set(a, g.n());
    return stability_dict(tp::verify_stability(g, sa, sa.complement(), alpha, beta));
  });
  m.def("find_stable_partition", [](const tp::Graph& g, double alpha, double beta) -> py::object {
    const auto p = tp::find_stable_partition(g, alpha, beta);
    if (!p) return py::none();
    py::dict d = stability_dict(p->report);
    d["rule"] = p->seed_rule;
    return d;
  });

  // Packing pipelines.
  m.def(
      "perturbed_pack",
      [](const tp::Graph& g, double p, std::uint64_t seed) { return pack_dict(tp::perturbed_pack(g, p, tp::Seed(seed))); },
      py::arg("g"), py::arg("p"), py::arg("seed") = 1);
  m.def(
      "pack",
      [](const tp::Graph& g, const std::string& algo, double p, std::uint64_t seed,
         std::optional<std::vector<tp::Vertex>> a) {
        std::optional<tp::Bipartition> sides;
        if (a) {
          const tp::VertexSet sa = to_set(*a, g.n());
          sides = tp::Bipartition{sa, sa.complement()};
        }
        return pack_dict(tp::pack_with(g, tp::parse_algorithm(algo), p, tp::Seed(seed), sides));
      },
      py::arg("g"), py::arg("algo"), py::arg("p"), py::arg("seed") = 1, py::arg("a") = std::nullopt);
  m.def(
      "extremal_pack",
      [](const tp::Graph& g, const std::vector<tp::Vertex>& a, double alpha, double beta, double p,
         std::uint64_t seed) {
        const tp::VertexSet sa = to_set(a, g.n());
        return pack_dict(tp::extremal_pack(g, sa, sa.complement(), alpha, beta, p, tp::Seed(seed)));
      },
      py::arg("g"), py::arg("a"), py::arg("alpha"), py::arg("beta"), py::arg("p"), py::arg("seed") = 1);
  m.def(
      "sublinear_pack",
      [](const tp::Graph& g, std::size_t mm, double p, std::uint64_t seed) {
        return pack_dict(tp::sublinear_pack(g, mm, p, tp::Seed(seed)));
      },
      py::arg("g"), py::arg("m"), py::arg("p"), py::arg("seed") = 1);
  m.def("balance_amount", &tp::balance_amount, py::arg("u_size"), py::arg("v_size"), py::arg("delta0"));
  m.def("solve_split", [](std::size_t u, std::size_t v, double delta, double delta0) {
    const tp::SplitProbabilities q = tp::solve_split(u, v, delta, delta0);
    return py::make_tuple(q.q1, q.q2);
  });

  // Experiments.
  m.def("failure_certificate", [](const tp::Graph& g, const tp::Graph& overlay, const std::vector<tp::Vertex>& a) {
    const tp::VertexSet sa = to_set(a, g.n());
    const tp::FailureWitness w = tp::failure_certificate(g, overlay, sa, sa.complement());
    py::dict d;
    d["isolated_in_b"] = w.isolated_in_b;
    d["triangles_in_b"] = w.triangles_in_b;
    d["certified"] = w.certified;
    return d;
  });
  m.def(
      "sweep",
      [](const std::string& config_json) {
        const tp::ExperimentConfig cfg = tp::config_from_json(config_json);
        tp::SweepResult r;
        {
          py::gil_scoped_release release;
          r = tp::sweep(cfg);
        }
        py::list rows;
        for (const auto& row : r.rows) {
          py::dict d;
          d["C"] = row.c;
          d["n"] = row.n;
          d["trials"] = row.trials;
          d["successes"] = row.successes;
          d["success_rate"] = row.success_rate;
          d["mean_size"] = row.mean_size;
          rows.append(d);
        }
        return py::make_tuple(rows, r.errors);
      },
      py::arg("config_json"));
  m.def("k4_deficit_experiment", [](std::size_t n, std::size_t mm, double p, std::size_t trials, std::uint64_t seed) {
    const tp::K4DeficitSummary s = tp::k4_deficit_experiment(n, mm, p, trials, seed);
    py::dict d;
    d["trials"] = s.trials;
    d["below_m"] = s.below_m;
    d["fraction"] = s.fraction;
    d["counts"] = s.counts;
    return d;
  });
  m.def("matching_threshold_experiment", [](std::size_t n_side, double delta_frac, const std::vector<double>& cs,
                                            std::size_t trials, std::uint64_t seed) {
    py::list rows;
    for (const auto& r : tp::matching_threshold_experiment(n_side, delta_frac, cs, trials, seed)) {
      py::dict d;
      d["C"] = r.c;
      d["N"] = r.n_side;
      d["trials"] = r.trials;
      d["perfect"] = r.perfect;
      d["rate"] = r.rate;
      rows.append(d);
    }
    return rows;
  });
}
