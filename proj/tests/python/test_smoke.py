import json

import pytest

tripack = pytest.importorskip("tripack")


def test_graph_round_trip():
    g = tripack.Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert g.n == 4
    assert g.edge_count == 4
    assert g.has_edge(2, 0)
    assert g.min_degree() == 1
    assert tripack.Graph.parse(g.dumps()) == g


def test_exact_packing_on_multipartite():
    g = tripack.complete_multipartite([3, 3, 3])
    status, triangles = tripack.max_triangle_packing_exact(g)
    assert status == "optimal"
    assert len(triangles) == 3
    assert tripack.packing_error(g, triangles) is None


def test_packing_error_reports_missing_edge():
    g = tripack.complete_bipartite(3, 6)
    assert tripack.packing_error(g, [(0, 1, 3)]) is not None


def test_perturbed_pack_is_sound_on_union():
    g = tripack.complete_bipartite(30, 90)
    r = tripack.perturbed_pack(g, 0.05, 7)
    assert tripack.packing_error(g | r["revealed"], r["triangles"]) is None


def test_pack_at_full_probability_finds_factor():
    g, a, _ = tripack.stable_model(30, 1 / 3, 0.05, 0.0, 3)
    r = tripack.pack(g, "extremal", 1.0, 1, a)
    assert len(r["triangles"]) == 10


def test_stability_on_complete_bipartite():
    g = tripack.complete_bipartite(30, 90)
    rep = tripack.verify_stability(g, list(range(30)), 1 / 3, 0.05)
    assert rep["holds"]
    assert tripack.find_stable_partition(g, 1 / 3, 0.05) is not None


def test_matching_and_hall():
    g = tripack.complete_bipartite(2, 5)
    assert len(tripack.max_bipartite_matching(g, [0, 1], [2, 3, 4])) == 2
    assert tripack.hall_violator(g, [0, 1], [2, 3, 4]) is None
    h = tripack.Graph.from_edges(4, [(0, 2), (1, 2)])
    assert tripack.hall_violator(h, [0, 1], [2, 3]) == [0, 1]


def test_sweep_from_json():
    cfg = {"n": [30], "C": [0.5, 4.0], "trials": 2, "seed": 5, "model": {"name": "stable"}}
    rows, errors = tripack.sweep(json.dumps(cfg))
    assert len(rows) == 2
    assert all(0.0 <= r["success_rate"] <= 1.0 for r in rows)


def test_experiment_helpers():
    rows = tripack.matching_threshold_experiment(20, 0.6, [0.1, 4.0], 4, 1)
    assert [r["C"] for r in rows] == [0.1, 4.0]
    g, a, b = tripack.k4_counterexample(160, 8)
    assert (len(a), len(b)) == (32, 128)
