"""Triangle packings in randomly perturbed graphs."""

from ._tripack import (
    Graph,
    balance_amount,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    count_triangles,
    density,
    disjoint_bicliques,
    extremal_pack,
    failure_certificate,
    find_stable_partition,
    gnp,
    greedy_triangle_packing,
    hall_violator,
    is_super_regular,
    k4_counterexample,
    k4_deficit_experiment,
    matching_threshold_experiment,
    max_bipartite_matching,
    max_triangle_packing_exact,
    pack,
    packing_error,
    perturbed_pack,
    solve_split,
    stable_model,
    sublinear_pack,
    sweep,
    verify_stability,
)

__all__ = [name for name in dir() if not name.startswith("_")]
