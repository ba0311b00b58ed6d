"""Hierarchical clustering objectives, algorithms and verification tools."""

from ._core import (
    Dendrogram,
    Graph,
    alpha_dissimilarity,
    alpha_similarity,
    average_linkage,
    best_of_dissimilarity,
    best_of_similarity,
    brute_force_opt,
    compare_csv,
    evaluate,
    expected_dissimilarity_random,
    expected_dissimilarity_random_exact,
    expected_similarity_random,
    gw_maxcut,
    make_clique,
    make_cycle,
    make_embedded_clique_instance,
    make_random_instance,
    make_tight_dissimilarity_instance,
    make_tight_similarity_instance,
    optimize_alpha_dissimilarity,
    optimize_alpha_similarity,
    peel_off_first_maxcut_next,
    random_always,
    run_algorithm,
    solve_hc_sdp,
    solve_maxcut_sdp,
    triplet_separation_probability,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
