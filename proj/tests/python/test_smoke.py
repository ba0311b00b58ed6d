import math

import pytest

import hcopt


def test_triangle_values():
    g = hcopt.make_clique(3)
    t = hcopt.Dendrogram.caterpillar(3)
    assert hcopt.evaluate(g, t, "dasgupta") == 8
    assert hcopt.evaluate(g, t, "similarity") == 1
    assert hcopt.evaluate(g, t, "dissimilarity") == 8


def test_graph_roundtrip_and_errors():
    g = hcopt.Graph(4, [(0, 1, 1.0), (2, 3, 0.5)])
    assert g.total_weight == pytest.approx(1.5)
    assert hcopt.Graph.from_json(g.to_json()) == g
    with pytest.raises(ValueError):
        hcopt.Graph(3, [(0, 1, -1.0)])
    with pytest.raises(ValueError):
        hcopt.make_embedded_clique_instance(20, 0.05)


def test_brute_force_and_linkage():
    g = hcopt.make_tight_dissimilarity_instance(2)
    tree, value = hcopt.brute_force_opt(g, "dissimilarity")
    assert value == pytest.approx(8.0)
    assert tree.num_leaves == 4
    t = hcopt.average_linkage(hcopt.make_clique(5))
    assert t.num_leaves == 5


def test_random_always_expectation():
    g = hcopt.make_tight_similarity_instance(3, 0.1)
    assert hcopt.expected_similarity_random(g) == pytest.approx(1147.5)
    assert hcopt.random_always(10, 3) == hcopt.random_always(10, 3)


def test_sdp_and_maxcut():
    sol = hcopt.solve_maxcut_sdp(hcopt.make_cycle(5))
    assert sol["objective"] == pytest.approx(5 * (1 - math.cos(4 * math.pi / 5)) / 2, rel=1e-4)
    hc = hcopt.solve_hc_sdp(hcopt.make_random_instance(5, 0.8, seed=2), seed=1)
    assert hc["feasible"]
    side, value = hcopt.gw_maxcut(hcopt.make_cycle(5), 100, 1)
    assert value == 4.0
    assert len(side) == 5


def test_constants():
    assert hcopt.alpha_similarity(0.139) == pytest.approx(0.336379, abs=1e-6)
    eps2, alpha = hcopt.optimize_alpha_similarity()
    assert 0.13 <= eps2 <= 0.15 and alpha > 1 / 3 + 0.003
    assert hcopt.alpha_dissimilarity(11.1, 0.000612) == pytest.approx(0.667078, abs=5e-6)
    p = hcopt.triplet_separation_probability(math.pi / 2, math.pi / 2, math.pi / 2)
    assert p == pytest.approx((0.25, 0.25, 0.25, 0.25))


def test_peel_and_best_of():
    g = hcopt.make_tight_dissimilarity_instance(5)
    tree, value, alg = hcopt.best_of_dissimilarity(g, 2, 7)
    assert value == pytest.approx(200.0)
    tree, peeled = hcopt.peel_off_first_maxcut_next(hcopt.make_clique(8), gamma=0.4, seed=1)
    assert peeled == [0, 1, 2, 3, 4]


def test_compare_is_reproducible():
    g = hcopt.make_random_instance(7, 0.7, seed=4)
    a = hcopt.compare_csv(g, ["avg-linkage", "random", "sdp-random"], 2, 9)
    b = hcopt.compare_csv(g, ["avg-linkage", "random", "sdp-random"], 2, 9)
    assert a == b
    assert a.startswith("instance,algorithm,trial,seed,objective,value,reference,ratio\n")


def test_verify():
    ok, summary = hcopt.verify("constants")
    assert ok, summary
    with pytest.raises(ValueError):
        hcopt.verify("nothing")
