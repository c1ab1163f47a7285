"""Generators: exhaustive counts cross-checked two ways, random host sanity."""
import random

from rootedminors import generate
from rootedminors.isomorphism import are_isomorphic
from rootedminors.minors import is_planar
from rootedminors.multigraph import is_three_connected

# classes of simple graphs on n vertices
GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
# 3-connected classes
THREE_CONNECTED_COUNTS = {4: 1, 5: 3, 6: 17, 7: 136}


def test_edge_addition_counts_match_orbit_counting():
    for n, expected in GRAPH_COUNTS.items():
        if n <= 6:
            assert len(generate.all_graphs(n)) == expected
        assert generate.count_graphs_orbit(n) == expected


def test_edge_addition_counts_match_mask_brute_force():
    for n in range(1, 7):
        assert len(generate.all_graphs(n)) == generate.count_graphs_masks(n)


def test_no_two_representatives_are_isomorphic():
    graphs = generate.all_graphs(5)
    for i, g in enumerate(graphs):
        for h in graphs[i + 1:]:
            assert are_isomorphic(g, h) is None


def test_three_connected_counts():
    for n, expected in THREE_CONNECTED_COUNTS.items():
        assert len(generate.three_connected_graphs(n)) == expected


def test_wheel_closure_agrees_with_filtering():
    # wheels closed under edge addition and vertex splitting give an
    # independent generator for the 3-connected classes
    closure = generate.three_connected_by_wheels(7)
    by_n = {}
    for g in closure:
        by_n[g.n] = by_n.get(g.n, 0) + 1
    assert by_n == THREE_CONNECTED_COUNTS
    for g in closure:
        assert g.is_simple() and is_three_connected(g)


def test_wheels():
    w3 = generate.wheel(3)
    assert w3.n == 4 and w3.m == 6
    assert is_three_connected(generate.wheel(6))


def test_random_nonplanar_hosts():
    rng = random.Random(11)
    for _ in range(25):
        g = generate.random_nonplanar_host(rng)
        assert g.n <= 12
        assert g.is_simple()
        assert is_three_connected(g)
        assert not is_planar(g)
        assert g.n >= 6  # never K5 itself


def test_random_hosts_are_reproducible():
    rng_a, rng_b = random.Random(3), random.Random(3)
    a = [generate.random_host(rng_a) for _ in range(5)]
    b = [generate.random_host(rng_b) for _ in range(5)]
    assert a == b
    assert all(g.m <= 12 for g in a)
