"""Isomorphism search: correctness of hits, misses, and returned bijections."""
import random

from rootedminors import catalog
from rootedminors.isomorphism import are_isomorphic, is_isomorphism
from rootedminors.multigraph import LabeledMultigraph, complete_graph


def _shuffled_copy(g, rng):
    verts = g.sorted_vertices()
    perm = dict(zip(verts, rng.sample(verts, len(verts))))
    edges = {e: (perm[a], perm[b]) for e, (a, b) in g.edges.items()}
    return LabeledMultigraph(verts, edges)


def test_reflexive_on_every_catalog_graph():
    for name in catalog.list_names():
        g = catalog.build(name).graph
        mapping = are_isomorphic(g, g)
        assert mapping is not None
        assert is_isomorphism(g, g, mapping)


def test_symmetric_on_random_relabelings():
    rng = random.Random(7)
    names = catalog.list_names()
    for _ in range(100):
        g = catalog.build(rng.choice(names)).graph
        h = _shuffled_copy(g, rng)
        fwd = are_isomorphic(g, h)
        back = are_isomorphic(h, g)
        assert fwd is not None and back is not None
        assert is_isomorphism(g, h, fwd)
        assert is_isomorphism(h, g, back)


def test_side_symmetry_of_k33_extensions():
    # one edge added on either side of the bipartition gives the same graph
    k33 = catalog.build("K33")
    u_side = k33.graph.with_edge(10, k33.vertex("u2"), k33.vertex("u3"))
    assert are_isomorphic(u_side, catalog.build("K33_01").graph) is not None


def test_distinguishes_the_two_edge_extensions():
    g = catalog.build("K33_02").graph
    h = catalog.build("K33_11").graph
    assert g.m == h.m
    assert are_isomorphic(g, h) is None


def test_g2_is_g1_plus_edge():
    g1 = catalog.build("G1")
    plus = g1.graph.with_edge(g1.graph.fresh_edge_id(),
                              g1.vertex("v1"), g1.vertex("w1"))
    assert are_isomorphic(plus, catalog.build("G2").graph) is not None


def test_multiplicities_matter():
    path = LabeledMultigraph({0, 1, 2}, {1: (0, 1), 2: (1, 2)})
    doubled = LabeledMultigraph({0, 1, 2}, {1: (0, 1), 2: (0, 1)})
    assert are_isomorphic(path, doubled) is None


def test_loops_matter():
    loop = LabeledMultigraph({0, 1}, {1: (0, 1), 2: (0, 0)})
    parallel = LabeledMultigraph({0, 1}, {1: (0, 1), 2: (0, 1)})
    assert are_isomorphic(loop, parallel) is None
    assert are_isomorphic(loop, loop) is not None


def test_regular_non_isomorphic_pair():
    # K3,3 and the triangular prism are both cubic on 6 vertices
    prism = LabeledMultigraph(range(6), {
        1: (0, 1), 2: (1, 2), 3: (0, 2),
        4: (3, 4), 5: (4, 5), 6: (3, 5),
        7: (0, 3), 8: (1, 4), 9: (2, 5),
    })
    assert are_isomorphic(prism, catalog.build("K33").graph) is None


def test_is_isomorphism_rejects_bad_maps():
    g = complete_graph(4)
    good = {v: v for v in g.vertices}
    assert is_isomorphism(g, g, good)
    assert not is_isomorphism(g, g, {0: 0, 1: 1, 2: 2})
    assert not is_isomorphism(g, g, {0: 0, 1: 1, 2: 2, 3: 2})
