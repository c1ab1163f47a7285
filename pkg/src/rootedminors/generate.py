"""Graph generation for exhaustive and randomized verification runs.

Two independent exhaustive generators are provided so their counts can be
cross-checked: edge-addition enumeration with isomorphism dedup, and a
permutation-orbit count (plus, for 3-connected graphs, a wheel-based
closure generator).  Random host generators are driven by a caller-owned
random.Random so runs are reproducible from a seed.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from math import factorial

from .isomorphism import are_isomorphic
from .multigraph import LabeledMultigraph, is_three_connected


def _from_pairs(n, pairs):
    edges = {eid: pair for eid, pair in enumerate(sorted(pairs), start=1)}
    return LabeledMultigraph(range(n), edges)


def _invariant_key(g):
    degs = tuple(sorted(g.degree(v) for v in g.vertices))
    nbr = tuple(sorted(
        tuple(sorted(g.degree(u) for u in g.neighbors(v))) for v in g.vertices
    ))
    return (g.n, g.m, degs, nbr, len(g.triangles()))


def _add_new(buckets, g):
    """Insert g into invariant-keyed buckets unless an isomorph is present."""
    key = _invariant_key(g)
    seen = buckets.setdefault(key, [])
    for other in seen:
        if are_isomorphic(g, other) is not None:
            return False
    seen.append(g)
    return True


@lru_cache(maxsize=None)
def all_graphs(n):
    """All simple graphs on n vertices, one representative per isomorphism class.

    The result is cached and shared; treat it as read-only.

    Level-wise edge addition: every class with m edges is some class with
    m-1 edges plus one edge, so extending every representative by every
    non-edge and deduplicating is exhaustive.
    """
    levels = [[_from_pairs(n, [])]]
    all_pairs = list(combinations(range(n), 2))
    for m in range(1, len(all_pairs) + 1):
        buckets = {}
        out = []
        for g in levels[m - 1]:
            present = set(g.edges.values())
            for pair in all_pairs:
                if pair in present:
                    continue
                h = _from_pairs(n, sorted(present) + [pair])
                if _add_new(buckets, h):
                    out.append(h)
        if not out:
            break
        levels.append(out)
    return tuple(g for level in levels for g in level)


@lru_cache(maxsize=None)
def three_connected_graphs(n):
    if n < 4:
        return ()
    return tuple(g for g in all_graphs(n) if is_three_connected(g))


def count_graphs_orbit(n):
    """Number of isomorphism classes of simple graphs on n vertices.

    Independent of all_graphs: averages 2^(pair-orbits) over all vertex
    permutations (orbit counting), no graph construction involved.
    """
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    total = 0
    for perm in permutations(range(n)):
        seen = [False] * len(pairs)
        orbits = 0
        for i, (a, b) in enumerate(pairs):
            if seen[i]:
                continue
            orbits += 1
            x, y = a, b
            while True:
                x, y = perm[x], perm[y]
                j = index[(x, y) if x < y else (y, x)]
                if seen[j]:
                    break
                seen[j] = True
        total += 1 << orbits
    return total // factorial(n)


def count_graphs_masks(n):
    """Class count by brute force over all edge subsets; n <= 6 only."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    perms = []
    for perm in permutations(range(n)):
        table = [0] * len(pairs)
        for i, (a, b) in enumerate(pairs):
            x, y = perm[a], perm[b]
            table[i] = index[(x, y) if x < y else (y, x)]
        perms.append(table)
    seen = set()
    count = 0
    for mask in range(1 << len(pairs)):
        if mask in seen:
            continue
        count += 1
        for table in perms:
            img = 0
            rest = mask
            while rest:
                low = rest & -rest
                img |= 1 << table[low.bit_length() - 1]
                rest ^= low
            seen.add(img)
    return count


def wheel(spokes):
    """Wheel graph: a cycle of `spokes` rim vertices plus a hub joined to all."""
    if spokes < 3:
        raise ValueError("a wheel needs at least 3 rim vertices")
    pairs = [(0, i) for i in range(1, spokes + 1)]
    pairs += [(i, i + 1) for i in range(1, spokes)]
    pairs.append((1, spokes))
    return _from_pairs(spokes + 1, pairs)


def _all_splits(g):
    """Every simple 3-connected single-vertex split of g, raw (no dedup)."""
    from .multigraph import VertexSplit

    out = []
    for v in g.sorted_vertices():
        inc = sorted(g.incident(v))
        if len(inc) < 4:
            continue
        rest = inc[1:]
        first = inc[0]
        for k in range(1, len(rest)):
            for combo in combinations(rest, k):
                part_a = (first,) + combo
                part_b = tuple(e for e in rest if e not in combo)
                if len(part_b) < 2:
                    continue
                split = VertexSplit(v, frozenset(part_a), frozenset(part_b),
                                    g.fresh_edge_id())
                h = g.split_vertex(split)
                if h.is_simple() and is_three_connected(h):
                    out.append((h, split))
    return out


def three_connected_by_wheels(max_n):
    """All 3-connected simple graphs on <= max_n vertices via wheel closure.

    Every 3-connected simple graph arises from a wheel by edge additions
    and vertex splits, so closing the wheels under both operations is an
    exhaustive generator independent of all_graphs.
    """
    classes = []
    buckets = {}
    frontier = []
    for spokes in range(3, max_n):
        w = wheel(spokes)
        if _add_new(buckets, w):
            classes.append(w)
            frontier.append(w)
    while frontier:
        g = frontier.pop()
        fresh = []
        present = set(g.edges.values())
        for pair in combinations(g.sorted_vertices(), 2):
            if pair not in present:
                fresh.append(g.with_edge(g.fresh_edge_id(), *pair))
        if g.n < max_n:
            fresh.extend(h for h, _ in _all_splits(g))
        for h in fresh:
            if _add_new(buckets, h):
                classes.append(h)
                frontier.append(h)
    return classes


def random_nonplanar_host(rng, max_vertices=12):
    """A random 3-connected simple non-planar graph, never isomorphic to K5.

    A random subdivision of K5 or K3,3 keeps a Kuratowski minor, then random
    edge additions restore 3-connectivity.
    """
    from . import catalog

    while True:
        base = catalog.build(rng.choice(("K5", "K33"))).graph
        g = base
        for _ in range(rng.randint(0, max_vertices - base.n)):
            e = rng.choice(sorted(g.edges))
            a, b = g.endpoints(e)
            w = g.fresh_vertex_id()
            edges = dict(g.edges)
            del edges[e]
            edges[g.fresh_edge_id()] = (a, w)
            edges[g.fresh_edge_id() + 1] = (b, w)
            g = LabeledMultigraph(set(g.vertices) | {w}, edges)
        missing = [p for p in combinations(g.sorted_vertices(), 2)
                   if not g.multiplicity(*p)]
        rng.shuffle(missing)
        while not is_three_connected(g) and missing:
            g = g.with_edge(g.fresh_edge_id(), *missing.pop())
        if not is_three_connected(g):
            continue
        if g.n == 5:
            continue  # the only 3-connected outcome on 5 vertices here is K5
        return g


def random_host(rng, max_edges=12):
    """A random small multigraph (parallels and loops allowed)."""
    n = rng.randint(4, 8)
    m = rng.randint(3, max_edges)
    verts = list(range(n))
    edges = {}
    for eid in range(1, m + 1):
        if rng.random() < 0.05:
            v = rng.choice(verts)
            edges[eid] = (v, v)
        else:
            a, b = rng.sample(verts, 2)
            edges[eid] = (min(a, b), max(a, b))
    return LabeledMultigraph(verts, edges)
