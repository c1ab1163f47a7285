"""Exact multigraph isomorphism by backtracking with refinement pruning.

Intended for graphs with at most ~16 vertices.  Loops and edge
multiplicities are respected; the returned object is a vertex bijection
inducing a multigraph isomorphism, or None.
"""
from __future__ import annotations


def _multiplicity_tables(g):
    mult = {v: {} for v in g.vertices}
    loops = {v: 0 for v in g.vertices}
    for a, b in g.edges.values():
        if a == b:
            loops[a] += 1
        else:
            mult[a][b] = mult[a].get(b, 0) + 1
            mult[b][a] = mult[b].get(a, 0) + 1
    return mult, loops


def _refine(order, mult, loops):
    """Iterated neighborhood-multiset coloring; returns vertex -> color int."""
    color = {v: (sum(mult[v].values()) + 2 * loops[v], loops[v]) for v in order}
    canon = {}
    color = {v: canon.setdefault(color[v], len(canon)) for v in order}
    while True:
        sig = {
            v: (color[v], tuple(sorted((color[u], m) for u, m in mult[v].items())))
            for v in order
        }
        canon = {}
        new = {v: canon.setdefault(sig[v], len(canon)) for v in order}
        if len(set(new.values())) == len(set(color.values())):
            return new
        color = new


def _histogram(color):
    hist = {}
    for c in color.values():
        hist[c] = hist.get(c, 0) + 1
    return hist


def are_isomorphic(g1, g2):
    """Vertex bijection V(g1) -> V(g2) inducing an isomorphism, or None."""
    if g1.n != g2.n or g1.m != g2.m:
        return None
    order1, order2 = g1.sorted_vertices(), g2.sorted_vertices()
    mult1, loops1 = _multiplicity_tables(g1)
    mult2, loops2 = _multiplicity_tables(g2)
    # joint refinement so color ids are comparable across the two graphs
    joint_mult = {("a", v): {("a", u): m for u, m in mult1[v].items()} for v in order1}
    joint_mult.update(
        {("b", v): {("b", u): m for u, m in mult2[v].items()} for v in order2}
    )
    joint_loops = {("a", v): loops1[v] for v in order1}
    joint_loops.update({("b", v): loops2[v] for v in order2})
    joint_order = [("a", v) for v in order1] + [("b", v) for v in order2]
    color = _refine(joint_order, joint_mult, joint_loops)
    c1 = {v: color[("a", v)] for v in order1}
    c2 = {v: color[("b", v)] for v in order2}
    if _histogram(c1) != _histogram(c2):
        return None

    by_color2 = {}
    for v in order2:
        by_color2.setdefault(c2[v], []).append(v)
    # assign small color classes first
    todo = sorted(order1, key=lambda v: (len(by_color2.get(c1[v], ())), c1[v], v))

    mapping = {}
    used = set()

    def extend(i):
        if i == len(todo):
            return True
        v = todo[i]
        for w in by_color2[c1[v]]:
            if w in used:
                continue
            if loops1[v] != loops2[w]:
                continue
            ok = True
            for u, img in mapping.items():
                if mult1[v].get(u, 0) != mult2[w].get(img, 0):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    if extend(0):
        return dict(mapping)
    return None


def is_isomorphism(g1, g2, mapping):
    """Validate a claimed vertex bijection edge-by-edge."""
    if set(mapping) != set(g1.vertices):
        return False
    if sorted(mapping.values()) != g2.sorted_vertices():
        return False
    for v in g1.vertices:
        for u in g1.vertices:
            if u < v:
                continue
            if g1.multiplicity(v, u) != g2.multiplicity(mapping[v], mapping[u]):
                return False
    return True
