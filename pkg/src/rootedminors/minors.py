"""Rooted minor search: explicit minor models with required-edge constraints.

A minor model is a pair (C, D) of disjoint edge sets, C a forest, together
with an isomorphism from host/C\\D (isolated vertices dropped) to the
pattern.  "Required" edges must survive into the minor's edge set, i.e. lie
outside C and D and map to pattern edges.  When the three edges of a host
triangle are all required, the keep-semantics force their images to form a
pattern triangle, which is the restriction condition triangle preservation
needs.
"""
from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from . import catalog
from .isomorphism import are_isomorphic
from .multigraph import GraphError, LabeledMultigraph

DEFAULT_NODE_CAP = 10_000_000


class SearchBudgetExceeded(RuntimeError):
    """The node-expansion cap was hit; a defect at the supported scale."""


@dataclass(frozen=True)
class MinorModel:
    host: LabeledMultigraph
    contracted: frozenset
    deleted: frozenset
    pattern_name: str
    iso: dict  # result vertex -> pattern vertex

    def to_json_dict(self):
        return {
            "pattern": self.pattern_name,
            "contracted": sorted(self.contracted),
            "deleted": sorted(self.deleted),
            "iso": {str(v): p for v, p in sorted(self.iso.items())},
        }


@dataclass(frozen=True)
class RootedQuery:
    host: LabeledMultigraph
    family: tuple
    required: frozenset
    triangle: tuple | None = None


def _forest_classes(host, contracted):
    """Union-find over the contracted edges; raises if C contains a cycle."""
    parent = {v: v for v in host.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in sorted(contracted):
        a, b = host.endpoints(e)
        ra, rb = find(a), find(b)
        if ra == rb:
            raise GraphError("contracted set is not a forest (edge %r)" % (e,))
        parent[max(ra, rb)] = min(ra, rb)
    return {v: find(v) for v in host.vertices}


def apply_model(host, contracted, deleted):
    """host/C\\D with stable edge ids; isolated leftover vertices are dropped."""
    contracted, deleted = frozenset(contracted), frozenset(deleted)
    if contracted & deleted:
        raise GraphError("contracted and deleted sets overlap")
    merge = _forest_classes(host, contracted)
    edges = {}
    for e, (a, b) in host.edges.items():
        if e in contracted or e in deleted:
            continue
        edges[e] = (merge[a], merge[b])
    touched = {v for pair in edges.values() for v in pair}
    return LabeledMultigraph(touched, edges)


def verify_model(model, pattern=None):
    """Re-derive the minor and check the stored isomorphism edge-by-edge.

    Returns (ok, diagnostics); nothing in the model is trusted.
    """
    diagnostics = []
    if pattern is None:
        pattern = catalog.build(model.pattern_name).graph
    try:
        result = apply_model(model.host, model.contracted, model.deleted)
    except GraphError as exc:
        return False, [str(exc)]
    iso = model.iso
    if set(iso) != set(result.vertices):
        diagnostics.append("iso domain does not match the minor's vertices")
    elif sorted(iso.values()) != pattern.sorted_vertices():
        diagnostics.append("iso is not onto the pattern vertices")
    else:
        order = result.sorted_vertices()
        for i, v in enumerate(order):
            for u in order[i:]:
                if result.multiplicity(v, u) != pattern.multiplicity(iso[v], iso[u]):
                    diagnostics.append(
                        "not isomorphic: multiplicity mismatch at (%r, %r)" % (v, u)
                    )
                    break
            else:
                continue
            break
    return not diagnostics, diagnostics


def _connected_subsets(adj, allowed, must, max_size, budget):
    """Connected subsets of `allowed`, containing `must`, up to max_size.

    No subset is produced twice.  `budget` is a one-element list counting
    expansions against the global node cap.
    """
    if max_size <= 0 or (must and len(must) > max_size):
        return
    allowed = set(allowed)
    if not must.issubset(allowed):
        return

    def rec(sub, ext, forbidden):
        budget[0] -= 1
        if budget[0] < 0:
            raise SearchBudgetExceeded("minor search exceeded its node cap")
        if must.issubset(sub):
            yield frozenset(sub)
        if len(sub) >= max_size:
            return
        for i, v in enumerate(ext):
            new_sub = sub | {v}
            new_forbidden = forbidden | set(ext[:i])
            new_ext = list(ext[i + 1:])
            seen = new_sub | new_forbidden | set(new_ext)
            for u in sorted(adj[v] & allowed):
                if u not in seen:
                    new_ext.append(u)
                    seen.add(u)
            yield from rec(new_sub, new_ext, new_forbidden)

    if must:
        root = min(must)
        ext = sorted(adj[root] & allowed)
        yield from rec({root}, ext, set())
    else:
        roots = sorted(allowed)
        for i, root in enumerate(roots):
            pool = allowed - set(roots[:i])
            ext = sorted(adj[root] & pool)
            yield from rec({root}, ext, set())


def _pin_assignments(required, host, pattern_adj):
    """All consistent ways to map required host edges onto pattern edges.

    Yields host-vertex -> pattern-vertex pin maps; two required edges never
    share a pattern edge (patterns are simple, so each pattern edge can keep
    only one host edge).
    """
    req = sorted(required)
    pat_edges = []
    for p, nbrs in pattern_adj.items():
        for q in nbrs:
            if p < q:
                pat_edges.append((p, q))
    pat_edges.sort()

    def rec(i, pins, used_edges):
        if i == len(req):
            yield dict(pins)
            return
        x, y = host.endpoints(req[i])
        if x == y:
            return  # a loop can never be a kept pattern edge
        for p, q in pat_edges:
            if (p, q) in used_edges:
                continue
            for px, py in ((p, q), (q, p)):
                if pins.get(x, px) != px or pins.get(y, py) != py:
                    continue
                new_pins = dict(pins)
                new_pins[x], new_pins[y] = px, py
                yield from rec(i + 1, new_pins, used_edges | {(p, q)})

    yield from rec(0, {}, frozenset())


def _spanning_tree_edges(host, branch):
    parent = {v: v for v in branch}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    tree = []
    for e in host.edge_ids():
        a, b = host.endpoints(e)
        if a in branch and b in branch and a != b:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
                tree.append(e)
    return tree


def _build_model(host, pattern, pattern_name, branches, required):
    """Assemble a MinorModel from a complete branch-set placement."""
    branch_of = {}
    for p, sub in branches.items():
        for v in sub:
            branch_of[v] = p
    contracted = []
    for p in sorted(branches):
        contracted.extend(_spanning_tree_edges(host, branches[p]))
    contracted = frozenset(contracted)
    between = {}
    for e in host.edge_ids():
        if e in contracted:
            continue
        a, b = host.endpoints(e)
        pa, pb = branch_of.get(a), branch_of.get(b)
        if pa is None or pb is None or pa == pb:
            continue
        key = (pa, pb) if pa <= pb else (pb, pa)
        between.setdefault(key, []).append(e)
    kept = set()
    for p, q in sorted(
        (p, q) for p in pattern.vertices for q in pattern.adjacency()[p] if p < q
    ):
        candidates = between.get((p, q) if p <= q else (q, p), [])
        forced = [e for e in candidates if e in required]
        kept.add(forced[0] if forced else min(candidates))
    deleted = frozenset(host.edge_ids()) - contracted - kept
    iso = {min(sub): p for p, sub in branches.items()}
    return MinorModel(host, contracted, deleted, pattern_name, iso)


def find_minor(host, pattern, required=(), pattern_name="", node_cap=DEFAULT_NODE_CAP):
    """Search for a minor model of `pattern` in `host` keeping `required`.

    Exhaustive for hosts in the supported size range: returns None only when
    no model exists.  Deterministic: the same query always yields the same
    model.  `pattern` may be a catalog name or a graph.
    """
    if isinstance(pattern, str):
        pattern_name = pattern
        pattern = catalog.build(pattern_name).graph
    required = frozenset(required)
    for e in required:
        if not host.has_edge(e):
            raise GraphError("required edge %r not in host" % (e,))
    if host.n < pattern.n or host.m < pattern.m:
        return None

    adj = host.adjacency()
    pattern_adj = pattern.adjacency()
    budget = [node_cap]

    for pins in _pin_assignments(required, host, pattern_adj):
        pins_by_p = {}
        for v, p in pins.items():
            pins_by_p.setdefault(p, set()).add(v)
        order = sorted(
            pattern.vertices,
            key=lambda p: (-len(pins_by_p.get(p, ())), -len(pattern_adj[p]), p),
        )
        all_pinned = set(pins)
        model = _place(
            host, pattern, pattern_name, adj, pattern_adj, order, pins_by_p,
            all_pinned, required, budget,
        )
        if model is not None:
            return model
    return None


def _place(host, pattern, pattern_name, adj, pattern_adj, order, pins_by_p,
           all_pinned, required, budget):
    available = set(host.vertices)
    branches = {}

    def min_need(i):
        return sum(max(1, len(pins_by_p.get(q, ()))) for q in order[i:])

    def feasible_frontiers(new_available):
        # every placed branch must still reach one vertex per unplaced
        # pattern neighbor
        for q, sub in branches.items():
            unplaced = [r for r in pattern_adj[q] if r not in branches]
            if not unplaced:
                continue
            frontier = set()
            for v in sub:
                frontier |= adj[v] & new_available
            if len(frontier) < len(unplaced):
                return False
        return True

    def rec(i):
        budget[0] -= 1
        if budget[0] < 0:
            raise SearchBudgetExceeded("minor search exceeded its node cap")
        if i == len(order):
            return _build_model(host, pattern, pattern_name, branches, required)
        p = order[i]
        must = frozenset(pins_by_p.get(p, ()))
        foreign_pins = all_pinned - must
        pool = available - foreign_pins
        max_size = len(available) - min_need(i + 1)
        for sub in _connected_subsets(adj, pool, must, max_size, budget):
            ok = True
            for q in pattern_adj[p]:
                if q in branches and not any(adj[v] & sub for v in branches[q]):
                    ok = False
                    break
            if not ok:
                continue
            branches[p] = sub
            available.difference_update(sub)
            if feasible_frontiers(available):
                found = rec(i + 1)
                if found is not None:
                    return found
            available.update(sub)
            del branches[p]
        return None

    return rec(0)


def find_family_minor(host, family, required=(), triangle=None,
                      node_cap=DEFAULT_NODE_CAP):
    """First (pattern-name, model) hit over the family, in listed order.

    In triangle mode the required set is the triangle's edge set and the
    kept edges necessarily form a pattern triangle.
    """
    if triangle is not None:
        triple = tuple(sorted(triangle))
        if triple not in host.triangles():
            raise GraphError("%r is not a triangle of the host" % (triangle,))
        required = frozenset(triple)
    for name in family:
        model = find_minor(host, name, required=required, node_cap=node_cap)
        if model is not None:
            return name, model
    return None


FAMILY_A = ("K33", "K33_01", "K33_02", "K33_11")
FAMILY_B = ("K33", "K33_01", "K33_02", "K33_11", "K5")


def preserve_triangle_k331(host, triangle, node_cap=DEFAULT_NODE_CAP):
    """A K33_11 minor model keeping the triangle's edges as a pattern triangle."""
    hit = find_family_minor(host, ("K33_11",), triangle=triangle,
                            node_cap=node_cap)
    return hit[1] if hit else None


def preserve_triangle_k5(host, triangle, node_cap=DEFAULT_NODE_CAP):
    """A K5 minor model keeping the triangle's edges as a pattern triangle.

    For hosts other than K5 itself: take a triangle-preserving K33_11 model
    and contract the kept edge playing the u1v1 role, which lies in no
    triangle of K33_11.  Some hosts (K33_13 with its class triangle is the
    smallest) admit a triangle-preserving K5 model but no triangle-preserving
    K33_11 model, so a direct rooted search backs up the contraction route.
    """
    k5 = catalog.build("K5").graph
    identity = are_isomorphic(host, k5)
    if identity is not None:
        return MinorModel(host, frozenset(), frozenset(), "K5", identity)
    base = preserve_triangle_k331(host, triangle, node_cap=node_cap)
    if base is None:
        hit = find_family_minor(host, ("K5",), triangle=triangle,
                                node_cap=node_cap)
        return hit[1] if hit else None
    entry = catalog.build("K33_11")
    u1v1 = {entry.vertex("u1"), entry.vertex("v1")}
    merge = _forest_classes(host, base.contracted)
    inv = {p: v for v, p in base.iso.items()}
    target = {inv[p] for p in u1v1}
    bridge = None
    for e in sorted(frozenset(host.edge_ids()) - base.contracted - base.deleted):
        a, b = host.endpoints(e)
        if {merge[a], merge[b]} == target:
            bridge = e
            break
    contracted = base.contracted | {bridge}
    result = apply_model(host, contracted, base.deleted)
    iso = are_isomorphic(result, k5)
    return MinorModel(host, contracted, frozenset(base.deleted), "K5", iso)


def is_planar(g):
    sg, _ = g.simplify()
    nxg = nx.Graph()
    nxg.add_nodes_from(sg.vertices)
    nxg.add_edges_from(sg.edges.values())
    ok, _ = nx.check_planarity(nxg)
    return ok


def obstruction(g, node_cap=DEFAULT_NODE_CAP):
    """A K33- or K5-minor model iff g is non-planar (smaller pattern first)."""
    if is_planar(g):
        return None
    for name in ("K33", "K5"):
        model = find_minor(g, name, node_cap=node_cap)
        if model is not None:
            return name, model
    raise AssertionError("non-planar graph without Kuratowski minor")


def k5_iff_k331(host, node_cap=DEFAULT_NODE_CAP):
    """Whether host has a K5-minor exactly when it has a K33_11-minor."""
    if not host.is_simple():
        raise GraphError("host must be simple")
    from .multigraph import is_three_connected

    if not is_three_connected(host):
        raise GraphError("host must be 3-connected")
    if are_isomorphic(host, catalog.build("K5").graph) is not None:
        raise GraphError("host must not be K5 itself")
    if is_planar(host):
        return True  # a planar host has neither minor
    has_k5 = find_minor(host, "K5", node_cap=node_cap) is not None
    has_k331 = find_minor(host, "K33_11", node_cap=node_cap) is not None
    return has_k5 == has_k331
