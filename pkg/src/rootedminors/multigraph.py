"""Labeled multigraph kernel: minor operations, simplification, connectivity.

Vertices are integers.  Edges are integers mapped to unordered endpoint
pairs; loops and parallel edges are allowed.  Edge ids are stable: deletion
and contraction never rename a surviving edge.  All operations return new
graphs; instances are never mutated after construction.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations


class GraphError(ValueError):
    """Raised for missing elements or malformed graph operations."""


class LabeledMultigraph:
    __slots__ = ("_vertices", "_edges")

    def __init__(self, vertices, edges=None):
        self._vertices = frozenset(vertices)
        norm = {}
        for eid, pair in (edges or {}).items():
            a, b = pair
            if a not in self._vertices or b not in self._vertices:
                raise GraphError("edge %r endpoint not in vertex set" % (eid,))
            eid = int(eid)
            if eid in norm:
                raise GraphError("duplicate edge id %r" % (eid,))
            norm[eid] = (a, b) if a <= b else (b, a)
        self._edges = norm

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self):
        return self._vertices

    def sorted_vertices(self):
        return sorted(self._vertices)

    @property
    def edges(self):
        return dict(self._edges)

    def edge_ids(self):
        return sorted(self._edges)

    def endpoints(self, e):
        try:
            return self._edges[e]
        except KeyError:
            raise GraphError("missing edge %r" % (e,)) from None

    @property
    def n(self):
        return len(self._vertices)

    @property
    def m(self):
        return len(self._edges)

    def has_edge(self, e):
        return e in self._edges

    def is_loop(self, e):
        a, b = self.endpoints(e)
        return a == b

    def incident(self, v):
        """Sorted ids of edges incident to v (loops included once)."""
        return sorted(e for e, (a, b) in self._edges.items() if v == a or v == b)

    def degree(self, v):
        """Vertex degree; a loop contributes 2."""
        d = 0
        for a, b in self._edges.values():
            if a == v:
                d += 1
            if b == v:
                d += 1
        return d

    def neighbors(self, v):
        """Sorted distinct neighbors of v (v itself only if a loop exists)."""
        out = set()
        for a, b in self._edges.values():
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return sorted(out)

    def multiplicity(self, u, v):
        """Number of parallel edges joining u and v (loops if u == v)."""
        key = (u, v) if u <= v else (v, u)
        return sum(1 for pair in self._edges.values() if pair == key)

    def edges_between(self, u, v):
        key = (u, v) if u <= v else (v, u)
        return sorted(e for e, pair in self._edges.items() if pair == key)

    def is_simple(self):
        seen = set()
        for a, b in self._edges.values():
            if a == b or (a, b) in seen:
                return False
            seen.add((a, b))
        return True

    def adjacency(self):
        """Simple adjacency sets (ignores multiplicities and loops)."""
        adj = {v: set() for v in self._vertices}
        for a, b in self._edges.values():
            if a != b:
                adj[a].add(b)
                adj[b].add(a)
        return adj

    # -- construction helpers --------------------------------------------

    def with_edge(self, eid, a, b):
        if eid in self._edges:
            raise GraphError("edge id %r already present" % (eid,))
        edges = dict(self._edges)
        edges[eid] = (a, b)
        return LabeledMultigraph(self._vertices | {a, b}, edges)

    def without_vertices(self, drop):
        drop = set(drop)
        for v in drop:
            if self.degree(v) != 0:
                raise GraphError("vertex %r is not isolated" % (v,))
        return LabeledMultigraph(self._vertices - drop, self._edges)

    def fresh_edge_id(self):
        return max(self._edges, default=0) + 1

    def fresh_vertex_id(self):
        return max(self._vertices, default=-1) + 1

    # -- minor operations --------------------------------------------------

    def contract_edge(self, e):
        """Contract edge e, merging its endpoints into the smaller vertex id.

        Parallel companions of e become loops and are retained.  Contracting
        a loop just removes it.
        """
        a, b = self.endpoints(e)
        if a == b:
            return self.delete_edge(e)
        keep, gone = (a, b) if a < b else (b, a)
        edges = {}
        for eid, (x, y) in self._edges.items():
            if eid == e:
                continue
            if x == gone:
                x = keep
            if y == gone:
                y = keep
            edges[eid] = (x, y)
        return LabeledMultigraph(self._vertices - {gone}, edges)

    def contract_edges(self, es):
        g = self
        for e in sorted(es):
            # ids are stable, so the order only affects merged vertex names
            g = g.contract_edge(e)
        return g

    def delete_edge(self, e):
        if e not in self._edges:
            raise GraphError("missing edge %r" % (e,))
        edges = dict(self._edges)
        del edges[e]
        return LabeledMultigraph(self._vertices, edges)

    def delete_edges(self, es):
        es = set(es)
        for e in es:
            if e not in self._edges:
                raise GraphError("missing edge %r" % (e,))
        return LabeledMultigraph(
            self._vertices, {e: p for e, p in self._edges.items() if e not in es}
        )

    def delete_vertex(self, v):
        if v not in self._vertices:
            raise GraphError("missing vertex %r" % (v,))
        edges = {e: (a, b) for e, (a, b) in self._edges.items() if v not in (a, b)}
        return LabeledMultigraph(self._vertices - {v}, edges)

    def simplify(self, prefer=()):
        """Remove loops and all but one edge per parallel class.

        The representative of each class is the smallest edge id, except that
        any edge listed in `prefer` wins its class.  Returns (graph, kept)
        where kept maps every non-loop edge id to its class representative.
        """
        prefer = set(prefer)
        classes = {}
        for eid, (a, b) in sorted(self._edges.items()):
            if a == b:
                continue
            classes.setdefault((a, b), []).append(eid)
        kept = {}
        edges = {}
        for pair, ids in classes.items():
            chosen = [e for e in ids if e in prefer]
            rep = min(chosen) if chosen else min(ids)
            edges[rep] = pair
            for e in ids:
                kept[e] = rep
        return LabeledMultigraph(self._vertices, edges), kept

    def split_vertex(self, split):
        """Expand a vertex into two adjacent vertices (inverse of contraction).

        The edges in split.part_a stay on the original vertex, those in
        split.part_b move to a fresh vertex, and the two are joined by the
        edge split.new_edge_id.  Contracting that edge recovers the graph
        up to vertex naming.
        """
        v = split.vertex
        if v not in self._vertices:
            raise GraphError("missing vertex %r" % (v,))
        part_a, part_b = set(split.part_a), set(split.part_b)
        inc = set(self.incident(v))
        if part_a & part_b or (part_a | part_b) != inc:
            raise GraphError("parts must partition the incident edges of %r" % (v,))
        if len(part_a) < 2 or len(part_b) < 2:
            raise GraphError("both parts must contain at least 2 edges")
        if split.new_edge_id in self._edges:
            raise GraphError("edge id %r already present" % (split.new_edge_id,))
        w = self.fresh_vertex_id()
        edges = {}
        for eid, (a, b) in self._edges.items():
            if eid in part_b:
                if a == v:
                    a = w
                if b == v:
                    b = w
            edges[eid] = (a, b)
        edges[split.new_edge_id] = (v, w)
        return LabeledMultigraph(self._vertices | {w}, edges)

    # -- triangles ---------------------------------------------------------

    def triangles(self):
        """All 3-edge sets forming a cycle on 3 distinct vertices.

        Parallel edges yield distinct triangles.  Output is deterministic:
        sorted id triples in sorted order.
        """
        adj = self.adjacency()
        out = []
        for a, b, c in combinations(self.sorted_vertices(), 3):
            if b in adj[a] and c in adj[a] and c in adj[b]:
                for e1 in self.edges_between(a, b):
                    for e2 in self.edges_between(b, c):
                        for e3 in self.edges_between(a, c):
                            out.append(tuple(sorted((e1, e2, e3))))
        return sorted(out)

    # -- comparison / repr ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LabeledMultigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self._vertices, tuple(sorted(self._edges.items()))))

    def __repr__(self):
        return "LabeledMultigraph(n=%d, m=%d)" % (self.n, self.m)


@dataclass(frozen=True)
class VertexSplit:
    """Partition of a vertex's incident edges for an expansion."""

    vertex: int
    part_a: frozenset
    part_b: frozenset
    new_edge_id: int


def complete_graph(n):
    vertices = range(n)
    edges = {}
    eid = 1
    for a, b in combinations(vertices, 2):
        edges[eid] = (a, b)
        eid += 1
    return LabeledMultigraph(vertices, edges)


def cycle_graph(n):
    edges = {i + 1: (i, (i + 1) % n) for i in range(n)}
    return LabeledMultigraph(range(n), edges)


def _components(vertices, adj):
    seen = set()
    comps = []
    for s in sorted(vertices):
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u not in comp:
                    comp.add(u)
                    queue.append(u)
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g):
    if g.n == 0:
        return True
    return len(_components(g.vertices, g.adjacency())) == 1


def _local_connectivity(adj, order, s, t):
    """Max number of internally vertex-disjoint s-t paths (s,t non-adjacent).

    Unit-capacity max flow on the vertex-split digraph, BFS augmentation.
    """
    # nodes: (v, 0)=in, (v, 1)=out; arc (v,0)->(v,1) capacity 1 except s,t
    cap = {}
    for v in order:
        cap[((v, 0), (v, 1))] = 1 if v not in (s, t) else len(order)
    for v in order:
        for u in adj[v]:
            cap[((v, 1), (u, 0))] = len(order)
    flow = 0
    while True:
        prev = {(s, 0): None}
        queue = deque([(s, 0)])
        while queue and (t, 1) not in prev:
            node = queue.popleft()
            for (a, b), c in cap.items():
                if a == node and c > 0 and b not in prev:
                    prev[b] = a
                    queue.append(b)
        if (t, 1) not in prev:
            return flow
        node = (t, 1)
        while prev[node] is not None:
            p = prev[node]
            cap[(p, node)] -= 1
            cap[(node, p)] = cap.get((node, p), 0) + 1
            node = p
        flow += 1


def vertex_connectivity(g):
    """Minimum vertex-cut size; K_n yields n-1, disconnected graphs 0.

    The graph is simplified first, so loops and parallel edges are ignored.
    """
    sg, _ = g.simplify()
    n = sg.n
    if n <= 1:
        return 0
    adj = sg.adjacency()
    order = sg.sorted_vertices()
    nonadjacent = [
        (s, t) for s, t in combinations(order, 2) if t not in adj[s]
    ]
    if not nonadjacent:
        return n - 1
    if len(_components(sg.vertices, adj)) > 1:
        return 0
    return min(_local_connectivity(adj, order, s, t) for s, t in nonadjacent)


def _connected_after_removal(adj, vertices, removed):
    remaining = [v for v in vertices if v not in removed]
    if not remaining:
        return False
    comp = {remaining[0]}
    queue = deque([remaining[0]])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in removed and u not in comp:
                comp.add(u)
                queue.append(u)
    return len(comp) == len(remaining)


def is_three_connected(g):
    """True iff the simplification is 3-connected and has at least 4 vertices.

    Checked by direct enumeration of cut sets of size 0, 1 and 2, which is
    much cheaper than a full connectivity computation at this scale.
    """
    sg, _ = g.simplify()
    if sg.n < 4:
        return False
    adj = sg.adjacency()
    order = sg.sorted_vertices()
    if any(len(adj[v]) < 3 for v in order):
        return False
    if not _connected_after_removal(adj, order, frozenset()):
        return False
    for v in order:
        if not _connected_after_removal(adj, order, {v}):
            return False
    for u, v in combinations(order, 2):
        if not _connected_after_removal(adj, order, {u, v}):
            return False
    return True
