"""2-roundedness verification via the extension/coextension criterion.

A family F of 3-connected simple graphs is 2-rounded when every 3-connected
single-element extension or coextension M of a member (with distinguished
element e, the added or split edge) has, for every other edge f, an F-minor
whose edge set contains both e and f.  Only simple 3-connected candidates
matter, so the enumerators filter to those.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import catalog
from .io import to_json_dict
from .isomorphism import are_isomorphic
from .minors import DEFAULT_NODE_CAP, FAMILY_A, FAMILY_B, find_family_minor
from .multigraph import VertexSplit, is_three_connected


@dataclass(frozen=True)
class Candidate:
    parent: str
    kind: str  # "extension" or "coextension"
    graph: object
    element: int  # added edge (extension) or new split edge (coextension)
    provenance: object  # vertex pair or VertexSplit

    def to_json_dict(self):
        if isinstance(self.provenance, VertexSplit):
            prov = {
                "vertex": self.provenance.vertex,
                "part_a": sorted(self.provenance.part_a),
                "part_b": sorted(self.provenance.part_b),
            }
        else:
            prov = {"pair": list(self.provenance)}
        return {
            "parent": self.parent,
            "kind": self.kind,
            "element": self.element,
            "provenance": prov,
            "graph": to_json_dict(self.graph),
        }


@dataclass
class RoundednessReport:
    family: tuple
    candidates: list
    failures: list  # (candidate index, e, f)
    note: str = ("candidates restricted to simple 3-connected graphs; "
                 "others are outside the 2-rounded criterion's scope")

    @property
    def verdict(self):
        return "pass" if not self.failures else "fail"

    def to_json_dict(self):
        return {
            "family": list(self.family),
            "note": self.note,
            "candidates": [c.to_json_dict() for c in self.candidates],
            "failures": [
                {"candidate": i, "e": e, "f": f} for i, e, f in self.failures
            ],
            "verdict": self.verdict,
        }


def _tagged_isomorphic(c1, c2):
    """Isomorphism of candidates that must map tagged edge to tagged edge.

    Doubling the tagged edge makes it the unique parallel class, so a plain
    isomorphism of the doubled graphs is exactly a tag-preserving one.
    """
    g1 = c1.graph.with_edge(c1.graph.fresh_edge_id(), *c1.graph.endpoints(c1.element))
    g2 = c2.graph.with_edge(c2.graph.fresh_edge_id(), *c2.graph.endpoints(c2.element))
    return are_isomorphic(g1, g2) is not None


def _dedup(cands):
    out = []
    for c in cands:
        if not any(_tagged_isomorphic(c, kept) for kept in out):
            out.append(c)
    return out


def _entry(name_or_entry):
    if isinstance(name_or_entry, str):
        return catalog.build(name_or_entry)
    return name_or_entry


def enumerate_extensions(entry, dedup=True):
    """Simple 3-connected one-edge extensions, one per tagged-isomorphism class."""
    entry = _entry(entry)
    g = entry.graph
    out = []
    for a, b in combinations(g.sorted_vertices(), 2):
        if g.multiplicity(a, b):
            continue
        eid = g.fresh_edge_id()
        h = g.with_edge(eid, a, b)
        if is_three_connected(h):
            out.append(Candidate(entry.name, "extension", h, eid, (a, b)))
    return _dedup(out) if dedup else out


def enumerate_coextensions(entry, dedup=True):
    """Simple 3-connected vertex splits, one per tagged-isomorphism class.

    Splitting a vertex of degree < 4 would leave a degree-2 end, so only
    degree->=4 vertices and partitions with both parts of size >= 2 qualify.
    """
    entry = _entry(entry)
    g = entry.graph
    out = []
    for v in g.sorted_vertices():
        inc = sorted(g.incident(v))
        if len(inc) < 4:
            continue
        first, rest = inc[0], inc[1:]
        for k in range(1, len(rest)):
            for combo in combinations(rest, k):
                part_b = tuple(e for e in rest if e not in combo)
                if len(part_b) < 2:
                    continue
                split = VertexSplit(v, frozenset((first,) + combo),
                                    frozenset(part_b), g.fresh_edge_id())
                h = g.split_vertex(split)
                if h.is_simple() and is_three_connected(h):
                    out.append(Candidate(entry.name, "coextension", h,
                                         split.new_edge_id, split))
    return _dedup(out) if dedup else out


def verify_two_rounded(family, node_cap=DEFAULT_NODE_CAP):
    """Check the 2-rounded criterion for a family of catalog names."""
    family = tuple(family)
    candidates = []
    for name in family:
        candidates.extend(enumerate_extensions(name))
        candidates.extend(enumerate_coextensions(name))
    failures = []
    for i, cand in enumerate(candidates):
        e = cand.element
        for f in sorted(cand.graph.edges):
            if f == e:
                continue
            hit = find_family_minor(cand.graph, family, required={e, f},
                                    node_cap=node_cap)
            if hit is None:
                failures.append((i, e, f))
    return RoundednessReport(family, candidates, failures)


NAMED_FAMILIES = {"a": FAMILY_A, "b": FAMILY_B}
