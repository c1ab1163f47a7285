"""Graph ingest/emit: JSON edge lists for multigraphs, graph6 for simple graphs."""
from __future__ import annotations

import json

from .multigraph import GraphError, LabeledMultigraph


def to_json_dict(g):
    return {
        "vertices": g.sorted_vertices(),
        "edges": [
            {"id": e, "a": a, "b": b} for e, (a, b) in sorted(g.edges.items())
        ],
    }


def to_json(g):
    return json.dumps(to_json_dict(g), sort_keys=True)


def from_json_dict(data):
    edges = {rec["id"]: (rec["a"], rec["b"]) for rec in data.get("edges", ())}
    return LabeledMultigraph(data.get("vertices", ()), edges)


def from_json(text):
    return from_json_dict(json.loads(text))


_G6_HEADER = ">>graph6<<"


def from_graph6(text):
    """Decode one graph6 line (simple graphs, n <= 62 is all we need)."""
    text = text.strip()
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    if not text:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in text]
    if any(x < 0 or x > 63 for x in data):
        raise GraphError("invalid graph6 character")
    if data[0] == 63:
        if len(data) < 4:
            raise GraphError("truncated graph6 header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    bits = []
    for x in body:
        for k in range(5, -1, -1):
            bits.append((x >> k) & 1)
    need = n * (n - 1) // 2
    if len(bits) < need:
        raise GraphError("truncated graph6 body")
    edges = {}
    eid = 1
    i = 0
    for b in range(1, n):
        for a in range(b):
            if bits[i]:
                edges[eid] = (a, b)
                eid += 1
            i += 1
    return LabeledMultigraph(range(n), edges)


def to_graph6(g):
    """Encode a simple graph as graph6; vertices are renumbered 0..n-1."""
    if not g.is_simple():
        raise GraphError("graph6 requires a simple graph")
    order = g.sorted_vertices()
    index = {v: i for i, v in enumerate(order)}
    n = len(order)
    if n > 62:
        raise GraphError("graph6 writer supports at most 62 vertices")
    present = {(min(index[a], index[b]), max(index[a], index[b]))
               for a, b in g.edges.values()}
    bits = []
    for b in range(1, n):
        for a in range(b):
            bits.append(1 if (a, b) in present else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        x = 0
        for bit in bits[i:i + 6]:
            x = (x << 1) | bit
        chars.append(chr(x + 63))
    return "".join(chars)


def load_graph(path):
    """Read a graph file; .g6/.graph6 is graph6, anything else JSON."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    name = str(path).lower()
    if name.endswith(".g6") or name.endswith(".graph6"):
        return from_graph6(text)
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_json(text)
    return from_graph6(text)
