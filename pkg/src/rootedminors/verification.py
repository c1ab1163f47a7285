"""End-to-end verification runs shared by the CLI and the test suite.

Each function returns a JSON-serializable report with a boolean "pass".
The runs verify the headline results at their exhaustive base scales:
catalog contraction identities, 2-roundedness of the K3,3 extension
families, the K5 / K33_11 minor equivalence, triangle-preserving minors,
the R12 facts, planarity-obstruction agreement, and the search engine
against a brute-force oracle.
"""
from __future__ import annotations

import random
from itertools import combinations

from . import catalog, generate, matroids, minors, rounded
from .isomorphism import are_isomorphic
from .minors import DEFAULT_NODE_CAP, FAMILY_A, FAMILY_B
from .multigraph import GraphError


def _contract_roles(name, ra, rb):
    entry = catalog.build(name)
    return entry.graph.contract_edge(entry.edge(ra, rb))


def _iso_to(g, name, simplify=False):
    if simplify:
        g, _ = g.simplify()
    return are_isomorphic(g, catalog.build(name).graph) is not None


def catalog_identities():
    """The contraction identities behind the roundedness case analysis.

    Contracting an edge whose ends share k neighbors leaves k parallel
    pairs, so the comparisons that need it go through simplify; the targets
    are forced by edge counts (for example G4/u3w2 loses three edges after
    simplification and lands on K3,3 itself).
    """
    checks = [
        ("K33_11/u1v1 = K5",
         _iso_to(_contract_roles("K33_11", "u1", "v1"), "K5")),
        ("si(G1/u3w2) = K33",
         _iso_to(_contract_roles("G1", "u3", "w2"), "K33", simplify=True)),
        ("G1/u3v1 = K33_01",
         _iso_to(_contract_roles("G1", "u3", "v1"), "K33_01")),
        ("si(G4/u3w2) = K33",
         _iso_to(_contract_roles("G4", "u3", "w2"), "K33", simplify=True)),
        ("si(G4/u3v1) = K33_01",
         _iso_to(_contract_roles("G4", "u3", "v1"), "K33_01", simplify=True)),
    ]
    e1 = catalog.build("G1")
    g2 = e1.graph.with_edge(
        e1.graph.fresh_edge_id(), e1.vertex("v1"), e1.vertex("w1")
    )
    checks.append(("G2 = G1 + v1w1", _iso_to(g2, "G2")))
    return {"pass": all(ok for _, ok in checks), "checks": checks}


def roundedness_families(node_cap=DEFAULT_NODE_CAP):
    reports = {}
    for label, family in (("a", FAMILY_A), ("b", FAMILY_B)):
        rep = rounded.verify_two_rounded(family, node_cap=node_cap)
        reports[label] = {
            "verdict": rep.verdict,
            "candidates": len(rep.candidates),
            "failures": len(rep.failures),
        }
    return {
        "pass": all(r["verdict"] == "pass" for r in reports.values()),
        "families": reports,
    }


def _three_connected_upto(max_n):
    for n in range(4, max_n + 1):
        for idx, g in enumerate(generate.three_connected_graphs(n)):
            yield n, idx, g


def k5_equivalence_exhaustive(max_n=8, node_cap=DEFAULT_NODE_CAP):
    """K5-minor iff K33_11-minor, over all 3-connected graphs except K5."""
    k5 = catalog.build("K5").graph
    checked = 0
    failures = []
    for n, idx, g in _three_connected_upto(max_n):
        if are_isomorphic(g, k5) is not None:
            continue
        checked += 1
        if not minors.k5_iff_k331(g, node_cap=node_cap):
            failures.append({"vertices": n, "index": idx})
    return {"pass": not failures, "checked": checked, "failures": failures}


def triangle_preservation_exhaustive(max_n=8, node_cap=DEFAULT_NODE_CAP):
    """Triangle preservation over all 3-connected hosts with a K33_11-minor.

    Checks both the K33_11 target and the K5 target for every
    triangle of every qualifying host.
    """
    hosts = 0
    triangles = 0
    failures_k331 = []
    failures_k5 = []
    for n, idx, g in _three_connected_upto(max_n):
        if minors.find_minor(g, "K33_11", node_cap=node_cap) is None:
            continue
        hosts += 1
        for tri in g.triangles():
            triangles += 1
            if minors.preserve_triangle_k331(g, tri, node_cap=node_cap) is None:
                failures_k331.append(
                    {"vertices": n, "index": idx, "triangle": list(tri)}
                )
            if minors.preserve_triangle_k5(g, tri, node_cap=node_cap) is None:
                failures_k5.append(
                    {"vertices": n, "index": idx, "triangle": list(tri)}
                )
    return {
        "pass": not failures_k331 and not failures_k5,
        "hosts": hosts,
        "triangles": triangles,
        "failures_k331": failures_k331,
        "failures_k5": failures_k5,
    }


def family_minor_sample(seed=0, hosts=500, pairs_per_host=10,
                        node_cap=DEFAULT_NODE_CAP):
    """Every 3-connected simple non-planar host except K5 has a family-(a)
    minor through any two of its edges; checked on seeded random hosts."""
    rng = random.Random(seed)
    failures = []
    for i in range(hosts):
        g = generate.random_nonplanar_host(rng)
        edge_ids = sorted(g.edges)
        for _ in range(pairs_per_host):
            e, f = rng.sample(edge_ids, 2)
            hit = minors.find_family_minor(g, FAMILY_A, required={e, f},
                                           node_cap=node_cap)
            if hit is None:
                failures.append({"host": i, "e": e, "f": f})
    return {"pass": not failures, "hosts": hosts,
            "pairs": hosts * pairs_per_host, "failures": failures}


def brute_force_has_minor(host, pattern, required=()):
    """Decision oracle: try every (contract set, delete set) split.

    Independent of find_minor's search; only feasible for hosts with few
    edges and patterns of comparable size.
    """
    required = frozenset(required)
    m_p = pattern.m
    edge_ids = sorted(set(host.edges) - required)
    slack = host.m - m_p
    if slack < 0:
        return False
    for c_size in range(slack + 1):
        for cset in combinations(edge_ids, c_size):
            try:
                minors.apply_model(host, cset, ())
            except GraphError:
                continue  # contracted set contains a cycle
            rest = [e for e in edge_ids if e not in cset]
            for dset in combinations(rest, slack - c_size):
                result = minors.apply_model(host, cset, dset)
                if result.n != pattern.n or result.m != pattern.m:
                    continue
                if are_isomorphic(result, pattern) is not None:
                    return True
    return False


def oracle_equivalence(seed=0, cases=200, node_cap=DEFAULT_NODE_CAP):
    """find_minor decisions against the brute-force oracle on random hosts."""
    rng = random.Random(seed)
    eligible = [n for n in catalog.list_names()
                if catalog.build(n).graph.m <= 11]
    agree = 0
    disagreements = []
    for i in range(cases):
        host = generate.random_host(rng, max_edges=12)
        pname = rng.choice(eligible)
        pattern = catalog.build(pname).graph
        required = rng.sample(sorted(host.edges), rng.randint(0, 2))
        fast = minors.find_minor(host, pattern, required=required,
                                 pattern_name=pname, node_cap=node_cap)
        slow = brute_force_has_minor(host, pattern, required=required)
        if (fast is not None) == slow:
            agree += 1
        else:
            disagreements.append(
                {"case": i, "pattern": pname, "required": list(required)}
            )
    return {"pass": agree == cases, "cases": cases, "agree": agree,
            "disagreements": disagreements}


def wagner_consistency(n=7, node_cap=DEFAULT_NODE_CAP):
    """is_planar vs Kuratowski minors on every simple graph with n vertices."""
    graphs = generate.all_graphs(n)
    mismatches = []
    for idx, g in enumerate(graphs):
        planar = minors.is_planar(g)
        has_k5 = minors.find_minor(g, "K5", node_cap=node_cap) is not None
        has_k33 = minors.find_minor(g, "K33", node_cap=node_cap) is not None
        obs = minors.obstruction(g, node_cap=node_cap)
        if planar != (not has_k5 and not has_k33) or planar != (obs is None):
            mismatches.append(idx)
    return {"pass": not mismatches, "graphs": len(graphs),
            "mismatches": mismatches}


def r12_suite():
    report = matroids.verify_r12_claims()
    return {
        "pass": all(v["pass"] for v in report.values()),
        "checks": {k: v["pass"] for k, v in report.items()},
        "detail": report,
    }


def verify_all(seed=0, node_cap=DEFAULT_NODE_CAP):
    """The full verification battery; heavyweight (tens of minutes)."""
    out = {
        "catalog_identities": catalog_identities(),
        "roundedness_families": roundedness_families(node_cap=node_cap),
        "k5_equivalence_exhaustive": k5_equivalence_exhaustive(node_cap=node_cap),
        "triangle_preservation_exhaustive": triangle_preservation_exhaustive(node_cap=node_cap),
        "family_minor_sample": family_minor_sample(seed=seed, node_cap=node_cap),
        "r12_suite": r12_suite(),
        "oracle_equivalence": oracle_equivalence(seed=seed, node_cap=node_cap),
        "wagner_consistency": wagner_consistency(node_cap=node_cap),
    }
    out["pass"] = all(v["pass"] for k, v in out.items() if k != "pass")
    return out
