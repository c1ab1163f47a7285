"""Extension/coextension enumeration and the 2-roundedness verdicts."""
import json

from rootedminors import catalog, rounded
from rootedminors.isomorphism import are_isomorphic
from rootedminors.minors import FAMILY_A, FAMILY_B


def _iso(g, name):
    return are_isomorphic(g, catalog.build(name).graph) is not None


def test_k33_has_one_extension_class():
    cands = rounded.enumerate_extensions("K33")
    assert len(cands) == 1
    assert _iso(cands[0].graph, "K33_01")


def test_k5_has_no_extensions():
    assert rounded.enumerate_extensions("K5") == []


def test_k33_11_extensions_contain_k33_12():
    cands = rounded.enumerate_extensions("K33_11")
    assert any(_iso(c.graph, "K33_12") for c in cands)


def test_k33_has_no_coextensions():
    # all degrees are 3, and a valid split needs degree at least 4
    assert rounded.enumerate_coextensions("K33") == []


def test_k33_01_coextensions_are_exactly_g1():
    cands = rounded.enumerate_coextensions("K33_01")
    assert len(cands) == 1
    assert _iso(cands[0].graph, "G1")


def test_k5_coextensions_are_exactly_k33_11():
    cands = rounded.enumerate_coextensions("K5")
    assert len(cands) == 1
    assert _iso(cands[0].graph, "K33_11")


def test_candidates_restore_their_parent():
    for name in FAMILY_B:
        parent = catalog.build(name).graph
        for c in rounded.enumerate_extensions(name):
            assert _iso(c.graph.delete_edge(c.element), name)
        for c in rounded.enumerate_coextensions(name):
            back, _ = c.graph.contract_edge(c.element).simplify()
            assert are_isomorphic(back, parent) is not None


def test_dedup_is_sound_and_complete():
    for name in ("K33_02", "K33_11"):
        deduped = rounded.enumerate_coextensions(name)
        raw = rounded.enumerate_coextensions(name, dedup=False)
        # no two kept candidates are equivalent
        for i, a in enumerate(deduped):
            for b in deduped[i + 1:]:
                assert not rounded._tagged_isomorphic(a, b)
        # every raw candidate is represented
        for c in raw:
            assert any(rounded._tagged_isomorphic(c, k) for k in deduped)


def test_family_a_is_two_rounded():
    report = rounded.verify_two_rounded(FAMILY_A)
    assert report.verdict == "pass"
    assert not report.failures
    assert len(report.candidates) == 13


def test_family_b_is_two_rounded():
    report = rounded.verify_two_rounded(FAMILY_B)
    assert report.verdict == "pass"
    assert len(report.candidates) == 14


def test_k33_alone_is_not_two_rounded():
    # its one extension has no K3,3-minor through the added edge
    report = rounded.verify_two_rounded(("K33",))
    assert report.verdict == "fail"
    cand = report.candidates[0]
    assert any(i == 0 and e == cand.element for i, e, f in report.failures)


def test_report_is_reproducible_and_serializable():
    r1 = rounded.verify_two_rounded(FAMILY_A).to_json_dict()
    r2 = rounded.verify_two_rounded(FAMILY_A).to_json_dict()
    assert json.dumps(r1, sort_keys=True) == json.dumps(r2, sort_keys=True)
    assert r1["verdict"] == "pass"
    kinds = {c["kind"] for c in r1["candidates"]}
    assert kinds == {"extension", "coextension"}
