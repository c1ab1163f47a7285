"""Command-line interface: dispatch, exit codes, JSON output, certificates."""
import json

from rootedminors import catalog, io
from rootedminors.cli import FAIL, PASS, USAGE, dispatch


def _run(capsys, *argv):
    code = dispatch(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_catalog_list(capsys):
    code, out = _run(capsys, "catalog", "list")
    assert code == PASS
    assert "K33_11" in out


def test_catalog_dump_json(capsys):
    code, out = _run(capsys, "--json", "catalog", "dump", "K33_11")
    assert code == PASS
    data = json.loads(out)
    assert data["name"] == "K33_11"
    assert len(data["edges"]) == 11


def test_catalog_unknown_name_is_usage_error(capsys):
    code, _ = _run(capsys, "catalog", "dump", "K99")
    assert code == USAGE


def test_minor_find_absent(tmp_path, capsys):
    host = tmp_path / "k5.g6"
    host.write_text(io.to_graph6(catalog.build("K5").graph))
    code, _ = _run(capsys, "minor", "find", "--host", str(host),
                   "--pattern", "K33")
    assert code == FAIL


def test_minor_find_with_certificate_round_trip(tmp_path, capsys):
    host = tmp_path / "host.json"
    host.write_text(io.to_json(catalog.build("K33_11").graph))
    cert = tmp_path / "cert.json"
    code, _ = _run(capsys, "minor", "find", "--host", str(host),
                   "--pattern", "K5", "--certificate", str(cert))
    assert code == PASS
    code, out = _run(capsys, "--json", "minor", "verify", str(cert),
                     "--host", str(host))
    assert code == PASS
    assert json.loads(out)["valid"] is True


def test_minor_verify_rejects_corrupt_certificate(tmp_path, capsys):
    host = tmp_path / "host.json"
    host.write_text(io.to_json(catalog.build("K33_11").graph))
    cert = tmp_path / "cert.json"
    _run(capsys, "minor", "find", "--host", str(host), "--pattern", "K5",
         "--certificate", str(cert))
    data = json.loads(cert.read_text())
    data["deleted"] = data["deleted"] + [1]
    cert.write_text(json.dumps(data))
    code, out = _run(capsys, "--json", "minor", "verify", str(cert),
                     "--host", str(host))
    assert code == FAIL
    assert json.loads(out)["valid"] is False


def test_minor_triangle(tmp_path, capsys):
    entry = catalog.build("K33_11")
    host = tmp_path / "host.json"
    host.write_text(io.to_json(entry.graph))
    tri = ",".join(str(e) for e in entry.graph.triangles()[0])
    code, out = _run(capsys, "--json", "minor", "triangle", "--host",
                     str(host), "--triangle", tri, "--target", "K5")
    assert code == PASS
    assert json.loads(out)["found"] is True


def test_planarity_check(tmp_path, capsys):
    host = tmp_path / "host.json"
    host.write_text(io.to_json(catalog.build("K33_02").graph))
    code, out = _run(capsys, "--json", "planarity", "check", str(host))
    assert code == PASS
    data = json.loads(out)
    assert data["planar"] is False
    assert data["obstruction"]["pattern"] == "K33"


def test_rounded_verify_family_a(tmp_path, capsys):
    report = tmp_path / "report.json"
    code, out = _run(capsys, "--json", "rounded", "verify", "--family", "a",
                     "--report", str(report))
    assert code == PASS
    assert json.loads(out)["verdict"] == "pass"
    assert json.loads(report.read_text())["verdict"] == "pass"


def test_rounded_verify_custom_family_fails(tmp_path, capsys):
    fam = tmp_path / "family.json"
    fam.write_text(json.dumps(["K33"]))
    code, out = _run(capsys, "--json", "rounded", "verify", "--family",
                     str(fam))
    assert code == FAIL
    assert json.loads(out)["verdict"] == "fail"


def test_matroid_minor(capsys):
    code, out = _run(capsys, "--json", "matroid", "minor", "--host", "r12",
                     "--target", "K33", "--require", "3,8")
    assert code == PASS
    data = json.loads(out)
    assert data["found"] is True
    assert 3 not in data["contract"] + data["delete"]
    assert 8 not in data["contract"] + data["delete"]


def test_matroid_minor_absent(capsys):
    code, _ = _run(capsys, "matroid", "minor", "--host", "r10",
                   "--target", "K33_11")
    assert code == FAIL


def test_json_output_is_byte_identical_across_runs(capsys):
    _, out1 = _run(capsys, "--json", "--seed", "4", "catalog", "dump", "G5")
    _, out2 = _run(capsys, "--json", "--seed", "4", "catalog", "dump", "G5")
    assert out1 == out2


def test_config_file_sets_node_cap(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"search-node-cap": 0}))
    code, _ = _run(capsys, "--config", str(cfg), "catalog", "list")
    assert code == USAGE  # cap must be positive


def test_output_path_mirrors_json(tmp_path, capsys):
    out_path = tmp_path / "out.json"
    code, _ = _run(capsys, "--output", str(out_path), "catalog", "dump", "K5")
    assert code == PASS
    assert len(json.loads(out_path.read_text())["edges"]) == 10
