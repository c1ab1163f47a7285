"""Command-line entry point.

Exit codes: 0 = success or verified pass, 1 = verified negative (a search
or verification ran fine and the answer is "no"), 2 = usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import catalog, io, matroids, minors, rounded, verification
from .matroids import MatroidError
from .multigraph import GraphError

PASS, FAIL, USAGE = 0, 1, 2


@dataclass
class RunConfig:
    node_cap: int = minors.DEFAULT_NODE_CAP
    seed: int = 0
    output: str | None = None
    verbosity: int = 0

    def __post_init__(self):
        if self.node_cap <= 0:
            raise ValueError("node cap must be positive")


def _load_config(args):
    values = {}
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        keymap = {"search-node-cap": "node_cap", "seed": "seed",
                  "output-path": "output", "verbosity": "verbosity"}
        for k, v in raw.items():
            if k not in keymap:
                raise ValueError("unknown config key %r" % k)
            values[keymap[k]] = v
    if args.node_cap is not None:
        values["node_cap"] = args.node_cap
    if args.seed is not None:
        values["seed"] = args.seed
    if args.output is not None:
        values["output"] = args.output
    if args.verbose:
        values["verbosity"] = args.verbose
    return RunConfig(**values)


def _emit(args, config, payload, text_lines):
    if args.json:
        out = json.dumps(payload, sort_keys=True, indent=2)
    else:
        out = "\n".join(text_lines)
    print(out)
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _parse_ids(text):
    if not text:
        return []
    try:
        return [int(tok.lstrip("e")) for tok in text.split(",") if tok]
    except ValueError:
        raise GraphError("expected comma-separated edge ids, got %r" % text)


def _model_payload(model):
    data = model.to_json_dict()
    data["found"] = True
    return data


def _write_certificate(path, model):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(model.to_json_dict(), fh, sort_keys=True, indent=2)
        fh.write("\n")


def _cmd_catalog(args, config):
    if args.action == "list":
        names = catalog.list_names()
        _emit(args, config, {"names": names}, names)
        return PASS
    entry = catalog.build(args.name)
    payload = io.to_json_dict(entry.graph)
    payload["name"] = entry.name
    payload["labels"] = {k: v for k, v in sorted(entry.labels.items())}
    lines = ["%s: %d vertices, %d edges" % (entry.name, entry.graph.n,
                                            entry.graph.m)]
    lines += ["  e%d: %s-%s" % (e, a, b)
              for e, (a, b) in sorted(entry.graph.edges.items())]
    _emit(args, config, payload, lines)
    return PASS


def _pattern_arg(text):
    if text in catalog.list_names():
        return text, catalog.build(text).graph
    return "", io.load_graph(text)


def _cmd_minor(args, config):
    if args.action == "verify":
        host = io.load_graph(args.host)
        with open(args.certificate_in, "r", encoding="utf-8") as fh:
            cert = json.load(fh)
        model = minors.MinorModel(
            host,
            frozenset(cert["contracted"]),
            frozenset(cert["deleted"]),
            cert["pattern"],
            {int(k): v for k, v in cert["iso"].items()},
        )
        ok, diagnostics = minors.verify_model(model)
        _emit(args, config, {"valid": ok, "diagnostics": diagnostics},
              ["valid" if ok else "invalid"] + diagnostics)
        return PASS if ok else FAIL

    host = io.load_graph(args.host)
    if args.action == "find":
        name, pattern = _pattern_arg(args.pattern)
        model = minors.find_minor(host, pattern, required=_parse_ids(args.require),
                                  pattern_name=name, node_cap=config.node_cap)
    else:  # triangle
        tri = _parse_ids(args.triangle)
        if len(tri) != 3:
            raise GraphError("--triangle needs exactly three edge ids")
        fn = (minors.preserve_triangle_k5 if args.target == "K5"
              else minors.preserve_triangle_k331)
        model = fn(host, tri, node_cap=config.node_cap)
    if model is None:
        _emit(args, config, {"found": False}, ["no minor found"])
        return FAIL
    if args.certificate:
        _write_certificate(args.certificate, model)
    _emit(args, config, _model_payload(model),
          ["minor found: %s" % model.pattern_name,
           "contracted: %s" % sorted(model.contracted),
           "deleted: %s" % sorted(model.deleted)])
    return PASS


def _cmd_planarity(args, config):
    g = io.load_graph(args.graph)
    result = minors.obstruction(g, node_cap=config.node_cap)
    if result is None:
        _emit(args, config, {"planar": True}, ["planar"])
        return PASS
    name, model = result
    if args.certificate:
        _write_certificate(args.certificate, model)
    payload = {"planar": False, "obstruction": _model_payload(model)}
    _emit(args, config, payload, ["non-planar: %s minor" % name])
    return PASS


def _cmd_rounded(args, config):
    if args.family in rounded.NAMED_FAMILIES:
        family = rounded.NAMED_FAMILIES[args.family]
    else:
        with open(args.family, "r", encoding="utf-8") as fh:
            family = tuple(json.load(fh))
    report = rounded.verify_two_rounded(family, node_cap=config.node_cap)
    payload = report.to_json_dict()
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    lines = ["family: %s" % ", ".join(family),
             "candidates: %d" % len(report.candidates),
             "failures: %d" % len(report.failures),
             "verdict: %s" % report.verdict]
    _emit(args, config, payload, lines)
    return PASS if report.verdict == "pass" else FAIL


def _matroid_arg(text):
    if text == "r12":
        return matroids.r12()
    if text == "r10":
        return matroids.r10()
    if text in catalog.list_names():
        return matroids.cycle_matroid(catalog.build(text).graph)
    with open(text, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return matroids.BinaryMatroid.from_rows(data["rows"], data["elements"])


def _cmd_matroid(args, config):
    if args.action == "r12":
        if not args.verify:
            m = matroids.r12()
            _emit(args, config, m.to_json_dict(),
                  ["rank %d, %d elements" % (m.rank_value, m.size)])
            return PASS
        report = matroids.verify_r12_claims()
        ok = all(v["pass"] for v in report.values())
        lines = ["%s: %s" % (k, "pass" if v["pass"] else "fail")
                 for k, v in report.items()]
        _emit(args, config, {"pass": ok, "checks": report}, lines)
        return PASS if ok else FAIL
    host = _matroid_arg(args.host)
    target = _matroid_arg(args.target)
    required = _parse_ids(args.require)
    witness = matroids.matroid_has_minor(host, target, required=required)
    if witness is None:
        _emit(args, config, {"found": False}, ["no minor found"])
        return FAIL
    cset, dset = witness
    payload = {"found": True, "contract": sorted(cset), "delete": sorted(dset)}
    _emit(args, config, payload,
          ["minor found", "contract: %s" % sorted(cset),
           "delete: %s" % sorted(dset)])
    return PASS


def _cmd_verify_all(args, config):
    report = verification.verify_all(seed=config.seed,
                                     node_cap=config.node_cap)
    lines = ["%s: %s" % (k, "pass" if v["pass"] else "fail")
             for k, v in report.items() if k != "pass"]
    lines.append("overall: %s" % ("pass" if report["pass"] else "fail"))
    _emit(args, config, report, lines)
    return PASS if report["pass"] else FAIL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rootedminors",
        description="Rooted graph-minor search and verification toolkit",
    )
    parser.add_argument("--json", action="store_true",
                        help="emit JSON on stdout")
    parser.add_argument("--config", help="JSON run configuration file")
    parser.add_argument("--node-cap", type=int, default=None,
                        help="search node-expansion cap")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for randomized verification runs")
    parser.add_argument("--output", default=None,
                        help="also write JSON output to this path")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="named ground-truth graphs")
    ps = p.add_subparsers(dest="action", required=True)
    ps.add_parser("list")
    dump = ps.add_parser("dump")
    dump.add_argument("name")

    p = sub.add_parser("minor", help="minor search and certificates")
    ps = p.add_subparsers(dest="action", required=True)
    find = ps.add_parser("find")
    find.add_argument("--host", required=True)
    find.add_argument("--pattern", required=True,
                      help="catalog name or graph file")
    find.add_argument("--require", default="",
                      help="comma-separated edge ids to keep")
    find.add_argument("--certificate", help="write the model here")
    tri = ps.add_parser("triangle")
    tri.add_argument("--host", required=True)
    tri.add_argument("--triangle", required=True,
                     help="three comma-separated edge ids")
    tri.add_argument("--target", choices=("K5", "K33_11"), default="K33_11")
    tri.add_argument("--certificate", help="write the model here")
    ver = ps.add_parser("verify")
    ver.add_argument("certificate_in", metavar="certificate")
    ver.add_argument("--host", required=True)

    p = sub.add_parser("planarity", help="planarity with obstruction minors")
    ps = p.add_subparsers(dest="action", required=True)
    chk = ps.add_parser("check")
    chk.add_argument("graph")
    chk.add_argument("--certificate", help="write the obstruction model here")

    p = sub.add_parser("rounded", help="2-roundedness verification")
    ps = p.add_subparsers(dest="action", required=True)
    ver = ps.add_parser("verify")
    ver.add_argument("--family", required=True,
                     help="a, b, or a JSON file with catalog names")
    ver.add_argument("--report", help="write the full report here")

    p = sub.add_parser("matroid", help="GF(2) matroid operations")
    ps = p.add_subparsers(dest="action", required=True)
    r12p = ps.add_parser("r12")
    r12p.add_argument("--verify", action="store_true")
    mm = ps.add_parser("minor")
    mm.add_argument("--host", required=True,
                    help="r12, r10, a catalog name, or a matrix file")
    mm.add_argument("--target", required=True)
    mm.add_argument("--require", default="")

    sub.add_parser("verify-all", help="run the full verification battery")
    return parser


_HANDLERS = {
    "catalog": _cmd_catalog,
    "minor": _cmd_minor,
    "planarity": _cmd_planarity,
    "rounded": _cmd_rounded,
    "matroid": _cmd_matroid,
    "verify-all": _cmd_verify_all,
}


def dispatch(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args)
    except (ValueError, OSError) as err:
        print("configuration error: %s" % err, file=sys.stderr)
        return USAGE
    try:
        return _HANDLERS[args.command](args, config)
    except (GraphError, MatroidError) as err:
        print("error: %s" % err, file=sys.stderr)
        return USAGE
    except OSError as err:
        print("error: %s" % err, file=sys.stderr)
        return USAGE


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
