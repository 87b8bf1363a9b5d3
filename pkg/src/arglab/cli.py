"""Command-line front end.

Exit codes: 0 pass, 1 verification failure (with witness), 2 input error,
3 not applicable. Reports go to stdout as JSON with sorted keys.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

import numpy as np

from . import constructions as C
from .designs import design_json_encode, dual_property_check, gdd_from_graph, replication_numbers
from .errors import (
    ArglabError,
    CongruenceError,
    DeskScaleExceeded,
    InvalidOrder,
    InvalidPrimePower,
    MalformedGraph6,
    MalformedJson,
    NotApplicable,
)
from .graph_core import (
    Digraph,
    Graph,
    digraph6_encode,
    digraph_json_encode,
    graph6_encode,
    graph_json_encode,
    hypercube,
    is_bipartite,
    load_graph,
)
from .schemes import scheme_from_q_regular_graph
from .spectrum import distinct_eigenvalue_count, srg_eigenvalues
from .verifiers import (
    CONTRADICTION,
    GDD_INCIDENCE,
    amply_regular_params,
    classify,
    distance_regular_array,
    feasibility_diagnostics,
    strongly_regular_params,
)

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_NA = 0, 1, 2, 3

FAMILIES = (
    "paley", "peisert", "paley-digraph", "taylor-bd-paley", "taylor-bd-peisert",
    "im", "hypercube", "lambda14", "k2-box-lambda",
)


class _Exit(Exception):
    def __init__(self, code: int, status: str, payload: dict):
        self.code, self.status, self.payload = code, status, payload


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    return str(obj)


def _emit(command: list[str], status: str, payload: dict, human: bool) -> None:
    report = {"command": command, "status": status, "payload": _jsonable(payload)}
    if human:
        print(f"{' '.join(command)}: {status}")
        for key in sorted(report["payload"]):
            print(f"  {key}: {json.dumps(report['payload'][key], sort_keys=True)}")
    else:
        print(json.dumps(report, sort_keys=True))


def _read_graph(path: str) -> Graph:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise _Exit(EXIT_INPUT, "error", {"error": f"cannot read {path}: {exc}"})
    try:
        return load_graph(data)
    except (MalformedGraph6, MalformedJson) as exc:
        raise _Exit(EXIT_INPUT, "error", {"error": str(exc)})


def _build(family: str, q: int | None) -> Graph | Digraph:
    needs_q = family not in ("lambda14", "k2-box-lambda", "hypercube")
    if needs_q and q is None:
        raise InvalidOrder(f"family {family} needs --q")
    if family == "paley":
        return C.paley_graph(q)
    if family == "peisert":
        return C.peisert_graph(q)
    if family == "paley-digraph":
        return C.paley_digraph(q)
    if family == "taylor-bd-paley":
        return C.taylor_bd_pipeline("paley", q)
    if family == "taylor-bd-peisert":
        return C.taylor_bd_pipeline("peisert", q)
    if family == "im":
        return C.im_pipeline(q)
    if family == "hypercube":
        return hypercube(5 if q is None else q)
    if family == "lambda14":
        return C.lambda_14()
    return C.k2_box_lambda()


def _encode(g: Graph | Digraph, fmt: str) -> bytes:
    if isinstance(g, Digraph):
        return digraph6_encode(g) + b"\n" if fmt == "graph6" else digraph_json_encode(g).encode() + b"\n"
    return graph6_encode(g) + b"\n" if fmt == "graph6" else graph_json_encode(g).encode() + b"\n"


def run_build(args) -> tuple[str, dict]:
    try:
        g = _build(args.family, args.q)
    except (CongruenceError, InvalidOrder, InvalidPrimePower, DeskScaleExceeded) as exc:
        raise _Exit(EXIT_INPUT, "error", {"error": str(exc), "kind": type(exc).__name__})
    data = _encode(g, args.format)
    payload: dict[str, Any] = {"family": args.family, "q": args.q, "n": g.n, "format": args.format}
    if isinstance(g, Digraph):
        payload["out_degrees"] = sorted(set(g.adjacency.sum(axis=1).tolist()))
    else:
        try:
            payload["params"] = str(amply_regular_params(g))
        except ArglabError as exc:
            payload["params"] = None
            payload["params_error"] = str(exc)
        payload["diameter"] = g.dist.diameter
    if args.out:
        Path(args.out).write_bytes(data)
        payload["out"] = args.out
    else:
        payload["graph"] = data.decode().strip()
    return "pass", payload


def _expectation_witness(g: Graph, expected: tuple[int, ...]) -> dict | None:
    v, k, lam, mu = expected
    if g.n != v:
        return {"parameter": "v", "expected": v, "actual": g.n}
    deg = g.degrees()
    bad = np.flatnonzero(deg != k)
    if bad.size:
        return {"parameter": "k", "vertex": int(bad[0]), "expected": k, "actual": int(deg[bad[0]])}
    m = g.common_counts
    for name, mask, want in (("lambda", g.adjacency == 1, lam), ("mu", g.dist.dist == 2, mu)):
        hits = np.argwhere(mask & (m != want))
        if hits.size:
            x, y = (int(t) for t in hits[0])
            return {"parameter": name, "pair": [x, y], "expected": want, "actual": int(m[x, y])}
    return None


def run_verify(args) -> tuple[str, dict]:
    g = _read_graph(args.in_path)
    dt = g.dist
    bip = is_bipartite(g)
    payload: dict[str, Any] = {
        "n": g.n,
        "connected": dt.connected,
        "diameter": dt.diameter,
        "bipartite": bip.bipartite,
    }
    if not bip.bipartite:
        payload["odd_cycle"] = bip.odd_cycle
    status = "pass"
    try:
        params = amply_regular_params(g)
        payload["amply_regular"] = list(params.as_tuple())
        payload["feasibility"] = feasibility_diagnostics(params, dt.diameter)
    except ArglabError as exc:
        params = None
        payload["amply_regular"] = None
        payload["witness"] = {"error": type(exc).__name__, "detail": exc.witness, "message": str(exc)}
        status = "fail"
    if dt.diameter == 2:
        try:
            payload["strongly_regular"] = list(strongly_regular_params(g).as_tuple())
        except ArglabError:
            payload["strongly_regular"] = None
    if dt.connected:
        try:
            payload["intersection_array"] = str(distance_regular_array(g))
        except ArglabError as exc:
            payload["intersection_array"] = None
            payload["distance_regular_witness"] = exc.witness
    if args.expect:
        payload["expected"] = list(args.expect)
        witness = _expectation_witness(g, args.expect)
        if witness is not None:
            payload["witness"] = witness
            status = "fail"
    if status != "pass":
        raise _Exit(EXIT_FAIL, status, payload)
    return status, payload


def run_classify(args) -> tuple[str, dict]:
    g = _read_graph(args.in_path)
    try:
        result = classify(g)
    except NotApplicable as exc:
        raise _Exit(EXIT_NA, "not_applicable", {"reason": str(exc), "detail": exc.witness})
    payload: dict[str, Any] = {"case": result.case, "evidence": result.evidence}
    ok = result.case != CONTRADICTION
    if result.case == GDD_INCIDENCE:
        gdd = result.design
        dual_ok, grouping = dual_property_check(gdd)
        scheme = scheme_from_q_regular_graph(g)
        eig = distinct_eigenvalue_count(g)
        payload["design"] = json.loads(design_json_encode(gdd))
        payload["replication"] = sorted(set(replication_numbers(gdd.base)))
        payload["dual_property"] = dual_ok
        payload["dual_grouping"] = grouping
        payload["scheme"] = scheme.report()
        payload["distinct_eigenvalues"] = eig
        ok = ok and dual_ok and scheme.symmetric and scheme.classes == 5 and eig == 6
    if not ok:
        raise _Exit(EXIT_FAIL, "fail", payload)
    return "pass", payload


def run_gdd(args) -> tuple[str, dict]:
    g = _read_graph(args.in_path)
    try:
        gdd = gdd_from_graph(g, args.vertex)
    except NotApplicable as exc:
        raise _Exit(EXIT_NA, "not_applicable", {"reason": str(exc)})
    dual_ok, grouping = dual_property_check(gdd)
    text = design_json_encode(gdd)
    payload: dict[str, Any] = {"params": list(gdd.params), "dual_property": dual_ok, "dual_grouping": grouping}
    if args.out:
        Path(args.out).write_text(text + "\n")
        payload["out"] = args.out
    else:
        payload["design"] = json.loads(text)
    if not dual_ok:
        raise _Exit(EXIT_FAIL, "fail", payload)
    return "pass", payload


def run_scheme(args) -> tuple[str, dict]:
    g = _read_graph(args.in_path)
    try:
        scheme = scheme_from_q_regular_graph(g)
    except NotApplicable as exc:
        raise _Exit(EXIT_NA, "not_applicable", {"reason": str(exc)})
    return "pass", scheme.report()


def run_spectrum(args) -> tuple[str, dict]:
    g = _read_graph(args.in_path)
    payload: dict[str, Any] = {"distinct_eigenvalues": distinct_eigenvalue_count(g)}
    if g.dist.diameter == 2:
        try:
            ev = srg_eigenvalues(strongly_regular_params(g))
            payload["srg_eigenvalues"] = [str(ev.theta1), str(ev.theta2)]
        except ArglabError:
            pass
    return "pass", payload


def _expect(text: str) -> tuple[int, int, int, int]:
    try:
        vals = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected v,k,l,m integers, got {text!r}")
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("expected exactly four integers v,k,l,m")
    return vals


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arglab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--in", dest="in_path", required=True, help="graph file (graph6 or JSON)")
        p.add_argument("--human", action="store_true", help="plain-text output instead of JSON")

    p = sub.add_parser("build", help="construct a graph family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--q", type=int, help="field order (dimension for hypercube, default 5)")
    p.add_argument("--out", help="output file (default: embed in the report)")
    p.add_argument("--format", choices=("graph6", "json"), default="graph6")
    common(p, needs_input=False)
    p.set_defaults(run=run_build)

    p = sub.add_parser("verify", help="extract and check regularity parameters")
    p.add_argument("--expect", type=_expect, help="expected parameters v,k,l,m")
    common(p)
    p.set_defaults(run=run_verify)

    p = sub.add_parser("classify", help="place a graph in the classification")
    common(p)
    p.set_defaults(run=run_classify)

    p = sub.add_parser("gdd", help="extract the group divisible design")
    p.add_argument("--vertex", type=int, default=0, help="base vertex x")
    p.add_argument("--out", help="write design JSON here")
    common(p)
    p.set_defaults(run=run_gdd)

    p = sub.add_parser("scheme", help="build and verify the 5-class scheme")
    common(p)
    p.set_defaults(run=run_scheme)

    p = sub.add_parser("spectrum", help="count distinct eigenvalues exactly")
    common(p)
    p.set_defaults(run=run_spectrum)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_PASS
    human = getattr(args, "human", False)
    try:
        status, payload = args.run(args)
        code = EXIT_PASS
    except _Exit as exc:
        status, payload, code = exc.status, exc.payload, exc.code
    _emit(argv, status, payload, human)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
