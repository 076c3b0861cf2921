"""Command-line front end.

Exit codes: 0 success, 1 domain error (JSON on stderr) or failed
verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import diagrams, dualities, orbits, pipeline
from .classes import ONE
from .errors import ADError
from .ops import F, Operation, OpKind, apply, apply_seq, is_allowed, parse_ops, twist
from .params import ADAParameter, Kind, classify, loads, to_physics_label


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _outcome(fn: Callable[[], ADAParameter]):
    try:
        return fn().to_json()
    except ADError as exc:
        return exc.to_json()


def _read_param(path: str) -> ADAParameter:
    if path == "-":
        return loads(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


# -- subcommands -----------------------------------------------------------


def cmd_transform(args, t: ADAParameter) -> int:
    print(apply_seq(parse_ops(args.ops), t).dumps())
    return 0


def cmd_orbit(args, t: ADAParameter) -> int:
    g = orbits.enumerate_orbit(t, args.max_denominator, args.twists)
    if args.format == "dot":
        sys.stdout.write(g.to_dot())
    else:
        print(_dump(g.to_json()))
    return 0


def _diagram_payload(t: ADAParameter, plus: bool) -> tuple[ADAParameter, diagrams.Diagram]:
    if plus:
        return diagrams.gamma_plus(t)
    return t, diagrams.full_diagram(t)


def _emit_diagram(fmt: str, t: ADAParameter, g: diagrams.Diagram, extra: dict) -> None:
    if fmt == "dot":
        for key, value in extra.items():
            print(f"// {key}: {value}")
        sys.stdout.write(g.to_dot())
    else:
        payload = {"parameter": t.to_json(), "diagram": g.to_json(), "dimension": diagrams.wcv_dimension(g)}
        payload.update(extra)
        print(_dump(payload))


def cmd_diagram(args, t: ADAParameter) -> int:
    node, g = _diagram_payload(t, args.plus)
    _emit_diagram(args.format, node, g, {})
    return 0


def cmd_mirror(args, t: ADAParameter) -> int:
    label = to_physics_label(t)
    node, g = diagrams.gamma_plus(t)
    _emit_diagram(args.format, node, g, {"label": str(label)})
    return 0


def cmd_label(args, t: ADAParameter) -> int:
    label = to_physics_label(t)
    print(label.short() if args.short else str(label))
    return 0


# -- verification suites ---------------------------------------------------


def _compare(name: str, closed: Callable[[], ADAParameter], composed: Callable[[], ADAParameter]) -> dict:
    a, b = _outcome(closed), _outcome(composed)
    return {"duality": name, "closed_form": a, "composed": b, "equal": a == b}


def suite_dualities(args, t: ADAParameter) -> list[dict]:
    kind = classify(t)
    out = []
    if kind is Kind.STANDARD_TYPE_I:
        l = 1 if args.l is None else args.l
        out.append(_compare(
            f"I(l={l})",
            lambda: dualities.duality_add_columns(t, l),
            lambda: apply_seq(dualities.duality_add_columns_sequence(l), t),
        ))
        try:
            word = dualities.duality_complement_sequence(t)
        except ADError as exc:
            out.append({"duality": "II", "skipped": exc.to_json(), "equal": True})
        else:
            out.append(_compare("II", lambda: dualities.duality_complement(t), lambda: apply_seq(word, t)))
            steps = range(len(word) + 1) if args.l is None else [args.l]
            for l in steps:
                out.append(_compare(
                    f"II-step(l={l})",
                    lambda: dualities.intermediate(t, l),
                    lambda: apply_seq(word[:l], t),
                ))
    elif kind is Kind.STANDARD:
        out.append(_compare(
            "III",
            lambda: dualities.duality_iii(t),
            lambda: apply_seq(dualities.duality_iii_sequence(t), t),
        ))
    else:
        out.append({"duality": None, "skipped": {"error": "Unsupported", "message": f"kind {kind.value}"}, "equal": True})
    return out


def suite_pipeline(args, t: ADAParameter) -> list[dict]:
    alphas = sorted(set(t.c0.eigenvalues()) | set(t.cinf.eigenvalues()) | {ONE}, key=lambda e: e.sort_key())
    candidates: list[Operation] = []
    for a in alphas:
        candidates += [Operation(k, a) for k in (OpKind.F, OpKind.FPLUS, OpKind.FMINUS)]
        if not a.is_one():
            candidates.append(twist(a))
    out = []
    for op in candidates:
        if not is_allowed(op, t):
            continue
        a, b = _outcome(lambda: apply(op, t)), _outcome(lambda: pipeline.apply_via_formal_data(op, t))
        out.append({"op": str(op), "closed_form": a, "formal_data": b, "equal": a == b})
    return out


def _edge_pairing(g: orbits.OrbitGraph) -> bool:
    edges = {(a, op.kind, b) for a, op, b in g.edges}
    inverse = {OpKind.F: OpKind.F, OpKind.FPLUS: OpKind.FMINUS, OpKind.FMINUS: OpKind.FPLUS}
    return all((b, inverse[k], a) in edges for a, k, b in edges)


def suite_orbit(args, t: ADAParameter) -> list[dict]:
    g = orbits.enumerate_orbit(t, args.max_denominator)
    predicted = orbits.orbit_slopes(t.slope, args.max_denominator)
    out = [
        {"property": "slope soundness", "equal": g.slopes() <= predicted},
        {"property": "slope set", "equal": g.slopes() == predicted},
        {"property": "edge pairing", "equal": _edge_pairing(g)},
    ]
    counts = {str(k): v for k, v in orbits.count_per_slope(g).items()}
    try:
        orbits.check_structure(g)
        out.append({"property": "per-slope counts", "counts": counts, "equal": True})
    except ADError as exc:
        out.append({"property": "per-slope counts", "counts": counts, "error": exc.to_json(), "equal": False})
    return out


def suite_diagrams(args, t: ADAParameter) -> list[dict]:
    g = diagrams.full_diagram(t)
    dim = diagrams.wcv_dimension(g)
    out = [{"property": "dimension", "value": dim, "equal": True}]
    if t.s > t.r:
        gf = diagrams.full_diagram(apply(F, t))
        out.append({"property": "Fourier invariance", "equal": diagrams.are_isomorphic(g, gf)})
    window = orbits.enumerate_orbit(t, args.max_denominator)
    dims = sorted({diagrams.wcv_dimension(diagrams.full_diagram(n)) for n in window.nodes})
    out.append({"property": "dimension invariance", "values": dims, "equal": dims == [dim]})
    if classify(t) is not Kind.GENERALIZED:
        try:
            plus, _ = diagrams.check_gamma_plus(t, args.max_denominator)
            out.append({"property": "Gamma_+ uniqueness", "parameter": plus.to_json(), "equal": True})
        except ADError as exc:
            out.append({"property": "Gamma_+ uniqueness", "error": exc.to_json(), "equal": False})
    return out


SUITES = {
    "dualities": suite_dualities,
    "pipeline": suite_pipeline,
    "orbit": suite_orbit,
    "diagrams": suite_diagrams,
}


def cmd_verify(args, t: ADAParameter) -> int:
    results = SUITES[args.suite](args, t)
    ok = all(r["equal"] for r in results)
    print(_dump({"suite": args.suite, "parameter": t.to_json(), "results": results, "pass": ok}))
    return 0 if ok else 1


# -- argument parsing ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="adcalc", description="AD-A parameter calculus")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--param", required=True, help="parameter JSON file, or - for stdin")
        p.set_defaults(func=fn)
        return p

    p = add("transform", cmd_transform, "apply a comma-separated operation word")
    p.add_argument("--ops", required=True, help='e.g. "F+,F,T@-1,F-@e(1/3)"')

    p = add("orbit", cmd_orbit, "bounded orbit enumeration")
    p.add_argument("--max-denominator", type=int, required=True)
    p.add_argument("--twists", choices=[orbits.NONE, orbits.C0], default=orbits.NONE)
    p.add_argument("--format", choices=["dot", "json"], default="json")

    p = add("diagram", cmd_diagram, "nonabelian Hodge diagram")
    p.add_argument("--plus", action="store_true", help="compute Gamma_+ instead")
    p.add_argument("--format", choices=["dot", "json"], default="json")

    p = add("mirror", cmd_mirror, "3d mirror quiver of a standard parameter")
    p.add_argument("--format", choices=["dot", "json"], default="json")

    p = add("label", cmd_label, "physics label D_p^b(sl_N, [Y])")
    p.add_argument("--short", action="store_true", help="drop b when b = N")

    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--l", type=int, default=None, help="duality step or column count")
    p.add_argument("--max-denominator", type=int, default=12)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag in ("max_denominator", "l"):
        value = getattr(args, flag, None)
        if value is not None and value < (1 if flag == "max_denominator" else 0):
            parser.error(f"--{flag.replace('_', '-')} must be positive")
    try:
        t = _read_param(args.param)
    except OSError as exc:
        parser.error(f"--param: {exc}")
    except ADError as exc:
        print(json.dumps(exc.to_json(), sort_keys=True), file=sys.stderr)
        return 1
    try:
        return args.func(args, t)
    except ADError as exc:
        print(json.dumps(exc.to_json(), sort_keys=True), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
