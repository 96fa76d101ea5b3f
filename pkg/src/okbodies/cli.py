"""Command-line front end.

Rationals are passed as "p/q" strings, divisor classes as comma-separated
basis coefficients (d, e_1, ..., e_s) of d*H + sum e_i E_i, matching the
JSON serialization.  Exit codes: 0 success, 1 domain error, 2 usage error.
Output is deterministic for a fixed seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import fixtures as fixtures_mod
from .curves import generate_catalog
from .errors import OkbodiesError
from .lattice import DivClass, SurfaceModel
from .okounkov import (DEFAULT_TOL, okounkov_body, okounkov_function,
                       query_phi)
from .rational import parse_rational
from .seshadri import epsilon_mu_relation, mu, seshadri
from .shgh import DEFAULT_CHARACTERISTIC, LinearSystem, classify
from .svg import polygon_svg, walk_svg
from .certificate import (DichotomyCertificate, check_dichotomy,
                          quadratic_form_report, scan_box,
                          window_derivative_report, window_function,
                          window_function_at_lower_bound)
from .zariski import walk_ray


class UsageError(Exception):
    pass


def _parse_class(text: str) -> DivClass:
    parts = [p for p in str(text).split(",") if p.strip()]
    if not parts:
        raise UsageError(f"--class needs comma-separated coefficients, got {text!r}")
    try:
        return DivClass.from_json(parts)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_point(text: str):
    if text in ("all", "very-general"):
        return text
    try:
        return int(text)
    except ValueError as exc:
        raise UsageError(f"--at must be an index, 'all' or 'very-general': {text!r}") from exc


def _emit(args, payload, svg=None):
    if args.format == "svg":
        if svg is None:
            raise UsageError(f"subcommand {args.command!r} has no SVG output")
        text = svg()
    elif args.format == "json":
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        text = _render_text(payload) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_text(payload, indent=0) -> str:
    pad = "  " * indent
    if isinstance(payload, dict):
        lines = []
        for key in payload:
            val = payload[key]
            if isinstance(val, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.append(_render_text(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {val}")
        return "\n".join(lines)
    if isinstance(payload, list):
        return "\n".join(
            _render_text(v, indent) if isinstance(v, (dict, list))
            else f"{pad}- {v}" for v in payload)
    return f"{pad}{payload}"


def _catalog_for(args, s: int):
    return generate_catalog(SurfaceModel(s), args.dmax)


def _cmd_catalog(args):
    cat = _catalog_for(args, args.s)
    _emit(args, cat.to_json())


def _cmd_body(args):
    divisor = _parse_class(args.cls)
    if args.s is not None and args.s != divisor.s:
        raise UsageError(f"--s {args.s} disagrees with class over s={divisor.s}")
    cat = _catalog_for(args, divisor.s)
    body = okounkov_body(divisor, None, cat)
    _emit(args, body.to_json(), svg=lambda: polygon_svg([body.polygon]))


def _cmd_okfun(args):
    divisor = _parse_class(args.cls)
    if args.s is not None and args.s != divisor.s:
        raise UsageError(f"--s {args.s} disagrees with class over s={divisor.s}")
    cat = _catalog_for(args, divisor.s + 1)
    slices = okounkov_function(divisor, None, cat, tol=args.tol)
    payload = slices.to_json()
    if args.query:
        payload["queries"] = []
        for q in args.query:
            x, y = (parse_rational(v) for v in q.split(","))
            payload["queries"].append(
                {"point": [str(x), str(y)],
                 **query_phi(slices, (x, y)).to_json()})
    _emit(args, payload, svg=lambda: polygon_svg(
        list(slices.polygons), labels=[str(t) for t in slices.ts]))


def _cmd_seshadri(args):
    divisor = _parse_class(args.cls)
    at = _parse_point(args.at)
    s_eff = divisor.s + 1 if at == "very-general" else divisor.s
    cat = _catalog_for(args, s_eff)
    result = seshadri(divisor, at, cat)
    if args.relation:
        _emit(args, epsilon_mu_relation(divisor, at, cat).to_json())
    else:
        _emit(args, result.to_json())


def _cmd_mu(args):
    divisor = _parse_class(args.cls)
    at = _parse_point(args.at)
    s_eff = divisor.s + 1 if at == "very-general" else divisor.s
    cat = _catalog_for(args, s_eff)
    _emit(args, mu(divisor, at, cat).to_json())


def _cmd_walk(args):
    origin = _parse_class(args.origin)
    direction = _parse_class(args.direction)
    cat = _catalog_for(args, origin.s)
    walk = walk_ray(origin, direction, cat)
    _emit(args, walk.to_json(), svg=lambda: walk_svg(walk))


def _cmd_shgh(args):
    mults = [int(m) for m in args.mults.split(",") if m.strip()]
    system = LinearSystem(args.degree, mults)
    report = classify(system, oracle=args.oracle,
                      characteristic=args.characteristic, seed=args.seed)
    _emit(args, report.to_json())


def _cmd_certify(args):
    delta = args.delta
    payload = {
        "s": args.s,
        "delta": str(delta),
        "window_function_sign": window_function(args.s, delta).sign(),
        "window_function_at_lower_bound_is_zero":
            window_function_at_lower_bound(args.s).is_zero(),
        "derivative": window_derivative_report(args.s, delta).to_json(),
        "quadratic_form": quadratic_form_report(args.s, delta).to_json(),
    }
    if args.gamma is not None:
        if args.big_m is None or args.small_m is None:
            raise UsageError("--gamma requires --M and --m")
        cert = DichotomyCertificate(args.s, delta, args.gamma,
                                    args.big_m, args.small_m)
        payload["dichotomy"] = check_dichotomy(cert).to_json()
    if args.scan_box is not None:
        payload["scan"] = scan_box(args.s, delta, args.scan_box).to_json()
    _emit(args, payload)


def _cmd_fixtures(args):
    names = args.run.split(",") if args.run else ["all"]
    results = fixtures_mod.run_fixtures(names)
    payload = [{"fixture": n, "ok": ok, "detail": d} for n, ok, d in results]
    if args.format == "text":
        width = max(len(n) for n, _, _ in results)
        for n, ok, d in results:
            sys.stdout.write(f"{n:<{width}}  {'PASS' if ok else 'FAIL'}  {d}\n")
        failed = [n for n, ok, _ in results if not ok]
        sys.stdout.write(f"{len(results) - len(failed)}/{len(results)} fixtures pass\n")
    else:
        _emit(args, payload)
    if any(not ok for _, ok, _ in results):
        raise OkbodiesError("some fixtures failed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="okbodies",
        description="Exact Zariski decompositions, Newton-Okounkov bodies, "
                    "Seshadri thresholds and SHGH classification on blow-ups "
                    "of the projective plane.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dmax", type=int, default=12,
                        help="degree bound for the negative-curve catalog (default 12)")
    common.add_argument("--format", choices=("json", "text", "svg"), default="json")
    common.add_argument("--output", "-o", help="write output to a file")
    common.add_argument("--seed", type=int, default=0)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", parents=[common],
                       help="negative-curve catalog")
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("body", parents=[common], help="Newton-Okounkov body")
    p.add_argument("--s", type=int)
    p.add_argument("--class", dest="cls", required=True,
                   help="comma-separated coefficients d,e1,...,es")
    p.set_defaults(func=_cmd_body)

    p = sub.add_parser("okfun", parents=[common],
                       help="Okounkov function slices (ord at the flag point)")
    p.add_argument("--s", type=int)
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--tol", type=parse_rational, default=DEFAULT_TOL)
    p.add_argument("--query", action="append",
                   help="rational point 'a,b' to bracket (repeatable)")
    p.set_defaults(func=_cmd_okfun)

    p = sub.add_parser("seshadri", parents=[common], help="Seshadri constant")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--at", default="very-general",
                   help="point index, 'all' or 'very-general'")
    p.add_argument("--relation", action="store_true",
                   help="report the epsilon/mu relation")
    p.set_defaults(func=_cmd_seshadri)

    p = sub.add_parser("mu", parents=[common], help="pseudoeffective threshold")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--at", default="very-general")
    p.set_defaults(func=_cmd_mu)

    p = sub.add_parser("walk", parents=[common], help="Zariski chamber walk")
    p.add_argument("--origin", required=True)
    p.add_argument("--direction", required=True)
    p.set_defaults(func=_cmd_walk)

    p = sub.add_parser("shgh", parents=[common],
                       help="fat-point linear system classification")
    p.add_argument("-d", "--degree", type=int, required=True)
    p.add_argument("-m", "--mults", required=True,
                   help="comma-separated multiplicities")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check with the finite-field rank oracle")
    p.add_argument("--char", dest="characteristic", type=int,
                   default=DEFAULT_CHARACTERISTIC)
    p.set_defaults(func=_cmd_shgh)

    p = sub.add_parser("certify", parents=[common],
                       help="exact window-inequality certificates")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--delta", type=parse_rational, required=True)
    p.add_argument("--gamma", type=int)
    p.add_argument("--M", dest="big_m", type=int)
    p.add_argument("--m", dest="small_m", type=int)
    p.add_argument("--scan-box", type=int,
                   help="exhaustive triple scan up to this gamma")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("fixtures", parents=[common],
                       help="run the built-in paper-value fixture corpus")
    p.add_argument("--run", default="all",
                   help="comma-separated fixture names, or 'all'")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except OkbodiesError as exc:
        sys.stderr.write(f"error: {exc.__class__.__name__}: {exc}\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
