"""Command-line front end.

Subcommands: iseries, graph, specials, quiver, wahl, domestic, sweep.
Domain errors exit 1 with a {code, message} JSON object on stdout; argument
parse errors exit 2.  Output is deterministic byte-for-byte for fixed input
(JSON keys sorted, seeded randomness).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .errors import StarresError
from .hj import hj_expand, i_series
from .lgroup import Parameters, default_points, normal_form
from .reconalg import (
    degree_zero_canonical,
    domestic_classify,
    quiver_combinatorial,
    quiver_from_intersection,
    quiver_to_dot,
    wahl_generators,
    wahl_relations,
    wahl_special_ideals,
    wahl_verify,
)
from .resolution import dual_graph, is_minimal, specials, to_dot
from .sweeps import run_all


class ArgumentError(ValueError):
    """Raised for malformed option values; maps to exit code 2."""


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise ArgumentError(f"could not parse {what} {text!r}") from exc


def _parse_points(text: str) -> list[tuple[Fraction, Fraction]]:
    points = []
    for chunk in text.split(","):
        halves = chunk.split(":")
        if len(halves) != 2:
            raise ArgumentError(f"point {chunk!r} is not of the form u:w")
        try:
            points.append((Fraction(halves[0]), Fraction(halves[1])))
        except (ValueError, ZeroDivisionError) as exc:
            raise ArgumentError(f"could not parse point {chunk!r}") from exc
    return points


def _build_params(args) -> Parameters:
    weights = _parse_ints(args.p, "--p")
    if args.lam is None:
        points = None
    else:
        points = _parse_points(args.lam)
        points += list(default_points(len(weights)))[len(points):]
    return Parameters(weights, points)


def _build_element(params, args):
    coeffs = _parse_ints(args.x, "--x") if args.x else [0] * params.n
    return normal_form(params, coeffs, args.c)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _cmd_iseries(args) -> int:
    series = i_series(args.r, args.a)
    _emit(
        {
            "r": args.r,
            "a": args.a,
            "expansion": list(hj_expand(args.r, args.a).alphas),
            "series": list(series.terms),
            "set": sorted(series.as_set),
        }
    )
    return 0


def _graph_report(params, x, with_specials: bool) -> dict:
    g = dual_graph(params, x)
    report = {"graph": g.to_json(), "minimal": is_minimal(params, x)}
    if with_specials:
        report["specials"] = [
            {"label": lab.display, "vertex": lab.vertex} for lab in specials(params, x)
        ]
    return report


def _cmd_graph(args) -> int:
    params = _build_params(args)
    x = _build_element(params, args)
    g = dual_graph(params, x)
    if args.format == "dot":
        print(to_dot(g))
    elif args.format == "text":
        print(f"shape: {g.shape}  labels: {list(g.labels)}  minimal: {is_minimal(params, x)}")
    else:
        _emit(_graph_report(params, x, with_specials=False))
    return 0


def _cmd_specials(args) -> int:
    params = _build_params(args)
    x = _build_element(params, args)
    if args.format == "dot":
        print(to_dot(dual_graph(params, x), specials(params, x)))
    elif args.format == "text":
        for lab in specials(params, x):
            vertex = "-" if lab.vertex is None else lab.vertex
            print(f"{lab.display}\tvertex {vertex}")
    else:
        _emit(_graph_report(params, x, with_specials=True))
    return 0


def _cmd_quiver(args) -> int:
    params = _build_params(args)
    x = _build_element(params, args)
    g = dual_graph(params, x)
    if len(g.arms) >= 2:
        quiver = quiver_combinatorial(params, x)
        degenerate = False
    else:
        quiver = quiver_from_intersection(g, specials(params, x))
        degenerate = True
    if args.format == "dot":
        print(quiver_to_dot(quiver))
        return 0
    dz = degree_zero_canonical(params, x)
    report = quiver.to_json()
    report["degree_zero"] = {"q": list(dz.weights), "mu": [list(pt) for pt in dz.points]}
    if degenerate:
        report["degenerate"] = True
    _emit(report)
    return 0


def _cmd_wahl(args) -> int:
    params = _build_params(args)
    pres = wahl_generators(params)
    report = wahl_verify(params, args.max_degree)
    ideals = wahl_special_ideals(params)
    rels = wahl_relations(params)
    _emit(
        {
            "generators": {f"u{i + 1}": str(g) for i, g in enumerate(pres.gens)}
            | {"v": str(pres.v)},
            "degrees": {"v": 1}
            | {f"u{i + 1}": d for i, d in enumerate(pres.degrees)},
            "matrix": [list(row) for row in pres.matrix_symbolic],
            "minors_zero": not report.minor_failures,
            "dims_ok": not report.dim_failures,
            "dim_failures": [list(f) for f in report.dim_failures],
            "special_ideals": [[lab.display, ideal] for lab, ideal in ideals],
            "relations": list(rels.relations),
        }
    )
    return 0 if report.ok else 1


def _cmd_domestic(args) -> int:
    params = _build_params(args)
    _emit(domestic_classify(params, args.m).to_json())
    return 0


def _cmd_sweep(args) -> int:
    seed = args.seed
    if "STARRES_SEED" in os.environ:
        seed = int(os.environ["STARRES_SEED"])
    counterexample = run_all(
        seed=seed, rmax=args.rmax, count=args.count, l_max=args.lmax, log=print
    )
    if counterexample is not None:
        _emit(counterexample)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starres",
        description="Combinatorial invariants of graded Veronese surface singularities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_iseries = sub.add_parser("iseries", help="continued fraction and value set of r/a")
    p_iseries.add_argument("r", type=int)
    p_iseries.add_argument("a", type=int)
    p_iseries.set_defaults(func=_cmd_iseries)

    def add_common(sp, with_x=True):
        sp.add_argument("--p", required=True, help="weights, e.g. 3,5,5")
        sp.add_argument("--lambda", dest="lam", default=None, help="points u:w, e.g. 1:0,0:1,1:1")
        if with_x:
            sp.add_argument("--x", default=None, help="arm coefficients, e.g. 2,2,3")
            sp.add_argument("--c", type=int, default=0, help="c coefficient")

    p_graph = sub.add_parser("graph", help="dual graph of the resolution")
    add_common(p_graph)
    p_graph.add_argument("--format", choices=["json", "dot", "text"], default="json")
    p_graph.set_defaults(func=_cmd_graph)

    p_specials = sub.add_parser("specials", help="special module classification")
    add_common(p_specials)
    p_specials.add_argument("--format", choices=["json", "dot", "text"], default="json")
    p_specials.set_defaults(func=_cmd_specials)

    p_quiver = sub.add_parser("quiver", help="arrow and relation counts")
    add_common(p_quiver)
    p_quiver.add_argument("--format", choices=["json", "dot"], default="json")
    p_quiver.set_defaults(func=_cmd_quiver)

    p_wahl = sub.add_parser("wahl", help="degree-one Veronese presentation and checks")
    add_common(p_wahl, with_x=False)
    p_wahl.add_argument("--max-degree", type=int, default=12)
    p_wahl.set_defaults(func=_cmd_wahl)

    p_dom = sub.add_parser("domestic", help="Dynkin-triple classification")
    add_common(p_dom, with_x=False)
    p_dom.add_argument("--m", type=int, required=True)
    p_dom.set_defaults(func=_cmd_domestic)

    p_sweep = sub.add_parser("sweep", help="run all oracle cross-checks")
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--rmax", type=int, default=40)
    p_sweep.add_argument("--count", type=int, default=50)
    p_sweep.add_argument("--lmax", type=int, default=8)
    p_sweep.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StarresError as exc:
        _emit({"code": exc.code, "message": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
