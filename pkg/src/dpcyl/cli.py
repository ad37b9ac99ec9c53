"""Command-line front end.

Subcommands: decide, decide-fibration, enumerate, classify, verify,
tables.  Exit codes: 0 ok, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .curves import dual_graph, form_for_degree, line_classes, lines_on_surface, render_graph, roots
from .galois import SurfaceOverK, decorate_point, k_rational_points, rank_one_check, rho_drop, rho_tilde
from .lattice import fmt_class
from .oracle import RankOneError, decide, decide_fibration
from .serialize import (
    SurfaceFormatError,
    load_surface,
    surface_to_dict,
    verdict_to_dict,
)
from .singularities import surface_type


def _surface_paths(args) -> list[Path]:
    paths = [Path(p) for p in args.files]
    if args.fixtures:
        base = Path(args.fixtures)
        paths = [p if p.exists() else base / p.name for p in paths]
    return paths


def cmd_decide(args, fibration: bool = False) -> int:
    status = 0
    for path in _surface_paths(args):
        try:
            surface = load_surface(path)
            verdict = decide_fibration(surface) if fibration else decide(surface)
        except (SurfaceFormatError, RankOneError, OSError, ValueError) as exc:
            print(f"{path}: error: {exc}", file=sys.stderr)
            status = 2
            continue
        if args.json:
            record = {"input": str(path), **verdict_to_dict(verdict)}
            print(json.dumps(record))
        else:
            case = f"  (construction {verdict.construction_case})" if verdict.construction_case else ""
            print(f"{path.name}: {verdict.answer}  [{verdict.rule}]{case}")
            if args.verbose:
                for cite, quote in verdict.trace:
                    print(f"    {cite}: {quote}")
    return status


def cmd_enumerate(args) -> int:
    if not 1 <= args.degree <= 8:
        print(f"degree must be in 1..8, got {args.degree}", file=sys.stderr)
        return 2
    form = form_for_degree(args.degree)
    cs = roots(form) if args.kind == "roots" else line_classes(form)
    if args.json:
        print(json.dumps({"degree": args.degree, "kind": args.kind, "count": len(cs.classes),
                          "classes": [list(c) for c in cs.classes]}))
        return 0
    print(f"# degree {args.degree}: {len(cs.classes)} {args.kind}")
    for c in cs.classes:
        print(f"{list(c)}  {fmt_class(form, c)}")
    return 0


def cmd_classify(args) -> int:
    status = 0
    for path in _surface_paths(args):
        try:
            surface = load_surface(path)
        except (SurfaceFormatError, OSError) as exc:
            print(f"{path}: error: {exc}", file=sys.stderr)
            status = 2
            continue
        prof = surface.profile
        t = surface_type(prof)
        report = rank_one_check(surface)
        total, per_point = rho_drop(surface)
        record = {
            "input": str(path),
            "degree": prof.degree,
            "type": t.sing_string,
            "num_lines": t.num_lines,
            "rho_tilde": rho_tilde(surface),
            "root_orbits": total,
            "rho": report.rho,
            "rank_one": report.ok,
            "obstruction": report.obstruction,
            "points": {},
        }
        for ci in k_rational_points(surface):
            pid = prof.point_id(ci)
            record["points"][pid] = decorate_point(surface, ci).label
        if args.json:
            print(json.dumps(record))
        else:
            print(f"{path.name}: degree {record['degree']}, type {record['type']} "
                  f"({record['num_lines']} lines), rho~ = {record['rho_tilde']}, rho = {record['rho']}")
            for pid, label in record["points"].items():
                print(f"    rational point {pid}: {label}")
            if not report.ok:
                print(f"    not rank one: {report.detail}")
            if args.verbose:
                g = dual_graph(list(prof.simple_roots), prof.form)
                print(render_graph(g))
        if not report.ok:
            status = max(status, 2)
    return status


def cmd_verify(args) -> int:
    from .verify import run_checks

    records = run_checks(args.scope, denominator_bound=args.denominator_bound)
    ok = all(r.passed for r in records)
    if args.json:
        print(json.dumps({"all_passed": ok,
                          "checks": [{"check": r.check, "status": r.status, "detail": r.detail,
                                      "counterexample": r.counterexample} for r in records]}))
    else:
        for r in records:
            mark = "PASS" if r.passed else "FAIL"
            extra = f"  {r.detail}" if r.detail else ""
            print(f"[{mark}] {r.check}{extra}")
            if r.counterexample:
                print(f"       counterexample: {r.counterexample}")
    return 0 if ok else 1


def cmd_tables(args) -> int:
    from .divisors import closed_form_chain
    from .serialize import load_fixture_surfaces
    from .verify import CORTI_TABLE

    print("Chain self-pairings -(n-j+1)j/(n+1):")
    for n in range(1, 9):
        row = [str(closed_form_chain(n, j)[1]) for j in range(1, n + 1)]
        print(f"  n={n}: " + "  ".join(row))
    print("\nExclusion-system parameters (degree, point, alpha, beta, gamma):")
    for (d, label), (a, b, g) in CORTI_TABLE.items():
        print(f"  d={d}  {label:6} alpha={a} beta={b} gamma={g}")
    print("\nCatalog (degree, type, fixed rank, #lines, verdict):")
    for name, (row, surface) in sorted(load_fixture_surfaces().items()):
        t = surface_type(surface.profile)
        print(f"  {name:28} d={row.degree} {row.type_name:12} rho~={row.rho_tilde} "
              f"lines={t.num_lines:3} {row.expected_answer}")
        if args.verbose:
            g = dual_graph(list(surface.profile.simple_roots), surface.form)
            print(render_graph(g))
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="dpcyl",
        description="cylinder-existence decisions for rank-one Du Val del Pezzo surfaces",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, files=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("-v", "--verbose", action="store_true")
        if files:
            p.add_argument("--fixtures", help="directory searched for surface files")
            p.add_argument("files", nargs="+", help="surface JSON files")

    p = sub.add_parser("decide", help="decide cylinder existence for surface files")
    common(p)
    p = sub.add_parser("decide-fibration", help="decide for generic fibers over a function field")
    common(p)
    p = sub.add_parser("enumerate", help="list root or line classes of one degree")
    p.add_argument("degree", type=int)
    p.add_argument("kind", choices=["roots", "lines"])
    p.add_argument("--json", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true")
    p = sub.add_parser("classify", help="type, rank and decorations of surface files")
    common(p)
    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("scope", nargs="?", default="all")
    p.add_argument("--json", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true")
    p.add_argument("--denominator-bound", type=int, default=4,
                   help="denominator bound for witness searches")
    p = sub.add_parser("tables", help="print the closed-form tables and the catalog")
    p.add_argument("--json", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true")

    args = parser.parse_args(argv)
    if args.command == "decide":
        return cmd_decide(args)
    if args.command == "decide-fibration":
        return cmd_decide(args, fibration=True)
    if args.command == "enumerate":
        return cmd_enumerate(args)
    if args.command == "classify":
        return cmd_classify(args)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "tables":
        return cmd_tables(args)
    return 2  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
