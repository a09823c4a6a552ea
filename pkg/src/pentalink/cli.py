"""Command-line front end: JSON reports and SVG renderings.

Sides are parsed as exact rationals ("29", "29.5", "233/7"), so the exact
pipeline stays exact all the way from the shell.  Every numeric JSON field is
an object {"string": ..., "approx": ...}: the string is authoritative (exact
rationals round-trip through it losslessly), the double is for human eyes.

Exit codes: 0 on success, 1 on domain errors, 2 on usage errors.  Errors go
to stderr and no partial JSON is ever emitted.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .bicentric import BicentricCheck, BicentricReport, analyze
from .chordal import RootSet, convex_cyclic_area, real_roots, robbins_polynomial
from .core import Linkage, is_tangential, semiperimeter, tangent_lengths
from .errors import NotTangentialError, PentalinkError
from .oracle import (
    CircleFit,
    circumcircle_fit,
    incircle_fit,
    reconstruct_cyclic,
    reconstruct_tangential,
    shoelace_area,
)
from .quad import quad_report
from .svg import render_svg
from .tangential import arctan_inradius, pentagon_inradii, sylvester_polynomial, tangential_area


class _UsageError(Exception):
    pass


def parse_side(token: str) -> Fraction:
    token = token.strip()
    try:
        if "/" in token:
            return Fraction(token)
        return Fraction(Decimal(token))
    except (ValueError, InvalidOperation, ZeroDivisionError) as exc:
        raise _UsageError(f"cannot parse side value {token!r}: {exc}") from exc


def parse_sides(text: str) -> tuple[Fraction, ...]:
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise _UsageError(f"empty sides list {text!r}")
    return tuple(parse_side(p) for p in parts)


def jnum(x) -> dict:
    """Authoritative string plus a readable double for one numeric value."""
    if isinstance(x, float):
        return {"string": repr(x), "approx": x}
    fr = x if isinstance(x, Fraction) else Fraction(x)
    try:
        approx = float(fr)
    except OverflowError:
        approx = math.inf if fr > 0 else -math.inf
    return {"string": str(fr), "approx": approx}


def _rootset_json(roots: RootSet) -> list[dict]:
    return [
        {
            "value": jnum(r.value),
            "multiplicity": r.multiplicity,
            "interval": [jnum(r.lo), jnum(r.hi)],
        }
        for r in roots
    ]


def _check_json(check: BicentricCheck) -> dict:
    out = {"holds": check.holds, "reason": check.reason}
    if check.inradius is not None:
        out["inradius"] = jnum(check.inradius)
        out["area"] = jnum(check.area)
        out["sixteen_area_squared"] = jnum(check.u_value)
        out["compared_root"] = jnum(check.compared_root)
        out["compared_root_index"] = check.compared_root_index
        out["relative_gap"] = jnum(check.relative_gap)
    if check.exact_match is not None:
        out["exact_match"] = check.exact_match
    return out


def _cmd_tangent(sides: tuple[Fraction, ...], args) -> dict:
    result = is_tangential(Linkage(sides))
    return {
        "n": len(sides),
        "tangential": result.tangential,
        "tangent_lengths": [jnum(v) for v in result.tangent_lengths.values],
        "violations": list(result.violations),
    }


def _cmd_inradius(sides: tuple[Fraction, ...], args) -> dict:
    if len(sides) != 5:
        raise _UsageError("inradius needs exactly 5 sides")
    linkage = Linkage(sides)
    t = tangent_lengths(linkage)
    if not t.all_positive:
        raise NotTangentialError(
            f"no tangential configuration: tangent lengths at 0-based indices "
            f"{list(t.nonpositive_indices())} are not positive"
        )
    p = semiperimeter(linkage)
    poly = sylvester_polynomial(t)
    pair = pentagon_inradii(t)
    r1 = arctan_inradius(t, 1)
    r2 = arctan_inradius(t, 2)
    return {
        "tangent_lengths": [jnum(v) for v in t.values],
        "semiperimeter": jnum(p),
        "inradius_polynomial": [jnum(c) for c in poly.coefficients],
        "discriminant": jnum(pair.discriminant),
        "r_convex": jnum(pair.r_convex),
        "r_star": jnum(pair.r_star),
        "r_convex_arctan": jnum(r1),
        "r_star_arctan": jnum(r2),
        "area_convex": jnum(tangential_area(pair.r_convex, float(p))),
        "area_star": jnum(tangential_area(pair.r_star, float(p))),
    }


def _cmd_robbins(sides: tuple[Fraction, ...], args) -> dict:
    if len(sides) != 5:
        raise _UsageError("robbins needs exactly 5 sides")
    poly = robbins_polynomial(sides)
    roots = real_roots(poly)
    out = {
        "squared_side_symmetrics": [jnum(e) for e in poly.squared_side_symmetrics],
        "coefficients": [jnum(c) for c in poly.coefficients],
        "degree": poly.degree,
        "roots": _rootset_json(roots),
    }
    if roots.roots:
        out["max_root"] = jnum(roots.max_root.value)
    out["convex_cyclic_area"] = jnum(convex_cyclic_area(sides))
    return out


def _cmd_bicentric(sides: tuple[Fraction, ...], args) -> dict:
    if len(sides) != 5:
        raise _UsageError("bicentric needs exactly 5 sides")
    report: BicentricReport = analyze(sides, tolerance=args.tolerance)
    out = {
        "tangential": report.tangential,
        "tangent_lengths": [jnum(v) for v in report.tangent_lengths.values],
        "violations": list(report.violations),
        "resultant": jnum(report.resultant) if report.resultant is not None else None,
        "resultant_zero": report.resultant_zero,
        "convex": _check_json(report.convex),
        "star": _check_json(report.star),
        "convex_bicentric": report.convex_bicentric,
        "star_bicentric": report.star_bicentric,
        "exact_arithmetic": report.exact_arithmetic,
    }
    if report.roots is not None:
        out["cyclic_area_roots"] = _rootset_json(report.roots)
    return out


def _cmd_quad(sides: tuple[Fraction, ...], args) -> dict:
    if len(sides) != 4:
        raise _UsageError("quad needs exactly 4 sides")
    report = quad_report(sides)
    return {
        "pitot": report.pitot,
        "is_kite": report.is_kite,
        "r_min": jnum(report.r_min) if report.r_min is not None else None,
        "r_max": jnum(report.r_max) if report.r_max is not None else None,
    }


def _fit_json(fit: CircleFit) -> dict:
    return {
        "center": [jnum(fit.circle.center[0]), jnum(fit.circle.center[1])],
        "radius": jnum(fit.circle.radius),
        "residual": jnum(fit.residual),
        "tangency_inside": fit.tangency_inside,
    }


def _cmd_render(sides: tuple[Fraction, ...], args) -> dict:
    if len(sides) not in (3, 4, 5):
        raise _UsageError("render needs 3, 4, or 5 sides")
    linkage = Linkage(sides)
    if args.kind == "tangential":
        t = tangent_lengths(linkage)
        if not t.all_positive:
            raise NotTangentialError("no tangential configuration to render")
        r = arctan_inradius(t, args.winding)
        config = reconstruct_tangential(t, r, args.winding)
    else:
        config, _circle = reconstruct_cyclic(linkage, args.winding)
    circles = []
    payload: dict = {
        "kind": args.kind,
        "winding": args.winding,
        "vertices": [[jnum(x), jnum(y)] for x, y in config.vertices],
        "area": jnum(shoelace_area(config)),
    }
    if args.incircle:
        fit = incircle_fit(config)
        circles.append(fit.circle)
        payload["incircle"] = _fit_json(fit)
    if args.circumcircle:
        fit = circumcircle_fit(config)
        circles.append(fit.circle)
        payload["circumcircle"] = _fit_json(fit)
    render_svg(config, circles, path=args.output, labels=not args.no_labels)
    payload["output"] = args.output
    return payload


_HANDLERS = {
    "tangent": _cmd_tangent,
    "inradius": _cmd_inradius,
    "robbins": _cmd_robbins,
    "bicentric": _cmd_bicentric,
    "quad": _cmd_quad,
    "render": _cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pentalink",
        description="Tangential, chordal, and bicentric configurations of "
        "planar polygonal linkages.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_sides(p: argparse.ArgumentParser, batch: bool = True) -> None:
        p.add_argument(
            "--sides",
            action="append",
            required=True,
            metavar="A1,A2,...",
            help="comma-separated side lengths; decimals and fractions are "
            "read exactly" + (" (repeat for batch runs)" if batch else ""),
        )

    p = sub.add_parser("tangent", help="tangent lengths and tangentiality (odd n)")
    add_sides(p)
    p = sub.add_parser("inradius", help="both pentagon inradii and tangential areas")
    add_sides(p)
    p = sub.add_parser("robbins", help="cyclic-area polynomial, roots, convex area")
    add_sides(p)
    p = sub.add_parser("bicentric", help="full bicentricity report with resultant")
    add_sides(p)
    p.add_argument(
        "--tolerance",
        type=float,
        default=1e-7,
        help="relative root-matching tolerance (default 1e-7)",
    )
    p = sub.add_parser("quad", help="Pitot criterion and inradius range (n = 4)")
    add_sides(p)
    p = sub.add_parser("render", help="SVG rendering of a reconstructed configuration")
    add_sides(p, batch=False)
    p.add_argument("--kind", choices=("tangential", "cyclic"), default="cyclic")
    p.add_argument("--winding", type=int, choices=(1, 2), default=1)
    p.add_argument("--incircle", action="store_true", help="draw the fitted incircle")
    p.add_argument("--circumcircle", action="store_true", help="draw the fitted circumcircle")
    p.add_argument("--no-labels", action="store_true", help="omit vertex labels")
    p.add_argument("--output", required=True, metavar="FILE.svg")

    for name in ("tangent", "inradius", "robbins", "bicentric", "quad"):
        sub.choices[name].add_argument(
            "--jobs",
            type=int,
            default=1,
            metavar="N",
            help="analyze batched --sides lists with N worker threads",
        )
    return parser


def _run_one(command: str, sides_arg: str, args) -> dict:
    sides = parse_sides(sides_arg)
    if len(sides) not in (3, 4, 5):
        raise _UsageError(f"geometry commands take 3, 4, or 5 sides, got {len(sides)}")
    payload = _HANDLERS[command](sides, args)
    return {
        "tool": "pentalink",
        "version": __version__,
        "command": command,
        "sides": [jnum(s) for s in sides],
        **payload,
    }


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        batches: list[str] = args.sides
        if args.command == "render" and len(batches) != 1:
            raise _UsageError("render takes exactly one --sides list")
        jobs = getattr(args, "jobs", 1)
        if jobs > 1 and len(batches) > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(lambda s: _run_one(args.command, s, args), batches))
        else:
            results = [_run_one(args.command, item, args) for item in batches]
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except PentalinkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    json.dump(results[0] if len(results) == 1 else results, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
