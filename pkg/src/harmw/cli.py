"""Command-line interface: ``harmw <subcommand> ...``.

Exit codes: 0 nothing refuted, 2 mathematical refutation, 1 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import specfile
from .bounds import verify_coefficient_bounds, verify_growth
from .config import Defaults, from_env
from .convolution import harmonic_convolve, tilde_convolve
from .errors import HarmwError
from .harmonic import EpsilonSample, HarmonicMap, evaluate_harmonic
from .membership import DiskGrid, wh0_margin
from .radii import case_radius, golden_radius, quintic_radius, section_radius
from .reports import EXIT_OK, EXIT_REFUTED, EXIT_USAGE, check_report
from .reproduce import SECTION_PAIRS, run_all, write_bundle


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser, d: Defaults, *, grid=True, spec=True):
    if spec:
        p.add_argument("spec", help="function-spec JSON file")
        p.add_argument("--seed", type=int, help="override the seed of a random_member family")
        p.add_argument("--order", type=int, help="override the order of a family that takes one")
    p.add_argument("--alpha", type=float, help=f"class parameter (default: spec value, else {d.alpha})")
    if grid:
        p.add_argument("--grid-radial", type=int, default=d.grid_radial)
        p.add_argument("--grid-angular", type=int, default=d.grid_angular)
        p.add_argument("--rmax", type=float, default=d.rmax)
    p.add_argument("--out", help="write output here instead of stdout")


def build_parser(d: Optional[Defaults] = None) -> argparse.ArgumentParser:
    d = d or from_env()
    parser = _Parser(prog="harmw", description="Verification toolkit for the harmonic class W0_H(alpha).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="membership margins and certificates")
    _add_common(p, d)
    p.add_argument("--eps-samples", type=int, default=d.eps_samples)

    p = sub.add_parser("bounds", help="coefficient bounds")
    _add_common(p, d, grid=False)

    p = sub.add_parser("growth", help="growth envelope at every grid point")
    _add_common(p, d)
    p.add_argument("--allow-out-of-hypothesis", action="store_true", help="evaluate alpha outside (0, 1]")

    p = sub.add_parser("convolve", help="harmonic or tilde convolution of two specs")
    _add_common(p, d)
    p.add_argument("other", help="second spec; with --tilde its analytic part is the factor phi")
    p.add_argument("--tilde", action="store_true")

    p = sub.add_parser("sections", help="empirical membership radii of partial sums")
    _add_common(p, d)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--tol", type=float, default=d.tol)

    p = sub.add_parser("radius", help="guaranteed radii (quintic root, (3 - sqrt 5)/2, case table)")
    p.add_argument("--tol", type=float, default=d.tol)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--out")

    p = sub.add_parser("reproduce", help="run the reproduction suite and write a bundle")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--grid-radial", type=int, default=d.grid_radial)
    p.add_argument("--grid-angular", type=int, default=d.grid_angular)
    p.add_argument("--rmax", type=float, default=d.rmax)
    p.add_argument("--eps-samples", type=int, default=d.eps_samples)
    p.add_argument("--tol", type=float, default=d.tol)

    p = sub.add_parser("emit-boundary", help="CSV of f(r e^{i theta})")
    p.add_argument("spec")
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--samples", type=int, default=720)
    p.add_argument("--out", required=True)
    return parser


def _load(path: str, args) -> tuple[specfile.FunctionSpec, HarmonicMap]:
    spec = specfile.load(path)
    fam = spec.family
    if fam is not None:
        overrides = {}
        if getattr(args, "seed", None) is not None and fam.seed is not None:
            overrides["seed"] = args.seed
        if getattr(args, "order", None) is not None and fam.order is not None:
            overrides["order"] = args.order
        if overrides:
            spec = dataclasses.replace(spec, family=dataclasses.replace(fam, **overrides))
    return spec, spec.build()


def _alpha(args, spec: Optional[specfile.FunctionSpec], d: Defaults) -> float:
    if args.alpha is not None:
        return args.alpha
    if spec is not None and spec.default_alpha is not None:
        return spec.default_alpha
    return d.alpha


def _grid(args) -> DiskGrid:
    return DiskGrid(args.rmax, args.grid_radial, args.grid_angular)


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, default=float)


def cmd_check(args, d: Defaults) -> int:
    spec, f = _load(args.spec, args)
    report, code = check_report(f, _alpha(args, spec, d), _grid(args), EpsilonSample(args.eps_samples), spec.to_dict())
    _emit(_dump(report), args.out)
    return code


def cmd_bounds(args, d: Defaults) -> int:
    spec, f = _load(args.spec, args)
    alpha = _alpha(args, spec, d)
    rep = verify_coefficient_bounds(f, alpha)
    _emit(_dump({"spec": spec.to_dict(), "alpha": alpha, "bounds": rep.to_dict()}), args.out)
    return EXIT_OK if rep.passed else EXIT_REFUTED


def cmd_growth(args, d: Defaults) -> int:
    spec, f = _load(args.spec, args)
    alpha = _alpha(args, spec, d)
    rep = verify_growth(f, alpha, _grid(args), max(f.order, d.order), allow_out_of_hypothesis=args.allow_out_of_hypothesis)
    out = {"spec": spec.to_dict(), "alpha": alpha, "grid": _grid(args).describe(), "growth": rep.to_dict(),
           "status": "unproven-regime" if not rep.proven_regime else ("supported" if rep.passed else "refuted")}
    _emit(_dump(out), args.out)
    return EXIT_OK if rep.passed or not rep.proven_regime else EXIT_REFUTED


def cmd_convolve(args, d: Defaults) -> int:
    spec1, f1 = _load(args.spec, args)
    spec2, f2 = _load(args.other, args)
    alpha = _alpha(args, spec1, d)
    result = tilde_convolve(f1, f2.h) if args.tilde else harmonic_convolve(f1, f2)
    rep = wh0_margin(result, alpha, _grid(args))
    out_spec = specfile.FunctionSpec.from_map(result, alpha)
    if args.out:
        specfile.dump(out_spec, args.out)
        sys.stdout.write(_dump({"alpha": alpha, "wh0_margin": rep.to_dict()}) + "\n")
    else:
        sys.stdout.write(_dump({"alpha": alpha, "wh0_margin": rep.to_dict(), "result": out_spec.to_dict()}) + "\n")
    return EXIT_REFUTED if rep.refuted else EXIT_OK


def cmd_sections(args, d: Defaults) -> int:
    spec, f = _load(args.spec, args)
    alpha = _alpha(args, spec, d)
    if (args.p is None) != (args.q is None):
        raise UsageError("give both --p and --q, or neither")
    pairs = [(args.p, args.q)] if args.p is not None else list(SECTION_PAIRS)
    grid = _grid(args)
    rows, code = [], EXIT_OK
    for p, q in pairs:
        case, guaranteed = case_radius(p, q)
        res = section_radius(f, alpha, p, q, args.tol, grid)
        row = {"p": p, "q": q, "case": case.value, "guaranteed_radius": guaranteed,
               "section_radius": res.to_dict(), "effective_radius": res.value * grid.r_max}
        if guaranteed is not None and res.value < guaranteed - 2e-3:
            row["status"] = "refuted"
            code = EXIT_REFUTED
        rows.append(row)
    _emit(_dump({"spec": spec.to_dict(), "alpha": alpha, "grid": grid.describe(), "sections": rows}), args.out)
    return code


def cmd_radius(args, d: Defaults) -> int:
    out = {"quintic_radius": quintic_radius(args.tol).to_dict(), "golden_radius": golden_radius()}
    if args.p is not None or args.q is not None:
        if args.p is None or args.q is None:
            raise UsageError("give both --p and --q")
        case, r = case_radius(args.p, args.q)
        out["case"] = {"p": args.p, "q": args.q, "case": case.value, "radius": r}
    _emit(_dump(out), args.out)
    return EXIT_OK


def cmd_reproduce(args, d: Defaults) -> int:
    grid = _grid(args)
    eps = EpsilonSample(args.eps_samples)
    criteria, tables = run_all(grid, eps, args.tol)
    params = {"grid": grid.describe(), "eps_samples": eps.count, "tol": args.tol}
    path = write_bundle(Path(args.out), criteria, tables, params)
    for c in criteria:
        print(f"[{'PASS' if c.passed else 'FAIL'}] {c.number:2d} {c.name}", file=sys.stderr)
    print(f"bundle written to {path}", file=sys.stderr)
    return EXIT_OK if all(c.passed for c in criteria) else EXIT_REFUTED


def cmd_emit_boundary(args, d: Defaults) -> int:
    if not (0.0 < args.radius < 1.0):
        raise UsageError(f"--radius must lie in (0, 1), got {args.radius}")
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    _, f = _load(args.spec, args)
    theta = 2.0 * np.pi * np.arange(args.samples) / args.samples
    w = evaluate_harmonic(f, args.radius * (np.cos(theta) + 1j * np.sin(theta)))
    with open(args.out, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["theta", "re", "im"])
        for t, v in zip(theta, w):
            writer.writerow([repr(float(t)), repr(float(v.real)), repr(float(v.imag))])
    return EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "bounds": cmd_bounds,
    "growth": cmd_growth,
    "convolve": cmd_convolve,
    "sections": cmd_sections,
    "radius": cmd_radius,
    "reproduce": cmd_reproduce,
    "emit-boundary": cmd_emit_boundary,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        d = from_env()
    except ValueError as exc:
        print(f"harmw: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    args = build_parser(d).parse_args(argv)
    try:
        return COMMANDS[args.command](args, d)
    except (HarmwError, UsageError, OSError, ValueError) as exc:
        print(f"harmw {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
