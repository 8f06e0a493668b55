"""Reproduction suite: every checkable numeric claim, run at desk scale.

Each ``criterion_*`` function returns a :class:`Criterion` whose numbers are
deterministic, so the serialized bundle is byte-identical across runs.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

import numpy as np

from .bounds import (
    coefficient_bound,
    convex_null_check,
    convex_null_sequence,
    growth_envelope,
    verify_growth,
)
from .convolution import convex_combination, harmonic_convolve, tilde_convolve
from .extremal import (
    conjectured_bounds,
    geometric_series,
    harmonic_koebe,
    koebe_rational_coefficients,
    log_series,
    random_member,
    sharp_single,
    sharp_sum,
)
from .harmonic import EpsilonSample, epsilon_slice
from .membership import (
    DiskGrid,
    epsilon_min_margin,
    halfplane_margin,
    wh0_margin,
)
from .radii import case_radius, golden_radius, cubic_section_min, quintic_radius, section_radius
from .reports import EXIT_REFUTED, REFUTED, check_report
from .series import evaluate, test_operator

R0_REPORTED = 0.433797
GOLDEN_REPORTED = 0.381966011
ALPHAS = (0.0, 0.5, 1.0, 2.0)
GROWTH_ALPHAS = (0.25, 0.5, 0.75, 1.0)
SLACKS = (0.01, 0.1, 0.3)
# tail of the geometric and log factors at this order is far below the
# half-plane margin (~2.5e-4) on the default grid
PHI_ORDER = 16384
SECTION_PAIRS = ((1, 5), (3, 5), (4, 7), (2, 2), (3, 3), (5, 3), (4, 3), (3, 2), (2, 5), (2, 9), (5, 2), (8, 2))
# floating-point allowance for the lower side of 0 <= eps_min - wh0
ROUNDING_SLACK = 1e-12


@dataclass
class Criterion:
    number: int
    name: str
    passed: bool
    numbers: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"id": self.number, "name": self.name, "passed": self.passed, "numbers": self.numbers}


def seeded_members(count: int, alphas=ALPHAS, order: int = 64, seed0: int = 0):
    """``(alpha, member)`` pairs, alpha and slack cycling with the seed."""
    out = []
    for i in range(count):
        alpha = alphas[i % len(alphas)]
        out.append((alpha, random_member(alpha, order, seed0 + i, SLACKS[i % len(SLACKS)])))
    return out


def criterion_quintic() -> Criterion:
    res = quintic_radius(1e-9)
    ok = abs(res.value - R0_REPORTED) <= 1e-6 and res.residual < 1e-9
    return Criterion(1, "quintic radius r0", ok, res.to_dict())


def criterion_golden() -> Criterion:
    r = golden_radius()
    ok = abs(r - GOLDEN_REPORTED) <= 1e-9 and r == (3.0 - math.sqrt(5.0)) / 2.0
    return Criterion(2, "golden radius (3 - sqrt 5)/2", ok, {"value": r, "margin_equation_residual": 2 * r + r * r / (1 - r) - 1})


def criterion_sharpness(grid: DiskGrid) -> Criterion:
    worst_rel, worst_margin = 0.0, 0.0
    for alpha in ALPHAS:
        for n in range(2, 11):
            f = sharp_single(alpha, n)
            bound = coefficient_bound(alpha, n)[0]
            worst_rel = max(worst_rel, abs(abs(f.g[n]) - bound) / bound)
            m = wh0_margin(f, alpha, grid).min_value
            worst_margin = max(worst_margin, abs(m - (1.0 - grid.r_max ** (n - 1))))
    ok = worst_rel <= 1e-15 and worst_margin <= 1e-6
    return Criterion(3, "sharpness of |b_n| bound", ok, {"max_rel_coeff_err": worst_rel, "max_margin_err": worst_margin})


def koebe_table(n_max: int = 20) -> list[dict[str, Any]]:
    ra, rb = koebe_rational_coefficients(n_max)
    rows = []
    for n in range(2, n_max + 1):
        A, B = conjectured_bounds(n)
        rows.append({"n": n, "A_n": A, "B_n": B, "rational_a_n": float(ra[n]), "rational_b_n": float(rb[n])})
    return rows


def criterion_koebe() -> Criterion:
    rows = koebe_table(20)
    err = max(max(abs(r["A_n"] - r["rational_a_n"]), abs(r["B_n"] - r["rational_b_n"])) for r in rows)
    K = harmonic_koebe(20)
    lib_err = max(max(abs(K.h[r["n"]] - r["A_n"]), abs(K.g[r["n"]] - r["B_n"])) for r in rows)
    spot = conjectured_bounds(2) == (2.5, 0.5)
    ok = err <= 1e-9 and lib_err <= 1e-9 and spot
    return Criterion(4, "harmonic Koebe expansion", ok, {"max_err": err, "library_max_err": lib_err, "A2_B2": list(conjectured_bounds(2))})


def criterion_epsilon(grid: DiskGrid, eps: EpsilonSample) -> Criterion:
    factor = 1.0 - math.cos(math.pi / eps.count)
    lo_gap, worst_ratio, ok = math.inf, 0.0, True
    for alpha, f in seeded_members(50):
        e = epsilon_min_margin(f, alpha, grid, eps)
        w = wh0_margin(f, alpha, grid)
        gap = e.min_value - w.min_value
        cap = e.extra["max_abs_Tg"] * factor
        ok &= -ROUNDING_SLACK <= gap <= cap
        lo_gap = min(lo_gap, gap)
        worst_ratio = max(worst_ratio, gap / cap if cap > 0 else 0.0)
    return Criterion(5, "epsilon reduction gap", bool(ok), {"min_gap": lo_gap, "max_gap_over_cap": worst_ratio})


def criterion_closure(grid: DiskGrid) -> Criterion:
    alpha = 1.0
    conv_min = math.inf
    for i in range(100):
        f1 = random_member(alpha, 64, 1000 + 2 * i, SLACKS[i % 3])
        f2 = random_member(alpha, 64, 1001 + 2 * i, SLACKS[(i + 1) % 3])
        conv_min = min(conv_min, wh0_margin(harmonic_convolve(f1, f2), alpha, grid).min_value)

    comb_min = math.inf
    for i in range(10):
        rng = np.random.default_rng(5000 + i)
        members = [random_member(alpha, 64, 6000 + 10 * i + k, SLACKS[k % 3]) for k in range(10)]
        w = rng.dirichlet(np.ones(10))
        w = w / w.sum()
        comb_min = min(comb_min, wh0_margin(convex_combination(w, members), alpha, grid).min_value)

    phis = {"geometric": geometric_series(PHI_ORDER), "log": log_series(PHI_ORDER)}
    hyp = {k: halfplane_margin(phi, grid).min_value for k, phi in phis.items()}
    tilde_min = math.inf
    for k, phi in phis.items():
        if hyp[k] <= 0:
            continue
        for i in range(20):
            f = random_member(alpha, 64, 7000 + i, SLACKS[i % 3])
            tilde_min = min(tilde_min, wh0_margin(tilde_convolve(f, phi), alpha, grid).min_value)
    ok = conv_min > -1e-9 and comb_min > -1e-9 and all(v > 0 for v in hyp.values()) and tilde_min > -1e-9
    return Criterion(6, "closure under convolution and convex combination", ok, {
        "convolution_min": conv_min,
        "combination_min": comb_min,
        "phi_halfplane_margin": hyp,
        "tilde_min": tilde_min,
    })


def criterion_halfplane(grid: DiskGrid) -> Criterion:
    eps8 = EpsilonSample(8).values
    worst = math.inf
    for alpha, f in seeded_members(50, seed0=100):
        for e in eps8:
            worst = min(worst, halfplane_margin(epsilon_slice(f, e), grid).min_value)
    return Criterion(7, "Re(F/z) > 1/2 on slices", worst > -1e-9, {"min_margin": worst})


def convex_null_threshold_scan(steps: int = 400) -> bool:
    """Brute force: the first-pair outcome agrees with sign(6a^2 - a - 1) on a grid of alpha."""
    for i in range(steps + 1):
        a = 2.0 * i / steps
        c = convex_null_sequence(a, 2)
        first_pair = c[0] - c[1] >= c[1] - c[2]
        if first_pair != (6 * a * a - a - 1 >= 0):
            return False
    return True


def criterion_convex_null() -> Criterion:
    results = {a: convex_null_check(a, 50) for a in (0.0, 0.25, 0.5, 1.0, 2.0)}
    ok = all(results[a].passed for a in (0.5, 1.0, 2.0))
    ok &= all(not results[a].passed and results[a].violation == (0, 1, 2) for a in (0.0, 0.25))
    scan = convex_null_threshold_scan()
    return Criterion(8, "convex null sequence threshold", bool(ok and scan), {
        "outcomes": {str(a): (r.violation and list(r.violation)) or "pass" for a, r in results.items()},
        "threshold_scan_agrees": scan,
    })


def criterion_growth(grid: DiskGrid) -> Criterion:
    # 2 Li2(1/2) - 1/2 with Li2(1/2) = pi^2/12 - (ln 2)^2/2
    oracle = math.pi**2 / 6 - math.log(2.0) ** 2 - 0.5
    env = growth_envelope(1.0, 0.5, 64)
    upper_partial = env.upper - env.tail_bound
    upper_ok = abs(upper_partial - oracle) <= env.tail_bound + 1e-6
    members_ok = all(verify_growth(f, a, grid).passed for a, f in seeded_members(50, GROWTH_ALPHAS, seed0=200))
    f = sharp_sum(1.0, 64)
    touch_err = 0.0
    for r in grid.radii:
        e = growth_envelope(1.0, r, 64)
        touch_err = max(touch_err, abs(abs(f(complex(r))) - (e.upper - e.tail_bound)) - e.tail_bound)
    touch_err = float(touch_err)
    touch_ok = touch_err <= 1e-9
    return Criterion(9, "growth envelope", bool(upper_ok and members_ok and touch_ok), {
        "upper_at_half": upper_partial,
        "oracle": oracle,
        "tail_bound": env.tail_bound,
        "members_inside": members_ok,
        "sharp_sum_touch_excess": touch_err,
    })


def criterion_cubic_section(eps: EpsilonSample) -> Criterion:
    worst = math.inf
    for alpha, f in seeded_members(50, seed0=300):
        worst = min(worst, cubic_section_min(f, alpha, eps).min_value)
    fine = DiskGrid(0.5, 64, 7200)
    sharp = cubic_section_min(sharp_sum(1.0, 64), 1.0, eps, fine).min_value
    ok = worst >= 0.25 - 1e-9 and abs(sharp - 0.25) <= 5e-4 and sharp >= 0.25 - 1e-9
    return Criterion(10, "quarter bound for cubic sections", ok, {"members_min": worst, "sharp_sum_min": sharp})


def section_families():
    fams = [(f"sharp_sum(alpha={a})", a, sharp_sum(a, 64)) for a in ALPHAS]
    fams += [(f"sharp_single(alpha={a},n={n})", a, sharp_single(a, n)) for a in (0.0, 1.0) for n in (2, 3, 5)]
    fams += [(f"random_member(seed={400 + i})", a, f) for i, (a, f) in enumerate(seeded_members(20, seed0=400))]
    return fams


def section_table(grid: DiskGrid, tol: float) -> list[dict[str, Any]]:
    rows = []
    for label, alpha, f in section_families():
        for p, q in SECTION_PAIRS:
            case, guaranteed = case_radius(p, q)
            res = section_radius(f, alpha, p, q, tol, grid)
            rows.append({
                "family": label, "alpha": alpha, "p": p, "q": q, "case": case.value,
                "case_radius": guaranteed, "section_radius": res.value,
                "passed": res.value >= guaranteed - 2e-3,
            })
    return rows


def criterion_sections(grid: DiskGrid, tol: float, rows=None) -> Criterion:
    rows = rows if rows is not None else section_table(grid, tol)
    slack = min(r["section_radius"] - r["case_radius"] for r in rows)
    return Criterion(11, "section radii vs guaranteed radii", all(r["passed"] for r in rows), {
        "cases": len(rows), "min_excess_over_guarantee": slack,
    })


def criterion_refutation(grid: DiskGrid, eps: EpsilonSample) -> Criterion:
    spec = {"family": {"name": "harmonic_koebe", "order": 64}}
    report, code = check_report(harmonic_koebe(64), 1.0, grid, eps, spec, timed=False)
    by_name = {c["name"]: c for c in report["checks"]}
    ok = (
        code == EXIT_REFUTED
        and by_name["coefficient_bounds"]["status"] == REFUTED
        and by_name["wh0_margin"]["status"] == REFUTED
    )
    return Criterion(12, "harmonic Koebe refuted for alpha = 1", ok, {
        "exit_code": code,
        "a2": float(harmonic_koebe(64).h[2].real),
        "a2_bound": coefficient_bound(1.0, 2)[1],
        "wh0_min": by_name["wh0_margin"]["numbers"]["min_value"],
    })


def run_all(grid: DiskGrid | None = None, eps: EpsilonSample | None = None, tol: float = 1e-9):
    """Run criteria 1-12; returns (criteria, tables)."""
    grid = grid or DiskGrid()
    eps = eps or EpsilonSample()
    sections = section_table(grid, tol)
    jobs: list[Callable[[], Criterion]] = [
        criterion_quintic,
        criterion_golden,
        lambda: criterion_sharpness(grid),
        criterion_koebe,
        lambda: criterion_epsilon(grid, eps),
        lambda: criterion_closure(grid),
        lambda: criterion_halfplane(grid),
        criterion_convex_null,
        lambda: criterion_growth(grid),
        lambda: criterion_cubic_section(eps),
        lambda: criterion_sections(grid, tol, sections),
        lambda: criterion_refutation(grid, eps),
    ]
    return [job() for job in jobs], {"koebe_table": koebe_table(20), "section_radii": sections}


def write_bundle(out_dir: Path, criteria: list[Criterion], tables: dict, params: dict) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    bundle = {
        "tool": "harmw",
        "parameters": params,
        "constants": {
            "r0": quintic_radius(1e-9).value,
            "golden_radius": golden_radius(),
        },
        "criteria": [c.to_dict() for c in criteria],
        "koebe_table": tables["koebe_table"],
        "all_passed": all(c.passed for c in criteria),
    }
    path = out_dir / "bundle.json"
    path.write_text(json.dumps(bundle, sort_keys=True, indent=2) + "\n")
    _write_csv(out_dir / "koebe_table.csv", tables["koebe_table"])
    _write_csv(out_dir / "section_radii.csv", tables["section_radii"])
    _write_csv(out_dir / "criteria.csv", [{"id": c.number, "name": c.name, "passed": c.passed} for c in criteria])
    return path


def _write_csv(path: Path, rows: list[dict]):
    with path.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
