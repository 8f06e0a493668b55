"""Verification reports assembled from the library checks."""

from __future__ import annotations

import time
from typing import Any, Optional

from . import __version__
from .bounds import verify_coefficient_bounds
from .errors import DegeneratePointError
from .harmonic import EpsilonSample, HarmonicMap
from .membership import (
    REFUTE_TOL,
    DiskGrid,
    epsilon_min_margin,
    sense_preserving_margin,
    starlike_margin,
    sufficient_condition_sum,
    wh0_margin,
)

REFUTED = "refuted"
CERTIFIED = "certified"
SUPPORTED = "supported"
UNPROVEN = "unproven-regime"
INCONCLUSIVE = "inconclusive"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUTED = 2


def _margin_status(min_value: float, certified: bool) -> str:
    if min_value < -REFUTE_TOL:
        return REFUTED
    return CERTIFIED if certified else SUPPORTED


def check_report(
    f: HarmonicMap,
    alpha: float,
    grid: DiskGrid,
    eps: EpsilonSample,
    spec_echo: Optional[dict] = None,
    *,
    timed: bool = True,
) -> tuple[dict[str, Any], int]:
    """Run the membership checks on ``f`` and return (report, exit code)."""
    t0 = time.perf_counter()
    checks = []
    s = sufficient_condition_sum(f, alpha)
    certified = s < 1.0
    checks.append({
        "name": "sufficient_condition",
        "basis": "coefficient-sum sufficient condition",
        "status": CERTIFIED if certified else INCONCLUSIVE,
        "numbers": {"sum": s},
    })

    bounds = verify_coefficient_bounds(f, alpha)
    checks.append({
        "name": "coefficient_bounds",
        "basis": "necessary coefficient bounds",
        "status": (CERTIFIED if certified else SUPPORTED) if bounds.passed else REFUTED,
        "numbers": bounds.to_dict(),
    })

    for name, basis, rep in (
        ("wh0_margin", "defining inequality", wh0_margin(f, alpha, grid)),
        ("epsilon_min_margin", "unimodular slices in W(alpha)", epsilon_min_margin(f, alpha, grid, eps)),
        ("sense_preserving", "positive Jacobian", sense_preserving_margin(f, grid)),
    ):
        checks.append({
            "name": name,
            "basis": basis,
            "status": _margin_status(rep.min_value, certified),
            "numbers": rep.to_dict(),
        })

    try:
        rep = starlike_margin(f, grid)
        if alpha >= 1.0:
            status = _margin_status(rep.min_value, certified)
        else:
            status = UNPROVEN
        numbers = rep.to_dict()
    except DegeneratePointError as exc:
        # f vanishing away from the origin contradicts univalence of members
        status = REFUTED
        numbers = {"degenerate_point": [exc.point.real, exc.point.imag]}
    checks.append({
        "name": "starlike",
        "basis": "starlikeness, implied only for alpha >= 1",
        "status": status,
        "numbers": numbers,
    })

    refuted = any(c["status"] == REFUTED for c in checks)
    report: dict[str, Any] = {
        "tool": "harmw",
        "version": __version__,
        "spec": spec_echo,
        "alpha": alpha,
        "order": f.order,
        "grid": grid.describe(),
        "eps_samples": eps.count,
        "checks": checks,
        "verdict": REFUTED if refuted else (CERTIFIED if certified else SUPPORTED),
    }
    if timed:
        report["wall_time_s"] = time.perf_counter() - t0
    return report, EXIT_REFUTED if refuted else EXIT_OK
