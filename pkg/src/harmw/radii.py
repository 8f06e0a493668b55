"""Radius computations for partial sums."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np

from .errors import BracketError, EvaluationError, ParameterError
from .harmonic import EpsilonSample, HarmonicMap, dilate_map, section
from .membership import DiskGrid, MarginReport, epsilon_min_margin, wh0_margin

SCAN_STEP = 0.05
SCAN_START = 1e-3
MAX_BISECT_ITER = 200


@dataclass(frozen=True)
class RadiusResult:
    value: float
    bracket: tuple[float, float]
    residual: float
    iterations: int
    method: str

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "bracket": list(self.bracket),
            "residual": self.residual,
            "iterations": self.iterations,
            "method": self.method,
        }


def _eval(objective: Callable[[float], float], x: float) -> float:
    y = float(objective(x))
    if not math.isfinite(y):
        raise EvaluationError(f"objective is not finite at {x!r}")
    return y


def bisect_root(
    objective: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float,
    ftol: Optional[float] = None,
) -> RadiusResult:
    """Plain bisection until the bracket is at most ``tol`` wide.

    With ``ftol`` given, halving continues until also ``|objective(mid)| < ftol``
    (capped at ``MAX_BISECT_ITER`` halvings).
    """
    if not tol > 0:
        raise ParameterError("tol must be > 0")
    lo, hi = float(lo), float(hi)
    flo, fhi = _eval(objective, lo), _eval(objective, hi)
    if flo == 0.0:
        return RadiusResult(lo, (lo, lo), 0.0, 0, "bisection")
    if fhi == 0.0:
        return RadiusResult(hi, (hi, hi), 0.0, 0, "bisection")
    if flo * fhi > 0:
        raise BracketError(f"no sign change on [{lo}, {hi}]: f(lo)={flo:.3g}, f(hi)={fhi:.3g}")
    it = 0
    while True:
        mid = 0.5 * (lo + hi)
        fmid = _eval(objective, mid)
        done = hi - lo <= tol and (ftol is None or abs(fmid) < ftol)
        if done or fmid == 0.0 or it >= MAX_BISECT_ITER:
            return RadiusResult(mid, (lo, hi), abs(fmid), it, "bisection")
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
        it += 1


def quintic(r: float) -> float:
    return 1.0 - 2.0 * r - r**3 - r**4 - r**5


def quintic_radius(tol: float = 1e-9) -> RadiusResult:
    """Root of ``1 - 2r - r^3 - r^4 - r^5`` in [0, 1/2] (about 0.433797)."""
    return bisect_root(quintic, 0.0, 0.5, tol, ftol=tol)


def golden_radius() -> float:
    """``(3 - sqrt 5)/2``, the root of ``2r + r^2/(1-r) = 1`` below 1."""
    return (3.0 - math.sqrt(5.0)) / 2.0


class SectionCase(str, Enum):
    """Which proven statement covers ``s_{p,q}``; values name the (p, q) condition."""

    P_ONE = "p1_q_ge_2"
    P_LT_Q = "3_le_p_lt_q"
    P_EQ_Q = "p_eq_q_ge_2"
    P_GT_Q = "p_gt_q_ge_3"
    P3_Q2 = "p3_q2"
    P2_LT_Q = "p2_lt_q"
    P_GE_4_Q2 = "p_ge_4_q2"
    UNSPECIFIED = "unspecified"


def classify_section(p: int, q: int) -> SectionCase:
    if p < 1 or q < 1:
        raise ParameterError("p and q must be >= 1")
    if q == 1:
        return SectionCase.UNSPECIFIED
    if p == 1:
        return SectionCase.P_ONE
    if p == q:
        return SectionCase.P_EQ_Q
    if p == 2:
        return SectionCase.P2_LT_Q
    if q == 2:
        return SectionCase.P3_Q2 if p == 3 else SectionCase.P_GE_4_Q2
    # p, q >= 3 and p != q
    return SectionCase.P_LT_Q if p < q else SectionCase.P_GT_Q


def case_radius(p: int, q: int) -> tuple[SectionCase, Optional[float]]:
    """Case tag and guaranteed radius of membership of ``s_{p,q}(f)`` (None if not stated)."""
    case = classify_section(p, q)
    if case is SectionCase.UNSPECIFIED:
        return case, None
    if case is SectionCase.P2_LT_Q:
        return case, golden_radius()
    if case is SectionCase.P_GE_4_Q2:
        return case, quintic_radius().value
    return case, 0.5


def cubic_section_min(
    f: HarmonicMap,
    alpha: float,
    eps: Optional[EpsilonSample] = None,
    grid: Optional[DiskGrid] = None,
) -> MarginReport:
    """Minimum of ``Re T[s_3(h) + eps s_3(g)]`` over ``|z| <= 1/2``; compare against 1/4."""
    grid = grid or DiskGrid(0.5)
    if grid.r_max > 0.5:
        raise ParameterError("cubic_section_min needs a grid with r_max <= 1/2")
    rep = epsilon_min_margin(section(f, 3, 3), alpha, grid, eps)
    return MarginReport(rep.min_value, rep.argmin, rep.grid, "cubic_section_min", rep.extra)


def section_radius(
    f: HarmonicMap,
    alpha: float,
    p: int,
    q: int,
    tol: float = 1e-9,
    grid: Optional[DiskGrid] = None,
) -> RadiusResult:
    """Largest dilation ``r`` in (0, 1] for which ``s_{p,q}(f)`` dilated by r has nonnegative margin.

    The sampled margin of the dilated section on ``grid`` covers the original
    section on ``|z| <= r * grid.r_max``.
    """
    grid = grid or DiskGrid()
    s = section(f, p, q)

    def objective(r: float) -> float:
        return wh0_margin(dilate_map(s, r), alpha, grid).min_value

    first = objective(SCAN_START)
    if first < 0:
        raise BracketError(f"section s_{p},{q} already fails at r = {SCAN_START}")
    prev = SCAN_START
    steps = np.round(np.arange(SCAN_STEP, 1.0 + 1e-12, SCAN_STEP), 12)
    for r in steps:
        r = float(min(r, 1.0))
        val = objective(r)
        if val < 0:
            res = bisect_root(objective, prev, r, tol)
            # report the nonnegative side of the final bracket
            lo = res.bracket[0]
            return RadiusResult(lo, res.bracket, abs(objective(lo)), res.iterations, "scan+bisection")
        prev = r
    return RadiusResult(1.0, (1.0, 1.0), abs(val), 0, "scan")
